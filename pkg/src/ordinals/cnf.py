"""Cantor normal forms below epsilon_0, encoded as binary trees.

A tree ``node(a, b)`` is read as ``w^a + b``; the tree is in normal form when
every node satisfies ``left(b) <= a``.  Raw trees (:class:`Leaf`,
:class:`Node`) are an unchecked carrier; :class:`Cnf` values are validated
and closed under every operation in this module.

Everything here is decidable and pure.  Long right spines (large
coefficients) are walked iteratively, so only the nesting depth of
exponents consumes Python stack.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple, Union

__all__ = [
    "Leaf", "Node", "LEAF", "Tree", "left", "is_cnf", "compare_trees",
    "Cnf", "Ordering", "ZERO", "ONE", "OMEGA",
    "IsZero", "IsSuccessor", "IsLimit", "CnfClass",
    "InvalidCnf", "PreconditionViolated", "DivisionByZero", "NotALimit",
    "compare", "add", "mul", "omega_pow", "sub", "divmod", "classify",
    "fund_eval", "from_nat", "succ_of", "to_text",
]


class InvalidCnf(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class NotALimit(ValueError):
    pass


class Ordering(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"

    def flip(self) -> "Ordering":
        if self is Ordering.LESS:
            return Ordering.GREATER
        if self is Ordering.GREATER:
            return Ordering.LESS
        return self


LESS, EQUAL, GREATER = Ordering.LESS, Ordering.EQUAL, Ordering.GREATER


# -- raw binary trees ----------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    def __repr__(self) -> str:
        return "Leaf"


@dataclass(frozen=True)
class Node:
    left: "Tree"
    right: "Tree"


Tree = Union[Leaf, Node]
LEAF = Leaf()


def left(t: Tree) -> Tree:
    return t.left if isinstance(t, Node) else LEAF


def compare_trees(s: Tree, t: Tree) -> Ordering:
    """Lexicographic order on raw trees, generated by leaf < node and the two node rules."""
    while True:
        if isinstance(s, Leaf):
            return EQUAL if isinstance(t, Leaf) else LESS
        if isinstance(t, Leaf):
            return GREATER
        c = compare_trees(s.left, t.left)
        if c is not EQUAL:
            return c
        s, t = s.right, t.right


def is_cnf(t: Tree) -> bool:
    while isinstance(t, Node):
        if not is_cnf(t.left):
            return False
        if compare_trees(left(t.right), t.left) is GREATER:
            return False
        t = t.right
    return True


# -- validated normal forms ------------------------------------------------------


class Cnf:
    """A validated Cantor normal form ``w^head + tail`` (or zero).

    Instances are immutable and hashable; equality is structural.  Build them
    with :meth:`node`, :meth:`from_tree`, :func:`from_nat` or the arithmetic
    functions, never by calling the class directly.
    """

    __slots__ = ("head", "tail", "_hash")

    head: Optional["Cnf"]
    tail: Optional["Cnf"]

    def __init__(self, head, tail, _hash):
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "_hash", _hash)

    def __setattr__(self, name, value):
        raise AttributeError("Cnf values are immutable")

    @staticmethod
    def _mk(head: "Cnf", tail: "Cnf") -> "Cnf":
        return Cnf(head, tail, hash((head._hash, tail._hash)))

    @classmethod
    def node(cls, a: "Cnf", b: "Cnf") -> "Cnf":
        """``w^a + b``; only the root condition needs checking, both parts being valid."""
        if b.head is not None and compare(b.head, a) is GREATER:
            raise InvalidCnf(f"node({a}, {b}): left({b}) > {a}")
        return cls._mk(a, b)

    @classmethod
    def from_tree(cls, t: Tree) -> "Cnf":
        if not is_cnf(t):
            raise InvalidCnf(f"{t!r} is not in Cantor normal form")
        spine = []
        while isinstance(t, Node):
            spine.append(cls.from_tree(t.left))
            t = t.right
        return _prepend(spine, ZERO)

    @property
    def tree(self) -> Tree:
        spine = [e.tree for e in self.terms()]
        t: Tree = LEAF
        for e in reversed(spine):
            t = Node(e, t)
        return t

    @property
    def is_zero(self) -> bool:
        return self.head is None

    def terms(self) -> List["Cnf"]:
        """Exponents of the spine, one entry per w-power (so repeated)."""
        out = []
        x = self
        while x.head is not None:
            out.append(x.head)
            x = x.tail
        return out

    def coefficients(self) -> List[Tuple["Cnf", int]]:
        """Grouped spine: ``[(e1, k1), ...]`` with strictly descending exponents."""
        out: List[Tuple[Cnf, int]] = []
        for e in self.terms():
            if out and out[-1][0] == e:
                out[-1] = (e, out[-1][1] + 1)
            else:
                out.append((e, 1))
        return out

    def to_int(self) -> Optional[int]:
        n = 0
        x = self
        while x.head is not None:
            if x.head.head is not None:
                return None
            n += 1
            x = x.tail
        return n

    @property
    def is_finite(self) -> bool:
        return self.to_int() is not None

    def size(self) -> int:
        """Number of nodes of the underlying tree."""
        return sum(1 + e.size() for e in self.terms())

    def height(self) -> int:
        """Exponent nesting depth; finite values > 0 have height 1."""
        return max((1 + e.height() for e in self.terms()), default=0)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Cnf):
            return NotImplemented
        if self._hash != other._hash:
            return False
        return compare(self, other) is EQUAL

    def __lt__(self, other):
        return compare(self, _coerce(other)) is LESS

    def __le__(self, other):
        return compare(self, _coerce(other)) is not GREATER

    def __gt__(self, other):
        return compare(self, _coerce(other)) is GREATER

    def __ge__(self, other):
        return compare(self, _coerce(other)) is not LESS

    def __add__(self, other):
        return add(self, _coerce(other))

    def __radd__(self, other):
        return add(_coerce(other), self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    def __rmul__(self, other):
        return mul(_coerce(other), self)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Cnf({to_text(self)!r})"


def _coerce(x) -> Cnf:
    if isinstance(x, Cnf):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return from_nat(x)
    raise TypeError(f"cannot use {type(x).__name__} as an ordinal")


ZERO = Cnf(None, None, 0)


def _prepend(exps: List[Cnf], tail: Cnf) -> Cnf:
    # caller guarantees exps is descending and its last entry >= left(tail)
    for e in reversed(exps):
        tail = Cnf._mk(e, tail)
    return tail


def from_nat(n: int) -> Cnf:
    if n < 0:
        raise ValueError("natural numbers only")
    return _prepend([ZERO] * n, ZERO)


ONE = from_nat(1)
OMEGA = Cnf._mk(ONE, ZERO)


def compare(a: Cnf, b: Cnf) -> Ordering:
    while True:
        if a is b:
            return EQUAL
        if a.head is None:
            return EQUAL if b.head is None else LESS
        if b.head is None:
            return GREATER
        c = compare(a.head, b.head)
        if c is not EQUAL:
            return c
        a, b = a.tail, b.tail


def add(a: Cnf, b: Cnf) -> Cnf:
    if b.head is None:
        return a
    lead = b.head
    kept = []
    x = a
    # (w^e + c) + b is b itself when e < lead(b), else w^e + (c + b)
    while x.head is not None and compare(x.head, lead) is not LESS:
        kept.append(x.head)
        x = x.tail
    return _prepend(kept, b)


def mul(a: Cnf, b: Cnf) -> Cnf:
    if a.head is None or b.head is None:
        return ZERO
    lead = a.head
    result = ZERO
    # a * (w^e + d) = (a if e = 0 else w^(lead a + e)) + a * d
    for e in reversed(b.terms()):
        part = a if e.head is None else Cnf._mk(add(lead, e), ZERO)
        result = add(part, result)
    return result


def omega_pow(a: Cnf) -> Cnf:
    return Cnf._mk(a, ZERO)


def succ_of(a: Cnf) -> Cnf:
    return add(a, ONE)


def sub(a: Cnf, b: Cnf) -> Cnf:
    """The unique ``c`` with ``a + c == b``; requires ``a <= b``."""
    x, y = a, b
    while x.head is not None and y.head is not None and x.head == y.head:
        x, y = x.tail, y.tail
    if x.head is None:
        return y
    if y.head is None or compare(x.head, y.head) is GREATER:
        raise PreconditionViolated(f"sub: {a} > {b}")
    # remaining x is absorbed by y, whose lead exponent is strictly larger
    return y


def divmod(a: Cnf, b: Cnf) -> Tuple[Cnf, Cnf]:
    """Left division: ``(c, d)`` with ``b * c + d == a`` and ``d < b``."""
    if b.head is None:
        raise DivisionByZero("division by the zero ordinal")
    if compare(a, b) is LESS:
        return ZERO, a
    beta = b.head
    high = []
    x = a
    while x.head is not None and compare(x.head, beta) is GREATER:
        high.append(x.head)
        x = x.tail
    low = x
    # b * w^g = w^(beta + g) for g > 0, so each high term contributes w^(e - beta)
    q_high = _prepend([sub(beta, e) for e in high], ZERO)
    k = _leading_count(low, beta)
    k1 = _leading_count(b, beta)
    n = k // k1
    bn = mul(b, from_nat(n))
    if compare(bn, low) is GREATER:
        n -= 1
        bn = mul(b, from_nat(n))
    return add(q_high, from_nat(n)), sub(bn, low)


def _leading_count(x: Cnf, e: Cnf) -> int:
    n = 0
    while x.head is not None and x.head == e:
        n += 1
        x = x.tail
    return n


# -- classification ------------------------------------------------------------


@dataclass(frozen=True)
class IsZero:
    pass


@dataclass(frozen=True)
class IsSuccessor:
    pred: Cnf


@dataclass(frozen=True)
class IsLimit:
    of: Cnf

    def fund(self, n: int) -> Cnf:
        return fund_eval(self.of, n)

    def __call__(self, n: int) -> Cnf:
        return fund_eval(self.of, n)

    def values(self) -> Iterator[Cnf]:
        n = 0
        while True:
            yield fund_eval(self.of, n)
            n += 1


CnfClass = Union[IsZero, IsSuccessor, IsLimit]


def classify(a: Cnf) -> CnfClass:
    if a.head is None:
        return IsZero()
    exps = a.terms()
    if exps[-1].head is None:
        return IsSuccessor(_prepend(exps[:-1], ZERO))
    return IsLimit(a)


def fund_eval(a: Cnf, n: int) -> Cnf:
    """The n-th element of the standard fundamental sequence of a limit ``a``.

    Only the last w-power ``w^e`` of ``a`` moves: ``w^(p+1)`` steps through
    ``w^p * n`` and ``w^e`` with ``e`` a limit steps through ``w^(e[n])``.
    """
    if n < 0:
        raise ValueError("index must be a natural number")
    exps = a.terms()
    if not exps or exps[-1].head is None:
        raise NotALimit(f"{a} is not a limit")
    last = exps[-1]
    c = classify(last)
    if isinstance(c, IsSuccessor):
        tail = mul(omega_pow(c.pred), from_nat(n))
    else:
        tail = omega_pow(fund_eval(last, n))
    return _prepend(exps[:-1], tail)


# -- rendering -----------------------------------------------------------------


def to_text(a: Cnf, omega: str = "w") -> str:
    """Canonical ``w^e1*k1 + ... + k`` form, re-parseable by :mod:`ordinals.expr`."""
    n = a.to_int()
    if n is not None:
        return str(n)
    parts = []
    for e, k in a.coefficients():
        if e.head is None:
            parts.append(str(k))
            continue
        et = to_text(e, omega)
        if not (e.is_finite or _single_power(e)):
            et = f"({et})"
        parts.append(f"{omega}^{et}" + (f"*{k}" if k > 1 else ""))
    return " + ".join(parts)


def _single_power(e: Cnf) -> bool:
    return e.head is not None and e.tail.head is None
