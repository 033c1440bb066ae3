"""Ordinal expressions: parsing, printing and evaluation to Cantor normal form.

Grammar (whitespace is ignored)::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := atom ('^' factor)?
    atom   := [0-9]+ | 'w' | '(' expr ')'

``^`` is right-associative and binds tighter than ``*``, which binds tighter
than ``+``.  The Greek letter omega is accepted as a synonym for ``w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Union

from . import cnf
from .cnf import Cnf

__all__ = [
    "NatLit", "OmegaSym", "Add", "Mul", "Pow", "Paren", "OrdExpr",
    "ParseError", "EvalError", "UnsupportedExponent", "ExpressionTooLarge",
    "parse", "pretty", "evaluate", "parse_cnf",
]

OMEGA_UTF8 = "ω".encode()
# finite values are unary spines, so anything bigger than this is refused
SIZE_LIMIT = 100_000


@dataclass(frozen=True)
class NatLit:
    n: int


@dataclass(frozen=True)
class OmegaSym:
    pass


@dataclass(frozen=True)
class Add:
    left: "OrdExpr"
    right: "OrdExpr"


@dataclass(frozen=True)
class Mul:
    left: "OrdExpr"
    right: "OrdExpr"


@dataclass(frozen=True)
class Pow:
    base: "OrdExpr"
    exp: "OrdExpr"


@dataclass(frozen=True)
class Paren:
    inner: "OrdExpr"


OrdExpr = Union[NatLit, OmegaSym, Add, Mul, Pow, Paren]
W = OmegaSym()


class ParseError(ValueError):
    def __init__(self, offset: int, expected: FrozenSet[str], found: str):
        self.offset = offset
        self.expected = expected
        self.found = found
        want = ", ".join(sorted(expected))
        super().__init__(f"at offset {offset}: expected one of {want}; found {found}")


class EvalError(ValueError):
    pass


class UnsupportedExponent(EvalError):
    pass


class ExpressionTooLarge(EvalError):
    pass


# -- parsing ---------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.src = text.encode()
        self.pos = 0

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self) -> bytes:
        self.skip()
        if self.src.startswith(OMEGA_UTF8, self.pos):
            return OMEGA_UTF8
        return self.src[self.pos:self.pos + 1]

    def fail(self, expected):
        self.skip()
        tok = self.peek()
        found = "end of input" if not tok else repr(tok.decode(errors="replace"))
        raise ParseError(self.pos, frozenset(expected), found)

    def expr(self) -> OrdExpr:
        e = self.term()
        while self.peek() == b"+":
            self.pos += 1
            e = Add(e, self.term())
        return e

    def term(self) -> OrdExpr:
        e = self.factor()
        while self.peek() == b"*":
            self.pos += 1
            e = Mul(e, self.factor())
        return e

    def factor(self) -> OrdExpr:
        base = self.atom()
        if self.peek() == b"^":
            self.pos += 1
            return Pow(base, self.factor())
        return base

    def atom(self) -> OrdExpr:
        tok = self.peek()
        if tok in (b"w", OMEGA_UTF8):
            self.pos += len(tok)
            return W
        if tok == b"(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != b")":
                self.fail({"')'", "'+'", "'*'", "'^'"})
            self.pos += 1
            return Paren(inner)
        if tok.isdigit():
            start = self.pos
            while self.pos < len(self.src) and self.src[self.pos:self.pos + 1].isdigit():
                self.pos += 1
            return NatLit(int(self.src[start:self.pos]))
        self.fail({"natural", "'w'", "'('"})


def parse(text: str) -> OrdExpr:
    p = _Parser(text)
    e = p.expr()
    if p.peek():
        p.fail({"'+'", "'*'", "'^'", "end of input"})
    return e


# -- printing --------------------------------------------------------------------


def _wrap(e: OrdExpr, omega: str, bad) -> str:
    s = pretty(e, omega)
    return f"({s})" if isinstance(e, bad) else s


def pretty(e: OrdExpr, omega: str = "w") -> str:
    """Print ``e``; brackets appear only where the tree has them or needs them."""
    if isinstance(e, NatLit):
        return str(e.n)
    if isinstance(e, OmegaSym):
        return omega
    if isinstance(e, Paren):
        return f"({pretty(e.inner, omega)})"
    if isinstance(e, Add):
        return f"{pretty(e.left, omega)} + {_wrap(e.right, omega, Add)}"
    if isinstance(e, Mul):
        return f"{_wrap(e.left, omega, Add)}*{_wrap(e.right, omega, (Add, Mul))}"
    if isinstance(e, Pow):
        return f"{_wrap(e.base, omega, (Add, Mul, Pow))}^{_wrap(e.exp, omega, (Add, Mul))}"
    raise TypeError(f"not an expression: {e!r}")


# -- evaluation ------------------------------------------------------------------


def _nat(n: int) -> Cnf:
    if n > SIZE_LIMIT:
        raise ExpressionTooLarge(f"natural {n} exceeds {SIZE_LIMIT}")
    return cnf.from_nat(n)


def _add(a: Cnf, b: Cnf) -> Cnf:
    if a.size() + b.size() > SIZE_LIMIT:
        raise ExpressionTooLarge("sum too large to build")
    return cnf.add(a, b)


def _mul(a: Cnf, b: Cnf) -> Cnf:
    if a.size() * b.size() > SIZE_LIMIT:
        raise ExpressionTooLarge("product too large to build")
    return cnf.mul(a, b)


def evaluate(e: OrdExpr) -> Cnf:
    if isinstance(e, NatLit):
        return _nat(e.n)
    if isinstance(e, OmegaSym):
        return cnf.OMEGA
    if isinstance(e, Paren):
        return evaluate(e.inner)
    if isinstance(e, Add):
        return _add(evaluate(e.left), evaluate(e.right))
    if isinstance(e, Mul):
        return _mul(evaluate(e.left), evaluate(e.right))
    if isinstance(e, Pow):
        base, x = evaluate(e.base), evaluate(e.exp)
        if base == cnf.OMEGA:
            return cnf.omega_pow(x)
        n = x.to_int()
        if n is None:
            raise UnsupportedExponent(
                f"({cnf.to_text(base)})^({cnf.to_text(x)}): only base w takes infinite exponents")
        b = base.to_int()
        if b is not None:
            if b >= 2 and n > SIZE_LIMIT.bit_length():
                raise ExpressionTooLarge(f"{b}^{n} exceeds {SIZE_LIMIT}")
            return _nat(b ** n)
        # multiplication is associative, so squaring is fine
        out, sq = cnf.ONE, base
        while n:
            if n & 1:
                out = _mul(out, sq)
            n >>= 1
            if n:
                sq = _mul(sq, sq)
        return out
    raise TypeError(f"not an expression: {e!r}")


def parse_cnf(text: str) -> Cnf:
    return evaluate(parse(text))
