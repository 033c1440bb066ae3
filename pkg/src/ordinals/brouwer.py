"""Brouwer trees: zero, successor and limits of increasing sequences.

Values are built lazily.  A :class:`Brw` knows how to produce its head
constructor on demand, so arithmetic on trees with many nested limits costs
nothing until a comparison actually looks inside.  Trees that come from a
Cantor normal form (via :func:`ctob` or arithmetic on such trees) carry the
normal form as ``cert``; comparisons between two certified trees are decided
exactly by the CNF order.

Everything else about the order is only semi-decidable, so :func:`leq_fuel`
answers with a :class:`ThreeValued` verdict under an explicit search budget.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple, Union

from . import cnf
from .cnf import Cnf

__all__ = [
    "ThreeValued", "Zero", "Succ", "Limit", "BrwSeq", "Brw",
    "Refuted", "ConsistentUpTo", "BisimVerdict", "NotIncreasing",
    "ZERO", "OMEGA", "EPSILON_0", "IOTA", "DEFAULT_SAMPLE_BUDGET",
    "succ", "nat", "mk_limit", "tower", "is_zero", "is_finite",
    "leq_fuel", "lt_fuel", "search_fuel", "bisim_refute", "add", "mul", "exp",
    "ctob", "reify_cnf", "strip", "describe",
]

DEFAULT_SAMPLE_BUDGET = 8
# fuel used by mk_limit when it looks for a refutation of f(k) < f(k+1)
CHECK_FUEL = 4
# clause evaluations allowed per comparison run
STEP_BUDGET = 20_000


class ThreeValued(enum.Enum):
    DEF_TRUE = "true"
    DEF_FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, b: bool) -> "ThreeValued":
        return cls.DEF_TRUE if b else cls.DEF_FALSE

    @property
    def is_definite(self) -> bool:
        return self is not ThreeValued.UNKNOWN

    def __str__(self):
        return self.value


TRUE = ThreeValued.DEF_TRUE
FALSE = ThreeValued.DEF_FALSE
UNKNOWN = ThreeValued.UNKNOWN


class NotIncreasing(ValueError):
    def __init__(self, index: int, tag: str = ""):
        super().__init__(f"sequence {tag or '?'} is not increasing at index {index}")
        self.index = index


# -- heads ---------------------------------------------------------------------


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True, eq=False)
class Succ:
    pred: "Brw"


@dataclass(frozen=True, eq=False)
class Limit:
    seq: "BrwSeq"


Head = Union[Zero, Succ, Limit]


class BrwSeq:
    """A natural-indexed family of trees with a printable tag.

    Evaluation is memoised; the cache only ever stores the value the
    underlying function returns, so sharing it between threads is harmless.
    """

    __slots__ = ("_fn", "tag", "checked_up_to", "_cache")

    def __init__(self, fn: Callable[[int], "Brw"], tag: str, checked_up_to: int = -1,
                 _cache: Optional[Dict[int, "Brw"]] = None):
        self._fn = fn
        self.tag = tag
        self.checked_up_to = checked_up_to
        self._cache = {} if _cache is None else _cache

    def __call__(self, k: int) -> "Brw":
        if k < 0:
            raise ValueError("sequence index must be a natural number")
        try:
            return self._cache[k]
        except KeyError:
            return self._cache.setdefault(k, self._fn(k))

    def map(self, fn: Callable[["Brw"], "Brw"], tag: str) -> "BrwSeq":
        return BrwSeq(lambda k: fn(self(k)), tag)

    def with_check(self, k: int) -> "BrwSeq":
        return BrwSeq(self._fn, self.tag, k, self._cache)

    def __repr__(self):
        return f"BrwSeq({self.tag!r}, checked_up_to={self.checked_up_to})"


class Brw:
    __slots__ = ("_head", "_thunk", "cert")

    def __init__(self, head: Optional[Head] = None, thunk: Optional[Callable[[], Head]] = None,
                 cert: Optional[Cnf] = None):
        if head is None and thunk is None:
            raise ValueError("a tree needs a head or a way to compute it")
        self._head = head
        self._thunk = thunk
        self.cert = cert

    @property
    def head(self) -> Head:
        h = self._head
        if h is None:
            h = self._thunk()
            self._head = h
        return h

    def __repr__(self):
        return f"Brw({describe(self)})"


ZERO = Brw(Zero(), cert=cnf.ZERO)


def succ(x: Brw) -> Brw:
    return Brw(Succ(x), cert=None if x.cert is None else cnf.succ_of(x.cert))


_nat_lock = threading.Lock()
_nats: List[Brw] = [ZERO]


def nat(n: int) -> Brw:
    if n < 0:
        raise ValueError("nat expects a natural number")
    if n < len(_nats):
        return _nats[n]
    with _nat_lock:
        while len(_nats) <= n:
            _nats.append(succ(_nats[-1]))
        return _nats[n]


def mk_limit(f: BrwSeq, sample_budget: int = DEFAULT_SAMPLE_BUDGET, *,
             cert: Optional[Cnf] = None) -> Brw:
    """``limit f`` after looking for a refutation of increase at indices up to the budget."""
    for k in range(sample_budget + 1):
        a, b = f(k), f(k + 1)
        if a.cert is not None and b.cert is not None:
            bad = cnf.compare(a.cert, b.cert) is not cnf.Ordering.LESS
        else:
            bad = lt_fuel(a, b, CHECK_FUEL) is FALSE
        if bad:
            raise NotIncreasing(k, f.tag)
    return Brw(Limit(f.with_check(max(sample_budget, f.checked_up_to))), cert=cert)


# -- inspection ----------------------------------------------------------------


def is_zero(x: Brw) -> bool:
    return isinstance(x.head, Zero)


def is_finite(x: Brw) -> Optional[int]:
    n = 0
    h = x.head
    while isinstance(h, Succ):
        n += 1
        h = h.pred.head
    return n if isinstance(h, Zero) else None


def describe(x: Brw) -> str:
    if x.cert is not None:
        return cnf.to_text(x.cert)
    n = 0
    h = x.head
    while isinstance(h, Succ):
        n += 1
        h = h.pred.head
    base = "0" if isinstance(h, Zero) else f"lim({h.seq.tag})"
    if isinstance(h, Zero):
        return str(n)
    return f"{base} + {n}" if n else base


# -- the fuelled order ---------------------------------------------------------


class _OutOfSteps(Exception):
    pass


class _Checker:
    """One bounded run of the Code clauses.

    Every quantifier clause that picks index ``n`` spends ``n + 1`` units of
    the remaining budget, so a run at budget ``r`` only looks at indices below
    ``r`` and at quantifier paths whose choices add up to at most ``r``.  A
    caller that is only interested in one outcome passes it as ``goal`` and
    clauses unable to produce it are cut short.  The memo keeps the compared
    objects alive so the ids in its keys stay valid.
    """

    def __init__(self, steps: int):
        self.steps = steps
        self.memo: Dict[tuple, tuple] = {}

    def leq(self, x: Brw, y: Brw, budget: int, goal: Optional[ThreeValued] = None) -> ThreeValued:
        while True:
            if x is y:
                return TRUE
            if x.cert is not None and y.cert is not None:
                return ThreeValued.of(cnf.compare(x.cert, y.cert) is not cnf.Ordering.GREATER)
            hx, hy = x.head, y.head
            if hx is hy:
                return TRUE
            if isinstance(hx, Succ) and isinstance(hy, Succ):
                x, y = hx.pred, hy.pred
                continue
            break
        # answers only get more definite with budget: remember the smallest
        # budget that gave a definite answer and the largest that did not
        key = (id(x), id(y), goal)
        hit = self.memo.get(key)
        if hit is not None:
            _, _, settled, verdict, unknown_up_to = hit
            if settled is not None and settled <= budget:
                return verdict
            if budget <= unknown_up_to:
                return UNKNOWN
        self.steps -= 1
        if self.steps < 0:
            raise _OutOfSteps
        r = self._clause(x, y, hx, hy, budget, goal)
        if hit is None:
            hit = (x, y, None, UNKNOWN, -1)
        if r is UNKNOWN:
            self.memo[key] = hit[:4] + (max(hit[4], budget),)
        else:
            self.memo[key] = (x, y, budget, r, hit[4])
        return r

    def _clause(self, x, y, hx, hy, budget, goal) -> ThreeValued:
        if isinstance(hx, Zero):
            return TRUE
        if isinstance(hy, Zero):
            return FALSE
        if isinstance(hx, Succ):
            # succ x <= limit g: some g(n) is above; this can only ever confirm
            if goal is FALSE:
                return UNKNOWN
            g = hy.seq
            for n in range(budget):
                if self.leq(x, g(n), budget - n - 1, TRUE) is TRUE:
                    return TRUE
            return UNKNOWN
        f = hx.seq
        if isinstance(hy, Succ):
            # limit f <= succ y: every f(k) is below; only a counter-witness settles it
            if goal is TRUE:
                return UNKNOWN
            for k in range(budget):
                if self.leq(f(k), y, budget - k - 1, FALSE) is FALSE:
                    return FALSE
            return UNKNOWN
        if f is hy.seq:
            return TRUE
        return UNKNOWN


def search_fuel(x: Brw, y: Brw, fuel: int, *, steps: int = STEP_BUDGET) -> Tuple[ThreeValued, Optional[int]]:
    """``leq_fuel(x, y, fuel)`` together with the smallest fuel giving the same definite verdict."""
    if fuel < 0:
        raise ValueError("fuel must be a natural number")
    checker = _Checker(steps)
    try:
        for budget in range(fuel + 1):
            r = checker.leq(x, y, budget)
            if r.is_definite:
                return r, budget
    except _OutOfSteps:
        pass
    return UNKNOWN, None


def leq_fuel(x: Brw, y: Brw, fuel: int, *, steps: int = STEP_BUDGET) -> ThreeValued:
    """Three-valued ``x <= y``; quantifier clauses search indices below ``fuel``.

    Budgets are tried in increasing order so cheap witnesses are found
    first, and the run is capped at ``steps`` clause evaluations.  The
    sequence of budgets tried at fuel ``F`` is a prefix of the one tried at
    any larger fuel, so a definite verdict is never lost by adding fuel.
    """
    return search_fuel(x, y, fuel, steps=steps)[0]


def lt_fuel(x: Brw, y: Brw, fuel: int) -> ThreeValued:
    return leq_fuel(succ(x), y, fuel)


# -- bisimilarity refutation ---------------------------------------------------


@dataclass(frozen=True)
class Refuted:
    witness: str
    direction: str = ""
    index: Optional[int] = None


@dataclass(frozen=True)
class ConsistentUpTo:
    depth: int
    width: int


BisimVerdict = Union[Refuted, ConsistentUpTo]


def _kind(h: Head) -> str:
    return type(h).__name__.lower()


def bisim_refute(x: Brw, y: Brw, depth: int, width: int) -> BisimVerdict:
    """Look for evidence that ``x`` and ``y`` are different ordinals.

    A ``Refuted`` answer is always backed by a definite verdict that can be
    re-derived; anything less conclusive yields ``ConsistentUpTo``.
    """
    while True:
        if x is y:
            break
        if x.cert is not None and y.cert is not None:
            if x.cert != y.cert:
                return Refuted(f"certificates differ: {cnf.to_text(x.cert)} vs {cnf.to_text(y.cert)}")
            break
        for a, b, d in ((x, y, "left<=right"), (y, x, "right<=left")):
            if leq_fuel(a, b, width) is FALSE:
                return Refuted(f"{describe(a)} <= {describe(b)} fails", d)
        hx, hy = x.head, y.head
        if type(hx) is not type(hy):
            return Refuted(f"{_kind(hx)} vs {_kind(hy)}")
        if isinstance(hx, Succ):
            x, y = hx.pred, hy.pred
            continue
        if isinstance(hx, Limit) and depth > 0:
            # f is simulated by g iff every f(k) lies strictly below limit g
            for a, b, d in ((x, y, "left<=right"), (y, x, "right<=left")):
                f = a.head.seq
                for k in range(width):
                    if lt_fuel(f(k), b, width) is FALSE:
                        return Refuted(f"{describe(f(k))} < {describe(b)} fails", d, k)
        break
    return ConsistentUpTo(depth, width)


# -- arithmetic ----------------------------------------------------------------


def _both(f, x: Brw, y: Brw) -> Optional[Cnf]:
    if x.cert is None or y.cert is None:
        return None
    return f(x.cert, y.cert)


def add(x: Brw, y: Brw) -> Brw:
    def force():
        h = y.head
        if isinstance(h, Zero):
            return x.head
        if isinstance(h, Succ):
            return Succ(add(x, h.pred))
        seq = h.seq.map(lambda v: add(x, v), f"k ↦ {describe(x)} + {h.seq.tag}(k)")
        return mk_limit(seq).head
    return Brw(thunk=force, cert=_both(cnf.add, x, y))


def mul(x: Brw, y: Brw) -> Brw:
    def force():
        h = y.head
        if isinstance(h, Zero) or is_zero(x):
            return Zero()
        if isinstance(h, Succ):
            return add(mul(x, h.pred), x).head
        seq = h.seq.map(lambda v: mul(x, v), f"k ↦ {describe(x)} · {h.seq.tag}(k)")
        return mk_limit(seq).head
    return Brw(thunk=force, cert=_both(cnf.mul, x, y))


def exp(x: Brw, y: Brw) -> Brw:
    def force():
        h = y.head
        if isinstance(h, Zero):
            return Succ(ZERO)
        if isinstance(h, Succ):
            return mul(exp(x, h.pred), x).head
        if is_zero(x):
            return Zero()
        if is_finite(x) == 1:
            return Succ(ZERO)
        seq = h.seq.map(lambda v: exp(x, v), f"k ↦ {describe(x)}^{h.seq.tag}(k)")
        return mk_limit(seq).head
    cert = None
    if x.cert is not None and x.cert == cnf.OMEGA and y.cert is not None:
        cert = cnf.omega_pow(y.cert)
    return Brw(thunk=force, cert=cert)


# -- constants built from arithmetic ---------------------------------------------


IOTA = BrwSeq(nat, "ι")
OMEGA = mk_limit(IOTA, cert=cnf.OMEGA)


_tower_lock = threading.Lock()
_towers: List[Brw] = [nat(1)]


def tower(k: int) -> Brw:
    """``w`` stacked ``k`` times; ``tower(0)`` is 1."""
    if k < 0:
        raise ValueError("tower height must be a natural number")
    with _tower_lock:
        while len(_towers) <= k:
            _towers.append(exp(OMEGA, _towers[-1]))
        return _towers[k]


EPSILON_0 = mk_limit(BrwSeq(tower, "k ↦ w↑↑k"))


# -- CNF embedding ---------------------------------------------------------------


@lru_cache(maxsize=4096)
def ctob(a: Cnf) -> Brw:
    n = a.to_int()
    if n is not None:
        return nat(n)
    return add(exp(OMEGA, ctob(a.head)), ctob(a.tail))


def reify_cnf(x: Brw) -> Optional[Cnf]:
    return x.cert


def strip(x: Brw) -> Brw:
    """The same tree with every certificate removed (built lazily)."""
    def force():
        h = x.head
        if isinstance(h, Succ):
            return Succ(strip(h.pred))
        if isinstance(h, Limit):
            s = h.seq
            return Limit(BrwSeq(lambda k: strip(s(k)), s.tag, s.checked_up_to))
        return h
    return Brw(thunk=force)
