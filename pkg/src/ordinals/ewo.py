"""Finite extensional wellfounded orders (EWOs).

An order is a boolean matrix ``lt`` with ``lt[i][j]`` meaning ``i < j``.
:func:`validate` reports, with concrete counterexamples, whether a matrix is
transitive, extensional and wellfounded.  On top of that sit simulation
search, the sum/product/successor/segment constructions, limits of finite
chains, and the finite part of the map sending a Brouwer tree to the order of
its predecessors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from . import brouwer

__all__ = [
    "FiniteOrder", "OrderReport", "SimulationResult",
    "MalformedMatrix", "InvalidOrder", "IndexOutOfRange", "NotAChain", "NotFinite",
    "OrderFormatError", "validate", "is_simulation", "find_simulations",
    "find_bounded_simulation", "sum", "product", "successor", "initial_segment",
    "chain", "limit_chain", "btoo_finite", "order_from_json", "order_to_json",
    "load_order", "dump_order", "isomorphic",
]


class MalformedMatrix(ValueError):
    pass


class InvalidOrder(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


class NotAChain(ValueError):
    pass


class NotFinite(ValueError):
    pass


class OrderFormatError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteOrder:
    size: int
    lt: Tuple[Tuple[bool, ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if len(self.lt) != self.size or any(len(r) != self.size for r in self.lt):
            raise MalformedMatrix(f"matrix is not {self.size}x{self.size}")
        if self.labels is not None and len(self.labels) != self.size:
            raise MalformedMatrix("one label per element is required")

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence[bool]], labels=None) -> "FiniteOrder":
        _check_square(m)
        return cls(len(m), tuple(tuple(bool(v) for v in row) for row in m),
                   None if labels is None else tuple(labels))

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[Tuple[int, int]], labels=None) -> "FiniteOrder":
        m = [[False] * size for _ in range(size)]
        for i, j in pairs:
            if not (0 <= i < size and 0 <= j < size):
                raise IndexOutOfRange(f"pair ({i}, {j}) outside 0..{size - 1}")
            m[i][j] = True
        return cls.from_matrix(m, labels)

    def pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.size) for j in range(self.size) if self.lt[i][j]]

    def preds(self, x: int) -> frozenset:
        return frozenset(i for i in range(self.size) if self.lt[i][x])

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def validated(self) -> "FiniteOrder":
        r = validate(self)
        if not r.ok:
            raise InvalidOrder(r.describe())
        return self


@dataclass(frozen=True)
class OrderReport:
    transitive: bool
    transitivity_witness: Optional[Tuple[int, int, int]]
    extensional: bool
    extensionality_witness: Optional[Tuple[int, int]]
    wellfounded: bool
    cycle: Optional[Tuple[int, ...]]
    accessibility_rank: Tuple[Optional[int], ...]

    @property
    def ok(self) -> bool:
        return self.transitive and self.extensional and self.wellfounded

    def describe(self) -> str:
        lines = []
        if self.transitive:
            lines.append("transitive: yes")
        else:
            a, b, c = self.transitivity_witness
            lines.append(f"transitive: no ({a} < {b} < {c} but not {a} < {c})")
        if self.extensional:
            lines.append("extensional: yes")
        else:
            a, b = self.extensionality_witness
            lines.append(f"extensional: no ({a} and {b} have the same predecessors)")
        if self.wellfounded:
            lines.append("wellfounded: yes")
        else:
            lines.append("wellfounded: no (cycle " + " < ".join(map(str, self.cycle + self.cycle[:1])) + ")")
        ranks = ", ".join("-" if r is None else str(r) for r in self.accessibility_rank)
        lines.append(f"ranks: [{ranks}]")
        return "\n".join(lines)


@dataclass(frozen=True)
class SimulationResult:
    map: Tuple[int, ...]
    bound: Optional[int] = None


def _check_square(m) -> None:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise MalformedMatrix(f"row of length {len(row)} in a {n}-row matrix")


def _as_order(m) -> FiniteOrder:
    return m if isinstance(m, FiniteOrder) else FiniteOrder.from_matrix(m)


def validate(m) -> OrderReport:
    o = _as_order(m)
    n, lt = o.size, o.lt

    trans_w = None
    for a in range(n):
        for b in range(n):
            if not lt[a][b]:
                continue
            for c in range(n):
                if lt[b][c] and not lt[a][c]:
                    trans_w = (a, b, c)
                    break
            if trans_w:
                break
        if trans_w:
            break

    preds = [o.preds(x) for x in range(n)]
    ext_w = None
    for a in range(n):
        for b in range(a + 1, n):
            if preds[a] == preds[b]:
                ext_w = (a, b)
                break
        if ext_w:
            break

    # accessibility: an element gets a rank once all predecessors have one
    rank: List[Optional[int]] = [None] * n
    changed = True
    while changed:
        changed = False
        for x in range(n):
            if rank[x] is None and all(rank[p] is not None for p in preds[x]):
                rank[x] = 1 + max((rank[p] for p in preds[x]), default=-1)
                changed = True

    cycle = None
    stuck = [x for x in range(n) if rank[x] is None]
    if stuck:
        # every inaccessible element has an inaccessible predecessor; walk down until a repeat
        path, seen, x = [], {}, stuck[0]
        while x not in seen:
            seen[x] = len(path)
            path.append(x)
            x = min(p for p in preds[x] if rank[p] is None)
        loop = path[seen[x]:][::-1]
        k = loop.index(min(loop))
        cycle = tuple(loop[k:] + loop[:k])

    return OrderReport(trans_w is None, trans_w, ext_w is None, ext_w,
                       cycle is None, cycle, tuple(rank))


# -- simulations -------------------------------------------------------------------


def is_simulation(a: FiniteOrder, b: FiniteOrder, f: Sequence[int]) -> bool:
    if len(f) != a.size or any(not 0 <= y < b.size for y in f):
        return False
    for x in range(a.size):
        for x2 in range(a.size):
            if a.lt[x][x2] and not b.lt[f[x]][f[x2]]:
                return False
        below = {f[x0] for x0 in a.preds(x)}
        if any(y not in below for y in b.preds(f[x])):
            return False
    return True


def _by_rank(o: FiniteOrder) -> List[int]:
    r = validate(o)
    if not r.ok:
        raise InvalidOrder(r.describe())
    return sorted(range(o.size), key=lambda x: (r.accessibility_rank[x], x))


def find_simulations(a: FiniteOrder, b: FiniteOrder) -> List[SimulationResult]:
    """Every simulation from ``a`` to ``b``, in lexicographic order of the maps."""
    order = _by_rank(a)
    _by_rank(b)
    a_preds = [a.preds(x) for x in range(a.size)]
    b_preds = [b.preds(y) for y in range(b.size)]
    f: List[Optional[int]] = [None] * a.size
    out = []

    def go(i):
        if i == len(order):
            out.append(SimulationResult(tuple(f)))
            return
        x = order[i]
        # predecessors come earlier in rank order, so the condition at x is now decidable
        image = {f[p] for p in a_preds[x]}
        for y in range(b.size):
            if b_preds[y] == image:
                f[x] = y
                go(i + 1)
        f[x] = None

    go(0)
    out.sort(key=lambda s: s.map)
    return out


def find_bounded_simulation(a: FiniteOrder, b: FiniteOrder) -> Optional[SimulationResult]:
    for s in find_simulations(a, b):
        image = set(s.map)
        if len(image) != len(s.map):
            continue
        for y in range(b.size):
            if b.preds(y) == image:
                return SimulationResult(s.map, y)
    return None


def isomorphic(a: FiniteOrder, b: FiniteOrder) -> bool:
    if a.size != b.size:
        return False
    return any(len(set(s.map)) == a.size for s in find_simulations(a, b))


# -- constructions -----------------------------------------------------------------


def chain(n: int) -> FiniteOrder:
    return FiniteOrder(n, tuple(tuple(i < j for j in range(n)) for i in range(n)))


def _labels_or_default(o: FiniteOrder) -> Tuple[str, ...]:
    return tuple(o.label(i) for i in range(o.size))


def sum(a: FiniteOrder, b: FiniteOrder) -> FiniteOrder:
    m, n = a.size, b.size
    rows = []
    for i in range(m + n):
        row = []
        for j in range(m + n):
            if i < m and j < m:
                row.append(a.lt[i][j])
            elif i >= m and j >= m:
                row.append(b.lt[i - m][j - m])
            else:
                row.append(i < m <= j)
        rows.append(tuple(row))
    labels = tuple(f"inl {s}" for s in _labels_or_default(a)) + \
        tuple(f"inr {s}" for s in _labels_or_default(b))
    return FiniteOrder(m + n, tuple(rows), labels)


def product(a: FiniteOrder, b: FiniteOrder) -> FiniteOrder:
    """Reverse lexicographic: compare the ``b`` component first."""
    m, n = a.size, b.size
    cells = [(x, y) for y in range(n) for x in range(m)]
    rows = tuple(
        tuple(b.lt[y][y2] or (y == y2 and a.lt[x][x2]) for x2, y2 in cells)
        for x, y in cells
    )
    labels = tuple(f"({a.label(x)}, {b.label(y)})" for x, y in cells)
    return FiniteOrder(m * n, rows, labels)


def successor(a: FiniteOrder) -> FiniteOrder:
    return sum(a, chain(1))


def initial_segment(a: FiniteOrder, x: int) -> FiniteOrder:
    if not 0 <= x < a.size:
        raise IndexOutOfRange(f"element {x} outside 0..{a.size - 1}")
    keep = [i for i in range(a.size) if a.lt[i][x]]
    rows = tuple(tuple(a.lt[i][j] for j in keep) for i in keep)
    return FiniteOrder(len(keep), rows, tuple(a.label(i) for i in keep))


def limit_chain(orders: Sequence[FiniteOrder]) -> FiniteOrder:
    """Quotient of the disjoint union by isomorphism of initial segments.

    In a validated finite order the segment below an element is determined
    up to isomorphism by the element's rank, so classes are rank values.
    """
    for i in range(len(orders) - 1):
        if not find_simulations(orders[i], orders[i + 1]):
            raise NotAChain(f"no simulation from order {i} to order {i + 1}")
    reps = {}
    for n, o in enumerate(orders):
        ranks = validate(o.validated()).accessibility_rank
        for y in range(o.size):
            reps.setdefault(ranks[y], f"{n}:{o.label(y)}")
    classes = sorted(reps)
    k = len(classes)
    rows = tuple(tuple(classes[i] < classes[j] for j in range(k)) for i in range(k))
    return FiniteOrder(k, rows, tuple(reps[c] for c in classes))


def btoo_finite(x: brouwer.Brw, fuel: int = 0) -> FiniteOrder:
    """The order of trees strictly below a finite tree ``x``."""
    n = brouwer.is_finite(x)
    if n is None:
        raise NotFinite("only finite trees have a finite order of predecessors")
    below = []
    t = x
    while isinstance(t.head, brouwer.Succ):
        t = t.head.pred
        below.append(t)
    below.reverse()
    rows = []
    for p in below:
        row = []
        for q in below:
            v = brouwer.lt_fuel(p, q, fuel)
            if not v.is_definite:
                raise NotFinite("comparison of finite trees did not settle")
            row.append(v is brouwer.ThreeValued.DEF_TRUE)
        rows.append(tuple(row))
    return FiniteOrder(n, tuple(rows), tuple(brouwer.describe(p) for p in below))


# -- JSON ----------------------------------------------------------------------------


def order_from_json(obj) -> FiniteOrder:
    if not isinstance(obj, dict):
        raise OrderFormatError("an order is a JSON object")
    unknown = set(obj) - {"size", "lt", "labels"}
    if unknown:
        raise OrderFormatError(f"unknown keys: {sorted(unknown)}")
    size = obj.get("size")
    if not isinstance(size, int) or isinstance(size, bool) or size < 0:
        raise OrderFormatError("'size' must be a natural number")
    raw = obj.get("lt", [])
    if not isinstance(raw, list):
        raise OrderFormatError("'lt' must be a list of pairs")
    seen = set()
    for p in raw:
        if (not isinstance(p, list) or len(p) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in p)):
            raise OrderFormatError(f"bad pair {p!r}")
        pair = (p[0], p[1])
        if pair in seen:
            raise OrderFormatError(f"duplicate pair {list(pair)}")
        seen.add(pair)
        if not all(0 <= v < size for v in pair):
            raise OrderFormatError(f"pair {list(pair)} outside 0..{size - 1}")
    labels = obj.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != size or \
                not all(isinstance(s, str) for s in labels):
            raise OrderFormatError("'labels' must list one string per element")
    return FiniteOrder.from_pairs(size, [(i, j) for i, j in raw], labels)


def order_to_json(o: FiniteOrder) -> dict:
    d = {"size": o.size, "lt": [[i, j] for i, j in o.pairs()]}
    if o.labels is not None:
        d["labels"] = list(o.labels)
    return d


def load_order(path) -> FiniteOrder:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise OrderFormatError(f"{path}: {e}") from None
    return order_from_json(obj)


def dump_order(o: FiniteOrder) -> str:
    return json.dumps(order_to_json(o), sort_keys=True)
