"""Sampled property checks for abstract ordinal structures.

An :class:`OrdinalStructure` bundles a carrier (through a seeded sampler and
some fixed small values), three-valued ``<``, ``<=`` and ``=`` queries, and
whatever optional structure the instance has: zero, successor, a source of
limits with their sequences, a classifier and arithmetic.  Every law is
checked on finite samples; a failure records the seed and the sample indices
so :func:`replay` can reproduce it exactly.

Unknown answers are never counted as passes.  A check where more than a
fifth of the evaluations come back unknown is reported as inconclusive.
"""

from __future__ import annotations

import enum
import functools
import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import brouwer, cnf, ewo
from .brouwer import ThreeValued
from .cnf import Cnf

__all__ = [
    "OrdinalStructure", "Outcome", "Counterexample", "CheckResult", "SuiteReport",
    "MissingStructure", "check_assumptions", "check_zero_suc_sup",
    "check_classification_unique", "check_arithmetic_spec", "run_suite", "replay",
    "cnf_instance", "brw_instance", "ewo_instance", "INSTANCES", "sample_cnf",
]

T = ThreeValued.DEF_TRUE
F = ThreeValued.DEF_FALSE
U = ThreeValued.UNKNOWN

UNKNOWN_LIMIT = 0.2
# how many sequence entries are compared against a candidate bound
SEQ_PREFIX = 8
# how far along a sequence to look for an entry above a given value
COFINAL_SEARCH = 64
# pool entries used as test points when a law quantifies over the carrier
WITNESSES = 24
# cap on the exhaustive sweep over fixture tuples
FIXTURE_TUPLES = 50_000


class MissingStructure(LookupError):
    pass


# -- three-valued connectives ------------------------------------------------------


def t_not(p: ThreeValued) -> ThreeValued:
    return {T: F, F: T, U: U}[p]


def t_and(*ps: ThreeValued) -> ThreeValued:
    if F in ps:
        return F
    return T if all(p is T for p in ps) else U


def t_or(*ps: ThreeValued) -> ThreeValued:
    if T in ps:
        return T
    return F if all(p is F for p in ps) else U


def t_implies(p: ThreeValued, q: ThreeValued) -> ThreeValued:
    return t_or(t_not(p), q)


def t_iff(p: ThreeValued, q: ThreeValued) -> ThreeValued:
    return t_and(t_implies(p, q), t_implies(q, p))


# -- structures ----------------------------------------------------------------------


@dataclass
class OrdinalStructure:
    name: str
    sample: Callable[[random.Random], Any]
    lt: Callable[[Any, Any], ThreeValued]
    leq: Callable[[Any, Any], ThreeValued]
    eq: Callable[[Any, Any], ThreeValued]
    fixtures: Sequence[Any] = ()
    show: Callable[[Any], str] = str
    zero: Any = None
    succ: Optional[Callable[[Any], Any]] = None
    # returns (a, f) with a the limit of the increasing sequence f
    limits: Optional[Callable[[random.Random], Tuple[Any, Callable[[int], Any]]]] = None
    # returns claims ("zero", None) / ("successor", b) / ("limit", f)
    classify: Optional[Callable[[Any], List[Tuple[str, Any]]]] = None
    add: Optional[Callable[[Any, Any], Any]] = None
    mul: Optional[Callable[[Any, Any], Any]] = None
    exp: Optional[Callable[[Any, Any], Any]] = None
    exp_bases: Sequence[Any] = ()
    alternatives: Dict[str, List[Callable]] = field(default_factory=dict)


class Outcome(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class Counterexample:
    check: str
    seed: int
    samples: int
    indices: Tuple[int, ...]
    values: Tuple[str, ...]


@dataclass(frozen=True)
class CheckResult:
    name: str
    outcome: Outcome
    evaluated: int = 0
    unknown: int = 0
    counterexample: Optional[Counterexample] = None
    note: str = ""

    @property
    def unknown_rate(self) -> float:
        return self.unknown / self.evaluated if self.evaluated else 0.0

    def to_json(self) -> dict:
        d = {"check": self.name, "outcome": self.outcome.value, "samples": self.evaluated,
             "unknown_rate": round(self.unknown_rate, 4)}
        if self.counterexample:
            c = self.counterexample
            d["counterexample"] = {"seed": c.seed, "samples": c.samples,
                                   "indices": list(c.indices), "values": list(c.values)}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class SuiteReport:
    instance: str
    seed: int
    samples: int
    results: List[CheckResult]

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if r.outcome is Outcome.FAIL]

    def outcome_of(self, name: str) -> Outcome:
        return next(r.outcome for r in self.results if r.name == name)

    def to_text(self) -> str:
        lines = [f"instance {self.instance}  seed {self.seed}  samples {self.samples}"]
        for r in self.results:
            line = f"  {r.outcome.value:<12} {r.name}"
            if r.evaluated:
                line += f" ({r.evaluated} evaluated"
                line += f", {r.unknown} unknown)" if r.unknown else ")"
            if r.counterexample:
                line += "  counterexample " + ", ".join(
                    f"#{i}={v}" for i, v in zip(r.counterexample.indices, r.counterexample.values))
            if r.note:
                line += f"  [{r.note}]"
            lines.append(line)
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({"instance": self.instance, "seed": self.seed, "samples": self.samples,
                           "results": [r.to_json() for r in self.results]}, indent=2)


# -- check machinery -------------------------------------------------------------------


@dataclass(frozen=True)
class _Check:
    name: str
    # domain of each argument: "pool", "limit" or "base"
    domains: Tuple[str, ...]
    pred: Callable[..., ThreeValued]
    needs: Tuple[str, ...] = ()


class _Pools:
    def __init__(self, s: OrdinalStructure, n: int, seed: int):
        rng = random.Random(seed)
        self.fixtures = list(s.fixtures)
        self.pool = list(s.fixtures) + [s.sample(rng) for _ in range(n)]
        self.limit = []
        if s.limits is not None:
            lrng = random.Random(f"{seed}/limits")
            self.limit = [s.limits(lrng) for _ in range(max(8, n // 20))]
        self.base = list(s.exp_bases)

    def get(self, domain: str) -> list:
        return getattr(self, domain)


def _missing(s: OrdinalStructure, needs: Sequence[str]) -> List[str]:
    out = []
    for attr in needs:
        v = getattr(s, attr)
        if v is None or (attr == "exp_bases" and not v):
            out.append(attr)
    return out


def _tuples(check: _Check, pools: _Pools, n: int, seed: int):
    doms = [pools.get(d) for d in check.domains]
    if any(not d for d in doms):
        return
    if len(doms) == 1:
        yield from ((i,) for i in range(len(doms[0])))
        return
    nfix = len(pools.fixtures)
    if set(check.domains) == {"pool"} and nfix ** len(doms) <= FIXTURE_TUPLES:
        # small values are cheap to cover exhaustively and hold the usual edge cases
        yield from itertools.product(range(nfix), repeat=len(doms))
    rng = random.Random(f"{seed}/{check.name}")
    for _ in range(n):
        yield tuple(rng.randrange(len(d)) for d in doms)


def _values(check: _Check, pools: _Pools, idx):
    return [pools.get(d)[i] for d, i in zip(check.domains, idx)]


def _show(s: OrdinalStructure, domain: str, v) -> str:
    if domain == "limit":
        return f"limit {s.show(v[0])}"
    return s.show(v)


def _run_check(s: OrdinalStructure, check: _Check, pools: _Pools, n: int, seed: int) -> CheckResult:
    missing = _missing(s, check.needs)
    if missing:
        return CheckResult(check.name, Outcome.SKIPPED, note="no " + ", ".join(missing))
    evaluated = unknown = 0
    for idx in _tuples(check, pools, n, seed):
        vals = _values(check, pools, idx)
        r = check.pred(pools, *vals)
        evaluated += 1
        if r is F:
            cex = Counterexample(check.name, seed, n, idx,
                                 tuple(_show(s, d, v) for d, v in zip(check.domains, vals)))
            return CheckResult(check.name, Outcome.FAIL, evaluated, unknown, cex)
        if r is U:
            unknown += 1
    if evaluated == 0:
        return CheckResult(check.name, Outcome.SKIPPED, note="nothing to evaluate")
    if unknown > UNKNOWN_LIMIT * evaluated:
        return CheckResult(check.name, Outcome.INCONCLUSIVE, evaluated, unknown)
    return CheckResult(check.name, Outcome.PASS, evaluated, unknown)


def _witnesses(pools: _Pools, key) -> list:
    """A deterministic handful of pool entries to test a universally quantified law against."""
    pool = pools.pool
    if len(pool) <= WITNESSES:
        return list(pool)
    rng = random.Random(repr(key))
    return [pool[rng.randrange(len(pool))] for _ in range(WITNESSES)]


# -- law builders ----------------------------------------------------------------------


def _is_zero(s, pools, a, key) -> ThreeValued:
    xs = _witnesses(pools, key) + ([s.zero] if s.zero is not None else [])
    return t_and(*(s.leq(a, x) for x in xs))


def _is_suc_of(s, pools, a, b, key) -> ThreeValued:
    """``a`` is the least element strictly above ``b`` (tested against witnesses)."""
    xs = _witnesses(pools, key) + ([s.succ(b)] if s.succ is not None else [])
    return t_and(s.lt(b, a), *(t_implies(s.lt(b, x), s.leq(a, x)) for x in xs))


def _is_strong_suc_of(s, pools, a, b, key) -> ThreeValued:
    return t_and(_is_suc_of(s, pools, a, b, key),
                 *(t_implies(s.lt(x, a), s.leq(x, b)) for x in _witnesses(pools, key)))


def _cached(f: Callable[[int], Any]) -> Callable[[int], Any]:
    return functools.lru_cache(maxsize=None)(f)


def _bounds(s, f, a) -> ThreeValued:
    return t_and(*(s.leq(f(i), a) for i in range(SEQ_PREFIX)))


# an increasing sequence passing x by index 64 does so at 64, so doubling probes suffice
_PROBES = (0,) + tuple(2 ** k for k in range(COFINAL_SEARCH.bit_length()))


def _below_some_entry(s, f, x) -> ThreeValued:
    """Whether ``x`` fails to bound ``f``: some probed entry is not below ``x``."""
    for i in _PROBES:
        if s.leq(f(i), x) is F:
            return T
    return U


def _is_sup_of(s, pools, a, f, key) -> ThreeValued:
    """Upper bound on a prefix, and least: anything strictly below ``a`` misses some entry."""
    f = _cached(f)
    verdict = _bounds(s, f, a)
    for x in _witnesses(pools, key):
        # the cofinality search never answers no, so an unknown verdict is final
        if verdict is not T:
            break
        below = s.lt(x, a)
        if below is not F:
            verdict = t_and(verdict, t_implies(below, _below_some_entry(s, f, x)))
    return verdict


def _is_limit_of(s, pools, a, f, key) -> ThreeValued:
    f = _cached(f)
    increasing = t_and(*(s.lt(f(i), f(i + 1)) for i in range(SEQ_PREFIX)))
    if increasing is F:
        return F
    return t_and(increasing, _is_sup_of(s, pools, a, f, key))


def _assumption_checks(s: OrdinalStructure) -> List[_Check]:
    lt, leq, eq = s.lt, s.leq, s.eq
    return [
        _Check("lt-irreflexive", ("pool",), lambda P, a: t_not(lt(a, a))),
        _Check("lt-transitive", ("pool",) * 3,
               lambda P, a, b, c: t_implies(t_and(lt(a, b), lt(b, c)), lt(a, c))),
        _Check("leq-reflexive", ("pool",), lambda P, a: leq(a, a)),
        _Check("leq-transitive", ("pool",) * 3,
               lambda P, a, b, c: t_implies(t_and(leq(a, b), leq(b, c)), leq(a, c))),
        _Check("leq-antisymmetric", ("pool",) * 2,
               lambda P, a, b: t_implies(t_and(leq(a, b), leq(b, a)), eq(a, b))),
        _Check("lt-within-leq", ("pool",) * 2, lambda P, a, b: t_implies(lt(a, b), leq(a, b))),
        _Check("lt-then-leq-is-lt", ("pool",) * 3,
               lambda P, c, b, a: t_implies(t_and(lt(c, b), leq(b, a)), lt(c, a))),
    ]


def _zero_suc_sup_checks(s: OrdinalStructure) -> List[_Check]:
    lt, leq = s.lt, s.leq

    def sup_clause(P, lim):
        a, f = lim
        return _is_limit_of(s, P, a, f, ("sup", s.show(a)))

    return [
        _Check("zero-is-least", ("pool",), lambda P, x: leq(s.zero, x), ("zero",)),
        _Check("succ-above", ("pool",), lambda P, b: lt(b, s.succ(b)), ("succ",)),
        _Check("succ-least", ("pool",) * 2,
               lambda P, b, x: t_implies(lt(b, x), leq(s.succ(b), x)), ("succ",)),
        _Check("succ-strong", ("pool",) * 2,
               lambda P, b, x: t_implies(lt(x, s.succ(b)), leq(x, b)), ("succ",)),
        _Check("succ-characterisation", ("pool",) * 2,
               lambda P, b, x: t_iff(lt(b, x), leq(s.succ(b), x)), ("succ",)),
        _Check("limit-is-supremum", ("limit",), sup_clause, ("limits",)),
    ]


def _classification_checks(s: OrdinalStructure) -> List[_Check]:
    def verify(P, a, claim):
        kind, data = claim
        key = ("cls", s.show(a), kind)
        if kind == "zero":
            return _is_zero(s, P, a, key)
        if kind == "successor":
            return _is_strong_suc_of(s, P, a, data, key)
        if kind == "limit":
            return _is_limit_of(s, P, a, data, key)
        return F

    def claims_hold(P, a):
        claims = s.classify(a)
        if not claims:
            return F
        return t_and(*(verify(P, a, c) for c in claims))

    def at_most_one(P, a):
        claims = s.classify(a)
        kinds = [k for k, _ in claims]
        if len(set(kinds)) != len(kinds):
            return F
        if len(claims) <= 1:
            return T
        # two established cases contradict each other, as b < b would follow
        verdicts = [verify(P, a, c) for c in claims]
        if sum(v is T for v in verdicts) >= 2:
            return F
        return U if U in verdicts else T

    def zero_agrees(P, a):
        claimed = any(k == "zero" for k, _ in s.classify(a))
        return t_iff(ThreeValued.of(claimed), s.leq(a, s.zero))

    return [
        _Check("classification-claims-hold", ("pool",), claims_hold, ("classify",)),
        _Check("classification-at-most-one", ("pool",), at_most_one, ("classify",)),
        _Check("classification-zero-agrees", ("pool",), zero_agrees, ("classify", "zero")),
    ]


def _arithmetic_checks(s: OrdinalStructure) -> List[_Check]:
    eq = s.eq

    def sup_of_mapped(P, lim, c, op, key):
        a, f = lim
        return _is_sup_of(s, P, op(c, a), lambda i: op(c, f(i)), key)

    checks = [
        _Check("add-zero", ("pool",), lambda P, c: eq(s.add(c, s.zero), c), ("add", "zero")),
        _Check("add-succ", ("pool",) * 2,
               lambda P, c, b: eq(s.add(c, s.succ(b)), s.succ(s.add(c, b))), ("add", "succ")),
        _Check("add-limit", ("limit", "pool"),
               lambda P, lim, c: sup_of_mapped(P, lim, c, s.add, ("add", s.show(c), s.show(lim[0]))),
               ("add", "limits")),
        _Check("mul-zero", ("pool",), lambda P, c: eq(s.mul(c, s.zero), s.zero), ("mul", "zero")),
        _Check("mul-succ", ("pool",) * 2,
               lambda P, c, b: eq(s.mul(c, s.succ(b)), s.add(s.mul(c, b), c)), ("mul", "add", "succ")),
        _Check("mul-limit", ("limit", "pool"),
               lambda P, lim, c: sup_of_mapped(P, lim, c, s.mul, ("mul", s.show(c), s.show(lim[0]))),
               ("mul", "limits")),
        _Check("exp-zero", ("base",), lambda P, c: eq(s.exp(c, s.zero), s.succ(s.zero)),
               ("exp", "exp_bases", "zero", "succ")),
        _Check("exp-succ", ("base", "pool"),
               lambda P, c, b: eq(s.exp(c, s.succ(b)), s.mul(s.exp(c, b), c)),
               ("exp", "exp_bases", "mul", "succ")),
    ]

    def exp_limit(P, c, lim):
        a, f = lim
        zero_base = s.leq(c, s.zero)
        if zero_base is T:
            return eq(s.exp(c, a), c)
        if zero_base is U:
            return U
        return _is_sup_of(s, P, s.exp(c, a), lambda i: s.exp(c, f(i)), ("exp", s.show(c), s.show(a)))

    checks.append(_Check("exp-limit", ("base", "limit"), exp_limit,
                         ("exp", "exp_bases", "limits", "zero")))

    for op, arity in (("add", 2), ("mul", 2), ("succ", 1)):
        for k, alt in enumerate(s.alternatives.get(op, ())):
            def agree(P, *args, alt=alt, op=op):
                return eq(getattr(s, op)(*args), alt(*args))
            checks.append(_Check(f"{op}-unique[{k}]", ("pool",) * arity, agree, (op,)))
    return checks


_FAMILIES = {
    "assumptions": _assumption_checks,
    "zero-suc-sup": _zero_suc_sup_checks,
    "classification": _classification_checks,
    "arithmetic": _arithmetic_checks,
}

# what an instance must provide for a family to make sense at all
_FAMILY_NEEDS = {
    "assumptions": (),
    "zero-suc-sup": ("zero", "succ", "limits"),
    "classification": ("classify",),
    "arithmetic": ("add", "mul", "exp"),
}


def _family(name: str, s: OrdinalStructure, n: int, seed: int,
            pools: Optional[_Pools] = None) -> SuiteReport:
    needs = _FAMILY_NEEDS[name]
    if needs and len(_missing(s, needs)) == len(needs):
        raise MissingStructure(f"{s.name} has none of: {', '.join(needs)}")
    pools = pools or _Pools(s, n, seed)
    results = [_run_check(s, c, pools, n, seed) for c in _FAMILIES[name](s)]
    return SuiteReport(s.name, seed, n, results)


def check_assumptions(s: OrdinalStructure, n: int, seed: int) -> SuiteReport:
    return _family("assumptions", s, n, seed)


def check_zero_suc_sup(s: OrdinalStructure, n: int, seed: int) -> SuiteReport:
    return _family("zero-suc-sup", s, n, seed)


def check_classification_unique(s: OrdinalStructure, n: int, seed: int) -> SuiteReport:
    return _family("classification", s, n, seed)


def check_arithmetic_spec(s: OrdinalStructure, n: int, seed: int) -> SuiteReport:
    return _family("arithmetic", s, n, seed)


def run_suite(s: OrdinalStructure, n: int, seed: int) -> SuiteReport:
    pools = _Pools(s, n, seed)
    results: List[CheckResult] = []
    for name in _FAMILIES:
        try:
            results.extend(_family(name, s, n, seed, pools).results)
        except MissingStructure as e:
            results.append(CheckResult(name, Outcome.SKIPPED, note=str(e)))
    return SuiteReport(s.name, seed, n, results)


def replay(s: OrdinalStructure, cex: Counterexample) -> ThreeValued:
    """Re-evaluate the law behind a counterexample; ``DEF_FALSE`` means it still fails."""
    checks = {c.name: c for fam in _FAMILIES.values() for c in fam(s)}
    check = checks[cex.check]
    pools = _Pools(s, cex.samples, cex.seed)
    return check.pred(pools, *_values(check, pools, cex.indices))


# -- shipped instances -------------------------------------------------------------------


def sample_cnf(rng: random.Random, height: int = 3, max_terms: int = 3, max_coeff: int = 3) -> Cnf:
    if height <= 0:
        return cnf.ZERO
    exps = sorted({sample_cnf(rng, height - 1, max_terms, max_coeff)
                   for _ in range(rng.randint(0, max_terms))}, reverse=True)
    x = cnf.ZERO
    for e in reversed(exps):
        for _ in range(rng.randint(1, max_coeff)):
            x = Cnf.node(e, x)
    return x


def _sample_cnf_limit(rng: random.Random) -> Cnf:
    while True:
        a = sample_cnf(rng)
        if isinstance(cnf.classify(a), cnf.IsLimit):
            return a


def _cnf_classify(a: Cnf):
    c = cnf.classify(a)
    if isinstance(c, cnf.IsZero):
        return [("zero", None)]
    if isinstance(c, cnf.IsSuccessor):
        return [("successor", c.pred)]
    return [("limit", c.fund)]


def _cmp(op):
    return lambda a, b: ThreeValued.of(op(cnf.compare(a, b)))


_CNF_FIXTURES = (
    cnf.ZERO, cnf.ONE, cnf.from_nat(2), cnf.OMEGA, cnf.OMEGA + 1, cnf.OMEGA * 2,
    cnf.omega_pow(cnf.from_nat(2)), cnf.omega_pow(cnf.OMEGA),
)


def cnf_instance(**overrides) -> OrdinalStructure:
    def limits(rng):
        a = _sample_cnf_limit(rng)
        return a, functools.partial(cnf.fund_eval, a)

    s = OrdinalStructure(
        name="cnf",
        sample=sample_cnf,
        fixtures=_CNF_FIXTURES,
        lt=_cmp(lambda o: o is cnf.Ordering.LESS),
        leq=_cmp(lambda o: o is not cnf.Ordering.GREATER),
        eq=_cmp(lambda o: o is cnf.Ordering.EQUAL),
        show=cnf.to_text,
        zero=cnf.ZERO,
        succ=cnf.succ_of,
        limits=limits,
        classify=_cnf_classify,
        add=cnf.add,
        mul=cnf.mul,
        exp=lambda c, a: cnf.omega_pow(a),
        exp_bases=(cnf.OMEGA,),
        alternatives={"succ": [lambda a: cnf.add(a, cnf.ONE)]},
    )
    for k, v in overrides.items():
        setattr(s, k, v)
    return s


BRW_FUEL = 4


def _brw_classify(x: brouwer.Brw):
    h = x.head
    if isinstance(h, brouwer.Zero):
        return [("zero", None)]
    if isinstance(h, brouwer.Succ):
        return [("successor", h.pred)]
    return [("limit", h.seq)]


def _brw_eq(x: brouwer.Brw, y: brouwer.Brw) -> ThreeValued:
    # only certified values take part in equality; bisimilarity is never assumed
    if x.cert is None or y.cert is None:
        return U
    return ThreeValued.of(x.cert == y.cert)


def brw_instance(**overrides) -> OrdinalStructure:
    def sample(rng):
        return brouwer.ctob(sample_cnf(rng, max_terms=2))

    def limits(rng):
        x = brouwer.ctob(_sample_cnf_limit(rng))
        return x, x.head.seq

    s = OrdinalStructure(
        name="brw",
        sample=sample,
        fixtures=tuple(brouwer.ctob(a) for a in _CNF_FIXTURES),
        lt=lambda x, y: brouwer.lt_fuel(x, y, BRW_FUEL),
        leq=lambda x, y: brouwer.leq_fuel(x, y, BRW_FUEL),
        eq=_brw_eq,
        show=brouwer.describe,
        zero=brouwer.ZERO,
        succ=brouwer.succ,
        limits=limits,
        classify=_brw_classify,
        add=brouwer.add,
        mul=brouwer.mul,
        exp=brouwer.exp,
        exp_bases=(brouwer.OMEGA,),
    )
    for k, v in overrides.items():
        setattr(s, k, v)
    return s


def _all_small_orders(max_size: int) -> Tuple[ewo.FiniteOrder, ...]:
    # every validated order on {0..n-1} is a strict total order, i.e. one per permutation
    out = []
    for n in range(max_size + 1):
        for perm in itertools.permutations(range(n)):
            pos = {v: i for i, v in enumerate(perm)}
            out.append(ewo.FiniteOrder(n, tuple(tuple(pos[i] < pos[j] for j in range(n))
                                                for i in range(n))))
    return tuple(o.validated() for o in out)


def ewo_instance(max_size: int = 4, **overrides) -> OrdinalStructure:
    orders = _all_small_orders(max_size)

    @functools.lru_cache(maxsize=None)
    def le(a, b):
        return bool(ewo.find_simulations(a, b))

    @functools.lru_cache(maxsize=None)
    def lt(a, b):
        return ewo.find_bounded_simulation(a, b) is not None

    def show(o):
        return f"{o.size}:" + ",".join(f"{i}<{j}" for i, j in o.pairs())

    s = OrdinalStructure(
        name="ewo",
        sample=lambda rng: orders[rng.randrange(len(orders))],
        fixtures=orders,
        lt=lambda a, b: ThreeValued.of(lt(a, b)),
        leq=lambda a, b: ThreeValued.of(le(a, b)),
        eq=lambda a, b: ThreeValued.of(le(a, b) and le(b, a)),
        show=show,
        zero=ewo.chain(0),
        succ=ewo.successor,
        add=ewo.sum,
        mul=ewo.product,
    )
    for k, v in overrides.items():
        setattr(s, k, v)
    return s


INSTANCES: Dict[str, Callable[[], OrdinalStructure]] = {
    "cnf": cnf_instance,
    "brw": brw_instance,
    "ewo": ewo_instance,
}
