import random
import threading

import pytest

from ordinals import brouwer as B, cnf
from ordinals.brouwer import (
    ConsistentUpTo, Limit, Refuted, Succ, ThreeValued, Zero,
    bisim_refute, ctob, leq_fuel, lt_fuel, strip,
)
from ordinals.cnf import OMEGA as W, from_nat as n, omega_pow
from gen import random_below, random_cnf

T, F, U = ThreeValued.DEF_TRUE, ThreeValued.DEF_FALSE, ThreeValued.UNKNOWN


def small(rng):
    return random_cnf(rng, height=3, max_terms=2, max_coeff=2)


# -- construction ------------------------------------------------------------------


def test_omega_is_limit_of_iota():
    h = B.OMEGA.head
    assert isinstance(h, Limit)
    assert h.seq.tag == "ι"
    assert h.seq.checked_up_to >= 8
    assert [B.is_finite(h.seq(k)) for k in range(6)] == list(range(6))


def test_epsilon_0_is_uncertified_limit_of_towers():
    assert B.reify_cnf(B.EPSILON_0) is None
    seq = B.EPSILON_0.head.seq
    assert seq(0).cert == n(1)
    assert seq(2).cert == omega_pow(W)
    assert seq(3).cert == omega_pow(omega_pow(W))


def test_mk_limit_rejects_non_increasing():
    with pytest.raises(B.NotIncreasing) as e:
        B.mk_limit(B.BrwSeq(lambda k: B.ZERO, "0"), 1)
    assert e.value.index == 0
    with pytest.raises(B.NotIncreasing) as e:
        B.mk_limit(B.BrwSeq(lambda k: B.nat(min(k, 3)), "min(k, 3)"), 8)
    assert e.value.index == 3


def test_mk_limit_records_budget():
    x = B.mk_limit(B.BrwSeq(lambda k: B.nat(2 * k), "2k"), 5)
    assert x.head.seq.checked_up_to == 5


def test_is_zero_and_is_finite():
    assert B.is_zero(B.ZERO)
    assert not B.is_zero(B.OMEGA)
    assert B.is_finite(B.succ(B.succ(B.ZERO))) == 2
    assert B.is_finite(B.OMEGA) is None
    assert B.is_finite(B.succ(B.OMEGA)) is None


def test_sequences_are_deterministic_across_threads():
    seq = B.mul(B.OMEGA, B.OMEGA).head.seq
    out = [None] * 8

    def work(i):
        out[i] = [seq(k) for k in range(20)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for row in out:
        assert all(a is b for a, b in zip(row, out[0]))


# -- fuelled order -----------------------------------------------------------------


def test_leq_fuel_examples():
    assert leq_fuel(B.ZERO, B.OMEGA, 0) is T
    assert leq_fuel(B.succ(B.ZERO), B.OMEGA, 2) is T
    assert leq_fuel(B.OMEGA, B.nat(2), 4) is F
    assert leq_fuel(strip(B.OMEGA), strip(B.OMEGA), 10) is U
    assert leq_fuel(B.OMEGA, ctob(W), 10) is T


def test_leq_fuel_examples_without_certificates():
    one, two = strip(B.nat(1)), strip(B.nat(2))
    assert leq_fuel(B.succ(strip(B.ZERO)), strip(B.OMEGA), 2) is T
    assert leq_fuel(strip(B.OMEGA), two, 4) is F
    assert leq_fuel(one, two, 0) is T
    assert leq_fuel(two, one, 0) is F


def test_lt_is_leq_of_successor():
    assert lt_fuel(B.nat(3), B.OMEGA, 5) is T
    assert lt_fuel(B.OMEGA, B.OMEGA, 5) is F
    assert lt_fuel(strip(B.nat(3)), strip(B.OMEGA), 5) is T


def test_soundness_against_cnf_order():
    rng = random.Random(11)
    seen = set()
    for _ in range(300):
        a, b = small(rng), small(rng)
        fuel = rng.randint(0, 4)
        r = leq_fuel(strip(ctob(a)), strip(ctob(b)), fuel)
        seen.add(r)
        if r is not U:
            assert (r is T) == (a <= b), (a, b, fuel)
    assert seen == {T, F, U}


def completeness_bound(a, b):
    return a.to_int() + 2 + 3 * b.height()


def test_completeness_for_finite_left_operands():
    rng = random.Random(12)
    tried = 0
    while tried < 40:
        b = small(rng)
        a = n(rng.randint(0, 3))
        if not a < b:
            continue
        tried += 1
        bound = completeness_bound(a, b)
        verdict, used = B.search_fuel(B.succ(strip(ctob(a))), strip(ctob(b)), bound)
        assert verdict is T, (a, b)
        assert lt_fuel(strip(ctob(a)), strip(ctob(b)), used) is T
        if used:
            assert lt_fuel(strip(ctob(a)), strip(ctob(b)), used - 1) is U


def test_search_fuel_reports_first_decisive_fuel():
    x = strip(B.nat(2))
    assert B.search_fuel(x, x, 5) == (T, 0)
    assert B.search_fuel(B.succ(strip(B.nat(3))), strip(B.OMEGA), 10) == (T, 5)
    assert B.search_fuel(strip(B.OMEGA), strip(B.OMEGA), 6) == (U, None)


def test_fuel_monotonicity():
    rng = random.Random(13)
    for _ in range(100):
        x, y = strip(ctob(small(rng))), strip(ctob(small(rng)))
        verdicts = [leq_fuel(x, y, f) for f in range(6)]
        first = next((i for i, v in enumerate(verdicts) if v is not U), None)
        if first is not None:
            assert all(v is verdicts[first] for v in verdicts[first:])


def test_successor_characterisation_on_samples():
    rng = random.Random(14)
    for _ in range(100):
        x, y = strip(ctob(small(rng))), strip(ctob(small(rng)))
        for fuel in (2, 4):
            assert leq_fuel(x, y, fuel) is leq_fuel(B.succ(x), B.succ(y), fuel)


def test_limit_witness_lemma():
    rng = random.Random(15)
    for _ in range(60):
        lim = strip(ctob(small(rng)))
        if not isinstance(lim.head, Limit):
            continue
        x = strip(ctob(n(rng.randint(0, 5))))
        for fuel in (3, 5):
            if lt_fuel(x, lim, fuel) is T:
                assert any(lt_fuel(x, lim.head.seq(i), fuel) is T for i in range(fuel))


# -- bisimilarity ------------------------------------------------------------------


def test_bisim_examples():
    r = bisim_refute(B.OMEGA, B.mul(B.OMEGA, B.nat(2)), 2, 4)
    assert isinstance(r, Refuted)
    assert bisim_refute(B.OMEGA, B.OMEGA, 3, 3) == ConsistentUpTo(3, 3)
    e = B.exp(B.OMEGA, B.EPSILON_0)
    assert isinstance(bisim_refute(e, B.EPSILON_0, 2, 3), ConsistentUpTo)


def test_bisim_refutation_without_certificates():
    for x, y in [(B.ZERO, B.nat(1)), (B.nat(3), B.OMEGA), (B.OMEGA, B.nat(7)),
                 (B.succ(B.OMEGA), B.OMEGA)]:
        r = bisim_refute(strip(x), strip(y), 2, 4)
        assert isinstance(r, Refuted), (x, y)


def test_bisim_never_refutes_equal_values():
    rng = random.Random(16)
    for _ in range(60):
        a = small(rng)
        assert isinstance(bisim_refute(ctob(a), strip(ctob(a)), 2, 4), ConsistentUpTo)
        assert isinstance(bisim_refute(strip(ctob(a)), strip(ctob(a)), 2, 4), ConsistentUpTo)


def test_refutations_recheck():
    rng = random.Random(17)
    for _ in range(100):
        a, b = small(rng), small(rng)
        r = bisim_refute(strip(ctob(a)), strip(ctob(b)), 2, 4)
        if isinstance(r, Refuted):
            assert a != b


def test_ctob_omega_matches_iota():
    assert isinstance(bisim_refute(strip(ctob(W)), strip(B.OMEGA), 3, 6), ConsistentUpTo)


# -- arithmetic and embedding ----------------------------------------------------


def test_arithmetic_examples():
    x = ctob(W * 2 + 1)
    assert B.add(x, B.ZERO).head is x.head
    assert B.is_zero(B.mul(B.ZERO, B.OMEGA))
    sq = B.exp(B.OMEGA, ctob(n(2)))
    assert sq.cert == omega_pow(n(2)) == cnf.mul(W, W)
    assert isinstance(sq.head, Limit)


def test_exp_base_cases():
    assert B.is_finite(B.exp(B.nat(1), B.OMEGA)) == 1
    assert B.is_zero(B.exp(B.ZERO, B.OMEGA))
    assert B.is_finite(B.exp(B.ZERO, B.ZERO)) == 1
    assert B.is_finite(B.exp(B.nat(2), B.nat(5))) == 32
    assert isinstance(B.exp(B.nat(2), B.OMEGA).head, Limit)


def test_finite_arithmetic_is_structural():
    for i in range(5):
        for j in range(5):
            assert B.is_finite(B.add(strip(B.nat(i)), strip(B.nat(j)))) == i + j
            assert B.is_finite(B.mul(strip(B.nat(i)), strip(B.nat(j)))) == i * j


def test_ctob_examples():
    assert B.is_zero(ctob(cnf.ZERO))
    one = ctob(n(1))
    assert isinstance(one.head, Succ) and isinstance(one.head.pred.head, Zero)
    assert isinstance(ctob(W).head, Limit)


def test_ctob_certificates_round_trip():
    rng = random.Random(18)
    for _ in range(200):
        a = random_cnf(rng)
        assert B.reify_cnf(ctob(a)) == a
    assert B.reify_cnf(B.EPSILON_0) is None


def test_certificates_commute_with_arithmetic():
    rng = random.Random(19)
    for _ in range(200):
        a, b = random_cnf(rng), random_cnf(rng)
        x, y = ctob(a), ctob(b)
        assert B.reify_cnf(B.add(x, y)) == cnf.add(a, b)
        assert B.reify_cnf(B.mul(x, y)) == cnf.mul(a, b)
        assert B.reify_cnf(B.exp(B.OMEGA, y)) == omega_pow(b)


def test_exp_certificate_needs_omega_base():
    assert B.exp(B.nat(2), B.nat(3)).cert is None


def test_additive_principal():
    rng = random.Random(20)
    for _ in range(100):
        x = random_cnf(rng)
        p = omega_pow(x)
        a = random_below(p, rng)
        assert cnf.add(a, p) == p
        px = B.exp(B.OMEGA, ctob(x))
        assert isinstance(bisim_refute(B.add(ctob(a), px), px, 2, 3), ConsistentUpTo)


def test_finite_factor_absorbed_by_omega_power():
    rng = random.Random(21)
    for _ in range(100):
        x = random_cnf(rng)
        if x.is_zero:
            continue
        k = rng.randint(1, 9)
        v = B.mul(B.nat(k), B.exp(B.OMEGA, ctob(x)))
        assert v.cert == omega_pow(x)


def test_stripped_arithmetic_not_refuted():
    a = strip(B.mul(B.nat(3), B.exp(B.OMEGA, B.nat(1))))
    assert isinstance(bisim_refute(a, strip(B.OMEGA), 2, 4), ConsistentUpTo)


def test_below_epsilon_0():
    rng = random.Random(22)
    towers = [B.tower(k).cert for k in range(7)]
    for _ in range(200):
        a = random_cnf(rng)
        assert any(a < t for t in towers)
    assert B.tower(0).cert == n(1)


def test_describe_is_stable():
    assert B.describe(B.OMEGA) == "w^1"
    assert B.describe(strip(B.OMEGA)) == "lim(ι)"
    assert B.describe(B.succ(strip(B.OMEGA))) == "lim(ι) + 1"
    assert B.describe(strip(B.nat(4))) == "4"
    assert B.describe(B.EPSILON_0) == "lim(k ↦ w↑↑k)"
