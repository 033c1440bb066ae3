"""Value generators shared by the test modules (seeded random + hypothesis)."""

import random

from hypothesis import strategies as st

from ordinals import cnf
from ordinals.cnf import Cnf, ZERO


def build(pairs):
    """Cnf from descending ``[(exponent Cnf, coefficient), ...]`` via the checked constructor."""
    spine = [e for e, k in pairs for _ in range(k)]
    x = ZERO
    for e in reversed(spine):
        x = Cnf.node(e, x)
    return x


def from_ol(terms):
    return build([(cnf.from_nat(e), k) for e, k in terms])


def to_ol(a):
    out = []
    for e, k in a.coefficients():
        n = e.to_int()
        assert n is not None, f"{a} is not below w^w"
        out.append((n, k))
    return out


def random_cnf(rng: random.Random, height=3, max_terms=3, max_coeff=3):
    if height <= 0:
        return ZERO
    n = rng.randint(0, max_terms)
    exps = {random_cnf(rng, height - 1, max_terms, max_coeff) for _ in range(n)}
    ordered = sorted(exps, reverse=True)
    return build([(e, rng.randint(1, max_coeff)) for e in ordered])


def random_nonzero(rng, **kw):
    while True:
        a = random_cnf(rng, **kw)
        if not a.is_zero:
            return a


def random_limit(rng, **kw):
    while True:
        a = random_cnf(rng, **kw)
        if isinstance(cnf.classify(a), cnf.IsLimit):
            return a


def random_below(a: Cnf, rng: random.Random, max_coeff=3):
    """A random value strictly below a non-zero ``a``."""
    exps = a.terms()
    k = rng.randrange(len(exps))
    prefix = exps[:k]
    nxt = exps[k]
    if nxt.is_zero or rng.random() < 0.2:
        return build([(e, 1) for e in prefix])
    e2 = random_below(nxt, rng, max_coeff)
    tail = [(e2, rng.randint(1, max_coeff))]
    if not e2.is_zero and rng.random() < 0.5:
        tail.append((random_below(e2, rng, max_coeff), rng.randint(1, max_coeff)))
    return build([(e, 1) for e in prefix] + tail)


def small_cnfs(max_nodes):
    """Every Cnf whose tree has at most ``max_nodes`` nodes (exhaustive)."""
    by_size = {0: [ZERO]}
    for n in range(1, max_nodes + 1):
        out = []
        for ls in range(n):
            for a in by_size[ls]:
                for b in by_size[n - 1 - ls]:
                    if b.is_zero or b.head <= a:
                        out.append(Cnf.node(a, b))
        by_size[n] = out
    return [x for n in range(max_nodes + 1) for x in by_size[n]]


@st.composite
def cnfs(draw, height=3, max_terms=3, max_coeff=4):
    if height <= 0:
        return ZERO
    exps = draw(st.lists(cnfs(height - 1, max_terms, max_coeff), max_size=max_terms))
    ordered = sorted(set(exps), reverse=True)
    coeffs = draw(st.lists(st.integers(1, max_coeff), min_size=len(ordered),
                           max_size=len(ordered)))
    return build(list(zip(ordered, coeffs)))


below_omega_omega = st.lists(
    st.tuples(st.integers(0, 5), st.integers(1, 6)), max_size=4
).map(lambda ts: from_ol(sorted({e: k for e, k in ts}.items(), reverse=True)))


def random_expr(rng: random.Random, depth=4, parens=0.2):
    """A random expression tree; ``Paren`` nodes are sprinkled in at rate ``parens``."""
    from ordinals.expr import Add, Mul, NatLit, OmegaSym, Paren, Pow
    if depth <= 0 or rng.random() < 0.25:
        e = OmegaSym() if rng.random() < 0.5 else NatLit(rng.randint(0, 12))
    else:
        op = rng.choice((Add, Mul, Pow))
        e = op(random_expr(rng, depth - 1, parens), random_expr(rng, depth - 1, parens))
    return Paren(e) if rng.random() < parens else e
