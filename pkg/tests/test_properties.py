"""Randomized invariants of the engines."""

from fractions import Fraction
from itertools import permutations

from hypothesis import assume, given
from hypothesis import strategies as st

from chitop.eulerchar import AffineLocus, chi_affine
from chitop.exactmath import MultiPoly, formal_derivative, gcd_univariate, squarefree_part, univariate_degree
from chitop.mmp import Interval, StepRecord, ThreefoldState, apply_step, invert_step, replay, validate_run
from chitop.resultant import common_zero_count, distinct_root_count
from chitop.wps import CyclicQuotientLocus, WeightedLocus, chi_cyclic_quotient, chi_quotient_average, chi_wps

X = ("x",)
XY = ("x", "y")
coeff = st.integers(-4, 4)


def poly(vars, max_deg, max_terms=4):
    n = len(vars)
    exps = st.tuples(*[st.integers(0, max_deg)] * n).filter(lambda e: sum(e) <= max_deg)
    return st.dictionaries(exps, coeff, min_size=1, max_size=max_terms).map(lambda t: MultiPoly(vars, t))


def upoly(max_deg=6):
    return st.lists(st.integers(-9, 9), min_size=2, max_size=max_deg + 1).map(
        lambda c: MultiPoly(X, {(i,): v for i, v in enumerate(c)}))


def euclid_gcd_degree(polys):
    """Degree of the gcd by Euclid over Fractions."""
    def dense(p):
        d = max((e[0] for e in p.terms), default=-1)
        return [Fraction(int(p.terms.get((i,), 0).numerator), int(p.terms.get((i,), 0).denominator))
                if (i,) in p.terms else Fraction(0) for i in range(d + 1)]

    def rem(a, b):
        a = a[:]
        while len(a) >= len(b) and any(a):
            q = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] -= q * c
            while a and a[-1] == 0:
                a.pop()
        return a

    g = []
    for p in polys:
        a = dense(p)
        while a and a[-1] == 0:
            a.pop()
        if not g:
            g = a
            continue
        while a:
            g, a = a, rem(g, a)
    return len(g) - 1


@given(poly(XY, 3), poly(XY, 3), poly(XY, 3))
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f).is_zero()


@given(poly(XY, 6, 12), poly(XY, 6, 12))
def test_large_products_match_termwise_sum(f, g):
    acc = MultiPoly.zero(XY)
    for e, c in g.terms.items():
        acc = acc + f * MultiPoly(XY, {e: c})
    assert f * g == acc


@given(st.lists(upoly(), min_size=1, max_size=4))
def test_gcd_degree_matches_euclid(gs):
    assume(not all(g.is_zero() for g in gs))
    live = [g for g in gs if not g.is_zero()]
    assume(not any(g.is_constant() for g in live))
    assert univariate_degree(gcd_univariate(live)) == euclid_gcd_degree(live)
    assert common_zero_count(live) == euclid_gcd_degree(live)


@given(upoly())
def test_squarefree_part_is_squarefree(g):
    assume(not g.is_constant())
    s = squarefree_part(g)
    assert univariate_degree(gcd_univariate([s, formal_derivative(s, "x")])) == 0
    assert distinct_root_count([g]) == univariate_degree(s)


@given(poly(XY, 3), poly(XY, 3))
def test_chi_additive_over_union(f, g):
    assume(not f.is_constant() and not g.is_constant())
    loc = lambda *gens: chi_affine(AffineLocus.of(XY, list(gens)))
    assert loc(f * g) == loc(f) + loc(g) - loc(f, g)


@given(upoly(4), upoly(4))
def test_chi_of_product_of_point_sets(f, g):
    assume(not f.is_constant() and not g.is_constant())
    gy = MultiPoly(XY, {(0, e[0]): c for e, c in g.terms.items()})
    fx = f.with_vars(XY)
    assert chi_affine(AffineLocus.of(XY, [fx, gy])) == distinct_root_count([f]) * distinct_root_count([g])


@given(poly(XY, 3), st.integers(-2, 2))
def test_shear_and_order_invariance(f, a):
    x, y = MultiPoly.var("x", XY), MultiPoly.var("y", XY)
    base = chi_affine(AffineLocus.of(XY, [f]))
    assert chi_affine(AffineLocus.of(XY, [f]), order=("y", "x")) == base
    assert chi_affine(AffineLocus.of(XY, [f.substitute({"x": x + a * y})])) == base


@given(upoly(4))
def test_graph_of_function(p):
    y = MultiPoly.var("y", XY)
    assert chi_affine(AffineLocus.of(XY, [y - p.with_vars(XY)])) == 1


@st.composite
def quotient_instance(draw):
    n = draw(st.integers(1, 3))
    vars = ("x", "y", "z")[:n]
    m = draw(st.integers(2, 6))
    w = tuple(draw(st.integers(0, m - 1)) for _ in range(n))
    target = draw(st.integers(0, m - 1))
    exps = st.tuples(*[st.integers(0, 4)] * n).filter(
        lambda e: sum(e) <= 4 and sum(a * b for a, b in zip(e, w)) % m == target)
    gens = draw(st.lists(st.dictionaries(exps, coeff, min_size=1, max_size=3), max_size=2))
    return CyclicQuotientLocus.of(m, w, vars, [MultiPoly(vars, t) for t in gens if t])


@given(quotient_instance())
def test_cover_matches_group_average(q):
    assert chi_cyclic_quotient(q) == chi_quotient_average(q)


@given(st.lists(st.integers(1, 9), min_size=1, max_size=4))
def test_wps_zero_ideal(weights):
    vars = ("a", "b", "c", "d")[:len(weights)]
    assert chi_wps(WeightedLocus.of(weights, [], vars)) == len(weights)


@given(st.permutations(range(3)))
def test_wps_permutation_invariance(perm):
    vars = ("x", "y", "z")
    weights = (1, 2, 3)
    f = MultiPoly(vars, {(6, 0, 0): 1, (0, 3, 0): 1, (0, 0, 2): 1, (1, 1, 1): 2})
    base = chi_wps(WeightedLocus.of(weights, [f], vars))
    pvars = tuple(vars[i] for i in perm)
    pweights = tuple(weights[i] for i in perm)
    assert chi_wps(WeightedLocus.of(pweights, [f.with_vars(pvars)], pvars)) == base


step_kinds = st.sampled_from(["div_to_point", "div_to_curve_lci", "flop"])


@st.composite
def ledger_run(draw):
    rho = draw(st.integers(1, 4))
    b2 = rho + draw(st.integers(0, 3))
    b3 = draw(st.integers(10, 30))
    x0 = ThreefoldState.of((1, 0, b2, b3, b2, 0, 1), dep=0, rho=rho)
    steps = []
    divisorial = 0
    for _ in range(draw(st.integers(0, 2 * rho))):
        kind = draw(step_kinds)
        if kind != "flop" and divisorial == rho:
            kind = "flop"
        if kind == "div_to_point":
            steps.append(StepRecord(kind, chi_e=draw(st.integers(1, 6)), dep_after=0))
        elif kind == "div_to_curve_lci":
            steps.append(StepRecord(kind, chi_c=draw(st.integers(-2, 2))))
        else:
            steps.append(StepRecord(kind))
        divisorial += kind != "flop"
    return x0, steps


@given(ledger_run())
def test_ledger_replay_invariants(run):
    x0, steps = run
    states = replay(x0, steps)
    assert validate_run(states, steps).ok
    assert x0.betti[2] - states[-1].betti[2] == sum(s.divisorial for s in steps)
    for s in states:
        assert [s.betti[i] for i in (0, 1, 5, 6)] == [1, 0, 0, 1]


@given(ledger_run())
def test_inverse_restores(run):
    x0, steps = run
    states = replay(x0, steps)
    for before, st, after in zip(states, steps, states[1:]):
        if st.divisorial:
            assert invert_step(after, st, before.dep, before.aw, before.xi) == before


@given(ledger_run())
def test_coarse_replay_contains_exact(run):
    x0, steps = run
    exact = replay(x0, steps)
    coarse = replay(x0, steps, coarse=True)
    for e, c in zip(exact, coarse):
        b3 = c.betti[3]
        assert (e.betti[3] in b3) if isinstance(b3, Interval) else e.betti[3] == b3
