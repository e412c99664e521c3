"""Acceptance suite: one block per criterion, each tagged so the run ends with a pass/fail table."""

import itertools
import random
import time
from fractions import Fraction

import pytest

from chitop.bounds import bound_D, bound_M, bound_N, bound_Phi, bound_PhiBar, bound_Psi
from chitop.errors import PreconditionError
from chitop.eulerchar import AffineLocus, chi_affine, union_chi
from chitop.exactmath import MultiPoly
from chitop.mmp import (
    BettiVector, Interval, StepRecord, ThreefoldState, apply_step, chi_e_from_catalog, replay, validate_run,
)
from chitop.catalog import catalog_entry
from chitop.polyparse import parse_poly
from chitop.resultant import common_zero_count, distinct_root_count
from chitop.wps import (
    CyclicQuotientLocus, WeightedLocus, chi_cyclic_quotient, chi_quotient_average, chi_wps, compare_reference,
)

X = ("x",)
XYZU = ("x", "y", "z", "u")


@pytest.fixture(autouse=True)
def _tag(request):
    mark = request.node.get_closest_marker("criterion")
    if mark:
        request.node.user_properties.append(("criterion", mark.args[0]))
        request.node.user_properties.append(("title", mark.args[1]))


@pytest.fixture
def note(request):
    def add(text):
        print(text)
        request.node.user_properties.append(("detail", text))
    return add


def criterion(n, title):
    return pytest.mark.criterion(n, title)


# ---------------------------------------------------------------------------
# 1. resultant rank vs Euclid


def _dense(p: MultiPoly) -> list:
    d = max((e[0] for e in p.terms), default=-1)
    return [Fraction(p.terms[(i,)]) if (i,) in p.terms else Fraction(0) for i in range(d + 1)]


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _rem(a, b):
    a = _trim(a)
    while len(a) >= len(b):
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= q * c
        a = _trim(a)
    return a


def _euclid(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _rem(a, b)
    return a


def euclid_gcd(polys) -> list:
    g = []
    for p in polys:
        g = _euclid(g, _dense(p))
    return g


def squarefree_degree(g: list) -> int:
    if len(g) <= 1:
        return 0
    dg = [i * c for i, c in enumerate(g)][1:]
    return (len(g) - 1) - (len(_euclid(g, dg)) - 1)


def random_upoly(rng, max_deg=8):
    deg = rng.randint(0, max_deg)
    return MultiPoly(X, {(i,): c for i in range(deg + 1) if (c := rng.randint(-9, 9))})


def _systems():
    rng = random.Random(20240501)
    out = []
    while len(out) < 500:
        k = rng.randint(1, 4)
        # plant a common factor half of the time so that nonzero gcds are common
        if rng.random() < 0.5:
            common = random_upoly(rng, 3)
            sys_ = [common * random_upoly(rng, 5) for _ in range(k)]
        else:
            sys_ = [random_upoly(rng) for _ in range(k)]
        if any(not p.is_zero() and max(e[0] for e in p.terms) > 8 for p in sys_):
            continue
        if all(p.is_zero() for p in sys_):
            continue
        out.append(sys_)
    small = [MultiPoly(X, {(i,): c for i, c in enumerate(cs) if c}) for cs in itertools.product((-1, 0, 1), repeat=3)]
    small = [p for p in small if not p.is_zero()]
    for k in (1, 2):
        out.extend(list(s) for s in itertools.product(small, repeat=k))
    return out


@criterion(1, "common_zero_count / distinct_root_count agree with Euclid on 500 random systems + grid, < 30 s")
def test_c01_resultant_vs_euclid(note):
    systems = _systems()
    t0 = time.perf_counter()
    bad = []
    for sys_ in systems:
        g = euclid_gcd(sys_)
        if common_zero_count(sys_) != len(g) - 1 or distinct_root_count(sys_) != squarefree_degree(g):
            bad.append([str(p) for p in sys_])
    elapsed = time.perf_counter() - t0
    note(f"{len(systems)} systems, {len(bad)} disagreements, {elapsed:.1f} s")
    assert not bad, bad[:5]
    assert elapsed < 30


# ---------------------------------------------------------------------------
# 2, 3. weighted hypersurfaces


def _ex52_params():
    for m, k in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]:
        for a in range(1, m * k):
            if a % m and (m * k - a) % m:
                yield m, k, a, m * k - a


EX52 = list(_ex52_params())


def wps_locus(weights, *exprs):
    return WeightedLocus.of(weights, [parse_poly(e, XYZU) for e in exprs], XYZU)


@criterion(2, "chi of xy + z^(mk) + u^k in P(a,b,1,m) is k+2, each < 5 min")
@pytest.mark.parametrize("m,k,a,b", EX52)
def test_c02_cA_exceptional_divisor(m, k, a, b):
    t0 = time.perf_counter()
    assert chi_wps(wps_locus((a, b, 1, m), f"x*y + z^{m * k} + u^{k}")) == k + 2
    assert time.perf_counter() - t0 < 300


EX51_REFERENCE = -13


@criterion(3, "x^2 + z^10 + u^5 in P(5,7,1,2): flagged comparison with the quoted -13, engine = group average")
def test_c03_cAx4_exceptional_divisor(note):
    y = wps_locus((5, 7, 1, 2), "x^2 + z^10 + u^5")
    engine = chi_wps(y)
    oracle = chi_wps(y, quotient="average")
    chk = compare_reference("cAx/4 exceptional divisor, k=2", engine, EX51_REFERENCE)
    note(f"engine {chk.engine}, reference {chk.reference}, discrepancy={chk.discrepancy}, group average {oracle}")
    assert chk.to_dict()["discrepancy"] == (engine != EX51_REFERENCE)
    assert engine == oracle


# ---------------------------------------------------------------------------
# 4. quotients


def _semi_invariant(rng, vars, w, m, char, max_deg=4):
    mons = [e for d in range(max_deg + 1) for e in itertools.product(range(d + 1), repeat=len(vars))
            if sum(e) == d and sum(a * b for a, b in zip(w, e)) % m == char]
    if not any(sum(e) for e in mons):
        return None
    while True:
        terms = {e: rng.choice([-2, -1, 1, 2]) for e in rng.sample(mons, min(len(mons), rng.randint(1, 3)))}
        if any(sum(e) for e in terms):
            return MultiPoly(vars, terms)


def _quotient_corpus():
    rng = random.Random(7)
    out = []
    while len(out) < 100:
        m = rng.choice([1, 2, 2, 3, 3, 4, 4, 5, 6, 6])
        n = rng.choice([1, 2, 2, 3, 3, 3])
        vars = ("x", "y", "z")[:n]
        w = tuple(rng.randrange(m) for _ in range(n))
        gens = []
        for _ in range(rng.choice([1, 1, 2]) if n > 1 else 1):
            g = _semi_invariant(rng, vars, w, m, rng.randrange(m))
            if g is not None:
                gens.append(g)
        if gens:
            out.append(CyclicQuotientLocus.of(m, w, vars, gens))
    return out


@criterion(4, "branched cover = group average on 100 random cyclic quotients, < 5 min")
def test_c04_quotient_oracle(note):
    corpus = _quotient_corpus()
    t0 = time.perf_counter()
    bad = [q for q in corpus if chi_cyclic_quotient(q) != chi_quotient_average(q)]
    elapsed = time.perf_counter() - t0
    note(f"{len(corpus)} instances, {len(bad)} disagreements, {elapsed:.1f} s")
    assert not bad
    assert elapsed < 300


# ---------------------------------------------------------------------------
# 5. whole weighted projective spaces


def _weight_vectors():
    rng = random.Random(5)
    return [tuple(rng.randint(1, 9) for _ in range(rng.randint(0, 4) + 1)) for _ in range(50)]


@criterion(5, "chi of P(a_0..a_n) is n+1 for 50 random weight vectors")
@pytest.mark.parametrize("weights", _weight_vectors())
def test_c05_weighted_projective_space(weights):
    vars = tuple(f"x{i}" for i in range(len(weights)))
    assert chi_wps(WeightedLocus.of(weights, [], vars)) == len(weights)


# ---------------------------------------------------------------------------
# 6. affine fixtures


def affine(vars, *exprs):
    return AffineLocus.of(vars, [parse_poly(e, vars) for e in exprs])


# values from elementary geometry: a line pair is a wedge of two lines (1);
# the conic is C minus two points (0); a cusp and a nodal cubic are a line
# and a line with two points glued (1, 0); the hyperbola is C*; three lines
# in general position are three copies of C glued at three points
AFFINE_FIXTURES = [
    (("x",), (), 1),
    (("x", "y"), (), 1),
    (("x", "y", "z"), (), 1),
    (("x", "y"), ("x*y",), 1),
    (("x", "y"), ("x^2 + y^2 - 1",), 0),
    (("x", "y"), ("y^2 - x^3",), 1),
    (("x", "y"), ("y^2 - x^2*(x + 1)",), 0),
    (("x", "y"), ("x*y - 1",), 0),
    (("x", "y"), ("x*y*(x + y - 1)",), 0),
]


@criterion(6, "affine fixture table")
@pytest.mark.parametrize("vars,eqs,expected", AFFINE_FIXTURES)
def test_c06_affine_fixtures(vars, eqs, expected):
    assert chi_affine(affine(vars, *eqs)) == expected


# ---------------------------------------------------------------------------
# 7. order and coordinate invariance


def _affine_corpus(seed=0):
    rng = random.Random(seed)

    def rpoly(vars, deg):
        t = {}
        for _ in range(rng.randint(2, 4)):
            e = [0] * len(vars)
            for _ in range(rng.randint(0, deg)):
                e[rng.randrange(len(vars))] += 1
            t[tuple(e)] = rng.choice([-3, -2, -1, 1, 2, 3])
        return MultiPoly(vars, t)

    def shear(vars):
        n = len(vars)
        xs = [MultiPoly.var(v, vars) for v in vars]
        perm = list(range(n))
        rng.shuffle(perm)
        sub = {}
        for i, v in enumerate(vars):
            p = xs[perm[i]]
            for j in range(i + 1, n):
                if rng.random() < 0.5:
                    p = p + rng.choice([-1, 1]) * xs[perm[j]]
            sub[v] = p
        return sub

    out = []
    for _ in range(50):
        n = rng.choice([2, 3])
        vars = ("x", "y", "z")[:n]
        k = rng.randint(1, 3) if n == 3 else rng.randint(1, 2)
        gens = [rpoly(vars, rng.randint(1, 4)) for _ in range(k)]
        shears = [[g.substitute(s) for g in gens] for s in (shear(vars) for _ in range(10))]
        out.append((vars, gens, shears))
    return out


AFFINE_CORPUS = _affine_corpus()
_affine_values: dict = {}


@criterion(7, "chi_affine is independent of projection order and of 10 linear coordinate changes (50 instances)")
def test_c07_order_and_coordinate_invariance(note):
    t0 = time.perf_counter()
    bad = []
    for i, (vars, gens, shears) in enumerate(AFFINE_CORPUS):
        base = chi_affine(AffineLocus.of(vars, gens))
        _affine_values[i] = base
        for order in itertools.permutations(vars):
            if chi_affine(AffineLocus.of(vars, gens), order=order) != base:
                bad.append((i, "order", order))
        for j, g2 in enumerate(shears):
            if chi_affine(AffineLocus.of(vars, g2)) != base:
                bad.append((i, "shear", j))
    note(f"50 instances, {len(bad)} disagreements, {time.perf_counter() - t0:.1f} s")
    assert not bad, bad


# ---------------------------------------------------------------------------
# 8. bound soundness


def _deg(p: MultiPoly) -> int:
    return max((sum(e) for e in p.terms), default=0)


@criterion(8, "|chi| <= N on the affine corpora, |chi| <= M on the weighted corpora, N^1 = M^1 = d")
def test_c08_bound_soundness(note):
    checked = 0
    affine_cases = [(vars, [parse_poly(e, vars) for e in eqs], v) for vars, eqs, v in AFFINE_FIXTURES]
    for i, (vars, gens, shears) in enumerate(AFFINE_CORPUS):
        v = _affine_values.get(i)
        if v is None:
            v = chi_affine(AffineLocus.of(vars, gens))
        affine_cases.append((vars, gens, v))
        affine_cases.extend((vars, g2, v) for g2 in shears)
    for vars, gens, v in affine_cases:
        d = max([1] + [_deg(g) for g in gens])
        assert abs(v) <= bound_N(len(vars), d, max(1, len(gens)))
        checked += 1

    weighted = [((a, b, 1, m), m * k, k + 2) for m, k, a, b in EX52]
    y = wps_locus((5, 7, 1, 2), "x^2 + z^10 + u^5")
    weighted.append(((5, 7, 1, 2), 10, chi_wps(y)))
    for weights, d, v in weighted:
        assert abs(v) <= bound_M(len(weights) - 1, d, 1)
        checked += 1

    for d in range(1, 13):
        for k in range(1, 6):
            assert bound_N(1, d, k) == bound_M(1, d, k) == d
    note(f"{checked} instances within their bounds")


# ---------------------------------------------------------------------------
# 9. unions


def _union_corpus():
    rng = random.Random(9)
    vars = ("x", "y")
    pool = ["x", "y", "x - 1", "y - 1", "x + y", "x*y - 1", "x^2 - y", "y^2 - x", "x^2 + y^2 - 1", "x - y", "x*y"]
    out = []
    for _ in range(100):
        k = rng.randint(1, 4)
        loci = []
        for _ in range(k):
            gens = rng.sample(pool, rng.randint(1, 2))
            loci.append(AffineLocus.of(vars, [parse_poly(g, vars) for g in gens]))
        out.append(loci)
    return out


@criterion(9, "inclusion-exclusion chi of a union obeys (2^k - 1) M, 100 unions with k <= 4")
def test_c09_union_bound(note):
    worst = 0
    for loci in _union_corpus():
        exact, bound = union_chi(loci)
        assert abs(exact) <= bound
        # a larger M is also valid
        assert union_chi(loci, M=bound + 1)[1] >= bound
        # the union is the zero set of the product ideal
        vars = loci[0].vars
        prod = [MultiPoly.const(1, vars)]
        for loc in loci:
            prod = [p * g for p in prod for g in loc.ideal.gens]
        assert chi_affine(AffineLocus.of(vars, prod)) == exact
        worst = max(worst, abs(exact))
    note(f"largest |chi| of a union: {worst}")


# ---------------------------------------------------------------------------
# 10, 11. ledger runs


def synthetic_run(rng, rho0, n_steps=10, catalog=False, every_kind=True):
    """A compliant run built only from legal steps; returns (initial state, steps).

    With ``every_kind`` the run is redrawn until all four step kinds occur,
    which needs rho0 >= 3 (each divisorial step lowers rho and rho stays >= 1).
    """
    assert rho0 >= 3 or not every_kind
    ids = ["cA/m", "cAx/4-1", "cD/3-1", "smooth", "ordinary-blowup"]
    while True:
        b2 = rho0 + rng.randint(0, 2)
        dep = rng.randint(1, rho0)
        xi = rng.randint(1, 2 * dep)
        s = ThreefoldState.of((1, rng.randint(0, 2), b2, rng.randint(0, 12), b2, rng.randint(0, 2), 1),
                              dep=dep, rho=rho0, aw=rng.randint(0, xi - 1), xi=xi)
        initial, steps, moves = s, [], 0
        for _ in range(n_steps):
            kinds = ["flop"]
            if moves < 2 * rho0:
                if s.dep > 0:
                    kinds.append("flip")
                if s.rho > 1 and s.betti[2] > 1:
                    kinds += ["div_to_point", "div_to_curve_lci"]
            kind = rng.choice(kinds)
            if kind == "div_to_point":
                dep_after = min(rho0, s.dep + rng.choice([-1, 0, 1]))
                st = (StepRecord(kind, catalog=rng.choice(ids), dep_after=max(0, dep_after)) if catalog
                      else StepRecord(kind, chi_e=rng.randint(1, 9), dep_after=max(0, dep_after)))
            elif kind == "div_to_curve_lci":
                st = StepRecord(kind, chi_c=rng.randint(-2, 4))
            else:
                st = StepRecord(kind)
            try:
                s = apply_step(s, st)
            except PreconditionError:  # b3 would go negative
                st = StepRecord("flop")
                s = apply_step(s, st)
            moves += st.kind != "flop"
            steps.append(st)
        if not every_kind or {st.kind for st in steps} == {"flop", "flip", "div_to_point", "div_to_curve_lci"}:
            return initial, steps


def _runs(seed, count, rhos, **kw):
    rng = random.Random(seed)
    return [synthetic_run(rng, rng.choice(rhos), **kw) for _ in range(count)]


RUNS = _runs(10, 25, [3, 4, 5, 6])


@criterion(10, "synthetic 10-step runs: compliant runs validate, each seeded defect is reported")
def test_c10_compliant_runs():
    for x0, steps in RUNS:
        states = replay(x0, steps)
        assert len(steps) == 10
        rep = validate_run(states, steps)
        assert rep.ok, rep.violations
        for s in states:
            assert [s.betti[j] for j in (0, 1, 5, 6)] == [x0.betti[j] for j in (0, 1, 5, 6)]
        for st, x, w in zip(steps, states, states[1:]):
            drop = 1 if st.divisorial else 0
            assert (x.betti[2] - w.betti[2], x.betti[4] - w.betti[4]) == (drop, drop)


@criterion(10, "synthetic 10-step runs: compliant runs validate, each seeded defect is reported")
def test_c10_flip_at_depth_zero_rejected():
    s = ThreefoldState.of((1, 0, 3, 4, 3, 0, 1), dep=0, rho=3)
    with pytest.raises(PreconditionError):
        apply_step(s, StepRecord("flip"))
    with pytest.raises(PreconditionError):
        replay(s, [StepRecord("flop"), StepRecord("flip")])


def _with(s, betti=None, **kw):
    b = list(s.betti.b)
    for j, v in (betti or {}).items():
        b[j] = v
    fields = {f: getattr(s, f) for f in ("dep", "rho", "aw", "xi")}
    return ThreefoldState(BettiVector(b), **{**fields, **kw})


def _b3_plus_one(x, w):
    return _with(w, betti={3: w.betti[3] + 1}) if isinstance(w.betti[3], int) else None


# (code, step kinds the defect attaches to, tamper(x, w) -> W or None, consequences the defect forces)
DEFECTS = [
    ("constant_betti", None, lambda x, w: _with(w, betti={1: w.betti[1] + 1}), set()),
    ("b2_b4", ("div_to_point", "div_to_curve_lci"),
     lambda x, w: _with(w, betti={2: w.betti[2] + 1, 4: w.betti[4] + 1}), set()),
    ("b2_b4", ("flop",), lambda x, w: _with(w, betti={4: w.betti[4] - 1}) if w.betti[4] > 0 else None, set()),
    ("rho_update", ("div_to_point", "div_to_curve_lci"), lambda x, w: _with(w, rho=w.rho + 1), set()),
    ("b3_update", ("div_to_point",), _b3_plus_one, set()),
    ("b3_update", ("flop",), _b3_plus_one, set()),
    ("xi_depth", None, lambda x, w: _with(w, xi=2 * w.dep + 1), set()),
    ("aw_xi", None, lambda x, w: _with(w, aw=w.xi + 1), set()),
    ("flip_depth", ("flip",), lambda x, w: _with(w, dep=x.dep, xi=min(w.xi, 2 * x.dep)), set()),
    ("div_depth", ("div_to_point",), lambda x, w: _with(w, dep=x.dep + 2), set()),
]


def _seed_defect(x0, steps, kinds, tamper, depth_limit):
    states = replay(x0, steps)
    for i, st in enumerate(steps):
        if kinds is not None and st.kind not in kinds:
            continue
        w = tamper(states[i], states[i + 1])
        if w is None or w.dep > depth_limit:
            continue
        try:
            tail = replay(w, steps[i + 1:])
        except PreconditionError:
            continue
        return states[:i + 1] + tail
    return None


@criterion(10, "synthetic 10-step runs: compliant runs validate, each seeded defect is reported")
@pytest.mark.parametrize("code,kinds,tamper,forced", DEFECTS, ids=[f"{d[0]}-{i}" for i, d in enumerate(DEFECTS)])
def test_c10_seeded_defect(code, kinds, tamper, forced):
    seeded = 0
    for x0, steps in RUNS:
        states = _seed_defect(x0, steps, kinds, tamper, x0.rho)
        if states is None:
            continue
        seeded += 1
        codes = validate_run(states, steps).codes()
        assert code in codes
        assert codes - {code} <= forced, codes
    assert seeded > 0


@criterion(10, "synthetic 10-step runs: compliant runs validate, each seeded defect is reported")
def test_c10_depth_above_rho_defect():
    seeded = 0
    for x0, steps in RUNS:
        states = _seed_defect(x0, steps, ("flop", "div_to_curve_lci"),
                              lambda x, w: _with(w, dep=x0.rho + 1), x0.rho + 1)
        if states is None:
            continue
        seeded += 1
        codes = validate_run(states, steps).codes()
        assert "depth_rho" in codes
        # a later flip from the illegal depth may legitimately overshoot the b3 ceiling
        assert codes - {"depth_rho"} <= {"b3_bound"}
    assert seeded > 0


@criterion(10, "synthetic 10-step runs: compliant runs validate, each seeded defect is reported")
def test_c10_step_count_defect():
    # more than 2 rho moves is only possible if rho is not updated, which is reported as well
    for x0, steps in RUNS:
        states = replay(x0, steps)
        moves = sum(st.kind != "flop" for st in steps)
        low = moves // 2 - 1 if moves % 2 == 0 else moves // 2
        if low < max(s.dep for s in states) or low < 1:
            continue
        fake = [_with(s, rho=low) for s in states]
        codes = validate_run(fake, steps).codes()
        assert "step_count" in codes
        assert codes - {"step_count"} <= {"rho_update"}


@criterion(10, "synthetic 10-step runs: compliant runs validate, each seeded defect is reported")
def test_c10_b3_bound_defect():
    for x0, steps in RUNS:
        states = replay(x0, steps)
        last = states[-1]
        states[-1] = _with(last, betti={3: x0.betti[3] + bound_PhiBar(x0.rho) + 1})
        codes = validate_run(states, steps).codes()
        assert "b3_bound" in codes
        # the jump itself is also an illegal b3 update on the final step
        assert codes - {"b3_bound"} <= {"b3_update"}


def _hi(b3):
    return b3.hi if isinstance(b3, Interval) else b3


@criterion(11, "realized b3 stays below b3(X_0) + PhiBar(rho) on replayed runs, rho <= 3, chi(E) from wps")
def test_c11_b3_ceiling(note):
    chis = {i: chi_e_from_catalog(catalog_entry(i)) for i in ["cA/m", "cAx/4-1", "cD/3-1", "smooth", "ordinary-blowup"]}
    runs = _runs(11, 30, [3], catalog=True) + _runs(12, 20, [1, 2, 3], catalog=True, every_kind=False)
    worst = 0
    for x0, steps in runs:
        ceiling = x0.betti[3] + bound_PhiBar(x0.rho)
        for coarse in (False, True):
            states = replay(x0, steps, coarse=coarse)
            assert validate_run(states, steps).ok or coarse
            for s in states:
                assert _hi(s.betti[3]) <= ceiling
        exact = [s.betti[3] for s in replay(x0, steps) if isinstance(s.betti[3], int)]
        worst = max(worst, max(exact) - x0.betti[3])
    note(f"chi(E) via wps: {chis}; largest exact b3 growth {worst} over {len(runs)} runs, "
         f"ceiling slack from PhiBar(3) = {bound_PhiBar(3)}")


# ---------------------------------------------------------------------------
# 12. telescoping


@criterion(12, "Psi(s, dep) = D(dep) + s Phi(dep - 1) for s, dep <= 6")
def test_c12_psi_telescoping():
    for dep in range(7):
        for s in range(7):
            assert bound_Psi(s, dep) == bound_D(dep) + s * bound_Phi(dep - 1)
