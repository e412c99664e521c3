"""Euler characteristics of affine algebraic sets by projection and fiber counting.

``chi(V)`` for ``V ⊂ A^n`` is computed by projecting along one coordinate
``v``.  Over the base the fiber is cut out by polynomials ``f_i`` in ``v``
whose coefficients live on the base.  The base is broken into pieces where
every leading coefficient is nonzero and the generalized resultant
``T0``/``T1`` has constant rank; on such a piece each fiber has the same
number ``r`` of points, so the piece contributes ``r * chi(piece)``.  Pieces
where some leading coefficient vanishes are handled by inclusion–exclusion
with the corresponding ``f_i`` truncated.  Every piece is a difference of two
closed sets, so the recursion only ever asks for ``chi`` of closed loci in
fewer variables.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import PreconditionError, ResourceBudgetExceeded
from .exactmath import (
    ExactMatrix,
    MultiPoly,
    flint_context,
    from_flint,
    gcd_univariate,
    iter_nonzero_minors,
    squarefree_part,
    to_flint,
    univariate_degree,
)
from .groebner import DEFAULT_PAIR_BUDGET, IdealBasis, generic_rank, groebner_basis, vanishes_on_variety
from .resultant import build_T0_T1, distinct_root_count


@dataclass(frozen=True)
class AffineLocus:
    """V(ideal) inside affine space with coordinates ``ideal.vars``."""

    ideal: IdealBasis

    @classmethod
    def of(cls, vars, gens):
        return cls(IdealBasis(vars, gens))

    @property
    def vars(self):
        return self.ideal.vars

    @property
    def n(self) -> int:
        return len(self.ideal.vars)


@dataclass(frozen=True)
class ConstructibleExpr:
    """Formal integer combination of closed loci; chi is extended linearly."""

    terms: tuple

    def __init__(self, terms):
        object.__setattr__(self, "terms", tuple((int(c), loc) for c, loc in terms))
        ns = {loc.vars for _, loc in self.terms}
        if len(ns) > 1:
            raise PreconditionError("loci of a constructible expression must share coordinates")

    def __add__(self, other):
        return ConstructibleExpr(self.terms + other.terms)

    def __sub__(self, other):
        return ConstructibleExpr(self.terms + tuple((-c, l) for c, l in other.terms))

    def __rmul__(self, k: int):
        return ConstructibleExpr(tuple((k * c, l) for c, l in self.terms))


@dataclass
class StratumReport:
    """One piece of the base of a projection.

    ``fiber_kind`` is ``"empty"``, ``"finite"`` (with ``r`` points) or
    ``"line"`` (whole affine line); ``"recursive"`` marks an
    inclusion–exclusion term over a vanishing leading coefficient.
    """

    label: str
    fiber_kind: str
    multiplier: int
    closed: list = field(default_factory=list)  # (coeff, vars, generators)
    chi: Optional[int] = None
    r: Optional[int] = None

    @property
    def stratum(self) -> ConstructibleExpr:
        return ConstructibleExpr([
            (c, AffineLocus.of(v, g)) for c, v, g in self.closed if isinstance(v, tuple)
        ])

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "fiber": self.fiber_kind,
            "points": self.r,
            "multiplier": self.multiplier,
            "chi": self.chi,
            "pieces": [_piece_dict(c, where, payload) for c, where, payload in self.closed],
        }


def _piece_dict(coeff, where, payload) -> dict:
    if where is None:
        return {"coeff": coeff, "kind": "count"}
    if isinstance(where, FiberOver):
        J, fs = payload
        return {"coeff": coeff, "kind": "fiber", "over": [str(g) for g in J],
                "polys": [str(f) for f in fs], "variable": where.v}
    return {"coeff": coeff, "kind": "closed", "vars": list(where), "ideal": [str(g) for g in payload]}


@dataclass
class EulerConfig:
    """Knobs for :class:`EulerEngine`.

    ``order`` fixes the projection order (first listed variable still present
    is projected out next); ``rank_method`` picks between pivot splitting and
    the minors-ideal stratification; ``max_depth`` bounds the nesting of
    closed-locus calls and ``max_calls`` the total work.
    """

    order: Optional[Sequence[str]] = None
    rank_method: str = "pivot"
    max_depth: int = 200
    max_calls: int = 5_000_000
    pair_budget: int = DEFAULT_PAIR_BUDGET
    prune_strata: bool = True
    max_removed_ie: int = 8
    radical_test_terms: int = 40


@dataclass
class WorkCounters:
    closed_calls: int = 0
    fiber_calls: int = 0
    memo_hits: int = 0
    strata: int = 0
    radical_tests: int = 0

    def as_dict(self):
        return dict(self.__dict__)


@dataclass(frozen=True)
class FiberOver:
    """Marks a report piece whose payload ``(J, fs)`` is a fiber problem, not a closed locus."""

    full: tuple
    v: str


def _distinct_roots(polys) -> int:
    """Distinct common roots of univariate polynomials via the squarefree gcd.

    Same value as :func:`distinct_root_count`; the Euclidean route stays
    cheap when products of removed loci make the degrees large.
    """
    live = [p for p in polys if not p.is_zero()]
    if any(p.is_constant() for p in live):
        return 0
    return univariate_degree(squarefree_part(gcd_univariate(live)))


def _monic_key(p: MultiPoly):
    return p.monic().sort_key()


def _product_ideal(ideals: Sequence[Sequence[MultiPoly]], vars) -> list:
    seen = {}
    for ideal in ideals:
        seen.setdefault(tuple(sorted(_monic_key(g) for g in ideal)), ideal)
    cur = [MultiPoly.const(1, vars)]
    for key in sorted(seen):
        ideal = seen[key]
        cur = [a * b for a in cur for b in ideal]
    return cur


class EulerEngine:
    def __init__(self, config: EulerConfig | None = None):
        self.config = config or EulerConfig()
        self.counters = WorkCounters()
        self._closed_memo: dict = {}
        self._fiber_memo: dict = {}
        self._lock = threading.Lock()
        self._depth = threading.local()

    # -- bookkeeping -------------------------------------------------------
    def _tick(self, which: str):
        c = self.counters
        setattr(c, which, getattr(c, which) + 1)
        if c.closed_calls + c.fiber_calls > self.config.max_calls:
            raise ResourceBudgetExceeded(f"recursion budget of {self.config.max_calls} calls exceeded")

    def _enter(self):
        d = getattr(self._depth, "value", 0) + 1
        if d > self.config.max_depth:
            raise ResourceBudgetExceeded(f"recursion depth {self.config.max_depth} exceeded")
        self._depth.value = d

    def _leave(self):
        self._depth.value -= 1

    def _ideal(self, vars, gens) -> IdealBasis:
        return IdealBasis(vars, gens, self.config.pair_budget)

    def _vanishes(self, p, ideal) -> bool:
        """Radical membership, used only to prune empty pieces.

        Large instances are skipped (answer False): a missed pruning costs an
        extra empty branch, never a wrong value.
        """
        size = len(p) + sum(len(g) for g in ideal.basis())
        if size > self.config.radical_test_terms:
            return False
        self.counters.radical_tests += 1
        return vanishes_on_variety(p, ideal)

    # -- closed loci ---------------------------------------------------------
    def closed(self, vars, gens) -> int:
        """chi of V(gens) in affine space with coordinates ``vars``."""
        vars = tuple(vars)
        gens = [g.with_vars(vars) for g in gens if not g.is_zero()]
        self._tick("closed_calls")
        if not gens:
            return 1
        gb = groebner_basis(gens, vars, self.config.pair_budget)
        if not gb:
            return 1
        if len(gb) == 1 and gb[0].is_constant():
            return 0
        used = set()
        for g in gb:
            used.update(g.used_vars())
        used = tuple(v for v in vars if v in used)
        if used != vars:
            gb = tuple(g.with_vars(used) for g in gb)
            gens = list(gb)
            vars = used
        key = (vars, tuple(g.sort_key() for g in gb))
        hit = self._closed_memo.get(key)
        if hit is not None:
            self.counters.memo_hits += 1
            return hit
        self._enter()
        try:
            if len(vars) == 1:
                value = _distinct_roots(gb)
            else:
                value = self._evaluate(self._plan_closed(vars, gb, gens))
        finally:
            self._leave()
        self._closed_memo[key] = value
        return value

    def choose_variable(self, vars, gb, gens) -> str:
        order = self.config.order
        if order is not None:
            for v in order:
                if v in vars:
                    return v
            raise PreconditionError(f"projection order {tuple(order)} misses variables {vars}")
        best, best_score = None, None
        for v in vars:
            score = min(self._split_score(gb, v), self._split_score(gens, v))
            if best_score is None or score < best_score:
                best, best_score = v, score
        return best

    @staticmethod
    def _split_score(polys, v):
        # rough size of the resultant matrix, plus one for each leading
        # coefficient that forces an extra inclusion-exclusion split
        involved = [p for p in polys if p.degree(v) > 0]
        nonconst = sum(1 for p in involved if not p.leading_coeff(v).is_constant())
        degs = [p.degree(v) for p in involved]
        return (max(degs, default=0) * len(degs) + nonconst, nonconst, len(involved), sum(degs))

    def _plan_closed(self, vars, gb, gens):
        v = self.choose_variable(vars, gb, gens)
        # use whichever generating set needs fewer fiber polynomials
        if self._split_score(gens, v) < self._split_score(gb, v):
            source = gens
        else:
            source = list(gb)
        base = tuple(x for x in vars if x != v)
        J = [p.with_vars(base) for p in source if p.degree(v) <= 0]
        fs = [p for p in source if p.degree(v) > 0]
        return self._plan_fiber(vars, v, J, fs)

    # -- fibers ----------------------------------------------------------------
    def fiberwise(self, J_gens, fs, v) -> int:
        """chi of the points over V(J) where every f in ``fs`` vanishes."""
        if not fs:
            raise PreconditionError("need at least one fiber polynomial")
        full = fs[0].vars
        base = tuple(x for x in full if x != v)
        J = [g.with_vars(base) for g in J_gens]
        return self._evaluate(self._plan_fiber(full, v, J, list(fs)))

    def _fiber_value(self, full, v, J, fs) -> int:
        base = tuple(x for x in full if x != v)
        Jb = self._ideal(base, J)
        key = (full, v, tuple(g.sort_key() for g in Jb.basis()), tuple(sorted(f.sort_key() for f in fs)))
        hit = self._fiber_memo.get(key)
        if hit is not None:
            self.counters.memo_hits += 1
            return hit
        self._enter()
        try:
            value = self._evaluate(self._plan_fiber(full, v, J, fs))
        finally:
            self._leave()
        self._fiber_memo[key] = value
        return value

    def _normalize_fiber(self, full, v, J, fs):
        """Reduce coefficients mod J; absorb v-free polynomials into J.

        Returns ``(Jbasis, fs)`` or ``(Jbasis, None)`` when V(J) is empty.
        """
        base = tuple(x for x in full if x != v)
        while True:
            Jb = self._ideal(base, J)
            if Jb.is_unit():
                return Jb, None
            reduced = []
            absorbed = []
            for f in fs:
                coeffs = [Jb.normal_form(c) for c in f.univariate_view(v)]
                while len(coeffs) > 1 and coeffs[-1].is_zero():
                    coeffs.pop()
                if len(coeffs) == 1:
                    if not coeffs[0].is_zero():
                        absorbed.append(coeffs[0])
                    continue
                reduced.append(MultiPoly.from_univariate(coeffs, v, full))
            if not absorbed:
                uniq = {}
                for f in reduced:
                    uniq.setdefault(_monic_key(f), f)
                return Jb, [uniq[k] for k in sorted(uniq)]
            J = list(Jb.basis()) + absorbed
            fs = reduced

    def _plan_fiber(self, full, v, J, fs) -> list:
        self._tick("fiber_calls")
        base = tuple(x for x in full if x != v)
        Jb, fs = self._normalize_fiber(full, v, J, fs)
        if fs is None:
            return []
        if not fs:
            return [StratumReport("cylinder", "line", 1, [(1, base, list(Jb.basis()))])]
        Jgens = list(Jb.basis())
        if not base:
            # base is a point: fibers are the common roots of the fs
            return [StratumReport("point", "finite", 1, [(_distinct_roots(fs), None, None)])]
        reports = []
        leads = [f.leading_coeff(v) for f in fs]
        moving = [i for i, lc in enumerate(leads) if not lc.is_constant()]

        # pieces where some leading coefficient vanishes (inclusion–exclusion)
        empty_sets = []
        for size in range(1, len(moving) + 1):
            for S in itertools.combinations(moving, size):
                if any(set(E) <= set(S) for E in empty_sets):
                    continue
                extra = [leads[i] for i in S]
                sub = self._ideal(base, Jgens + extra)
                if sub.is_unit():
                    empty_sets.append(S)
                    continue
                new_fs = [f.drop_leading(v) if i in S else f for i, f in enumerate(fs)]
                sign = 1 if size % 2 else -1
                reports.append(StratumReport(
                    "lc=0:" + ",".join(str(i) for i in S), "recursive", sign,
                    [(1, FiberOver(full, v), (list(sub.basis()), new_fs))],
                ))

        # the open piece where every leading coefficient is nonzero
        removed = [[leads[i]] for i in moving]
        reports.extend(self._plan_open_piece(full, v, base, Jgens, fs, removed))
        return reports

    def _plan_open_piece(self, full, v, base, Jgens, fs, removed):
        k = len(fs)
        degs = [f.degree(v) for f in fs]
        if k == 1 and degs[0] == 1:
            return [self._stratum_report("lc!=0", "finite", 1, base, Jgens, removed)]
        pr = build_T0_T1(fs, v)
        out = []
        if k == 1:
            T0 = pr.T0.matrix
            for A, rem, rank in self._rank_strata(base, Jgens, removed, T0):
                s0 = T0.cols - rank
                r = degs[0] - s0
                out.append(self._stratum_report(f"s0={s0}", "finite" if r else "empty", r, base, A, rem))
            return out
        T0 = pr.T0.matrix
        for A, rem, rank in self._rank_strata(base, Jgens, removed, T0):
            s0 = T0.cols - rank
            if s0 == 0:
                out.append(self._stratum_report("s0=0", "empty", 0, base, A, rem))
                continue
            if not pr.condition_a1:
                # some fiber polynomial is linear, so the gcd has degree <= 1
                out.append(self._stratum_report(f"s0={s0}", "finite", s0, base, A, rem))
                continue
            T1 = pr.T1.matrix
            for A1, rem1, rank1 in self._rank_strata(base, A, rem, T1):
                s1 = T1.cols - rank1
                r = s0 - s1
                out.append(self._stratum_report(f"s0={s0},s1={s1}", "finite" if r else "empty", r, base, A1, rem1))
        return out

    def _stratum_report(self, label, kind, r, base, A, removed):
        self.counters.strata += 1
        A = list(A)
        if kind == "empty" or len(removed) > self.config.max_removed_ie:
            pieces = [(1, base, A)]
            if removed:
                pieces.append((-1, base, A + _product_ideal(removed, base)))
        else:
            pieces = self._difference_pieces(base, A, removed)
        return StratumReport(label, kind, r, pieces, r=r if kind != "line" else None)

    def _difference_pieces(self, base, A, removed):
        """V(A) minus the union of V(A + R_i), as signed closed loci (inclusion–exclusion).

        Intersections are sums of ideals, which keeps degrees low; subsets
        whose intersection is empty are pruned together with their supersets.
        """
        pieces = [(1, base, A)]
        dead = []
        for size in range(1, len(removed) + 1):
            for S in itertools.combinations(range(len(removed)), size):
                if any(D <= set(S) for D in dead):
                    continue
                gens = A + [g for i in S for g in removed[i]]
                ideal = self._ideal(base, gens)
                if ideal.is_unit():
                    dead.append(set(S))
                    continue
                pieces.append((-1 if size % 2 else 1, base, list(ideal.basis())))
        return pieces

    # -- rank stratification -----------------------------------------------------
    def _rank_strata(self, vars, A, removed, M: ExactMatrix):
        if self.config.rank_method == "minors":
            return self._rank_strata_minors(vars, A, removed, M)
        if self.config.rank_method != "pivot":
            raise PreconditionError(f"unknown rank method {self.config.rank_method!r}")
        return self._rank_strata_pivot(vars, A, removed, M)

    def _stratum_is_empty(self, Ab: IdealBasis, removed) -> bool:
        if Ab.is_unit():
            return True
        if not self.config.prune_strata:
            return False
        for ideal in removed:
            if all(self._vanishes(g, Ab) for g in ideal):
                return True
        return False

    def _rank_strata_pivot(self, vars, A, removed, M: ExactMatrix):
        """Split V(A) minus the removed loci into pieces of constant rank of M.

        Bareiss elimination keeps every entry an exact minor of M.  At each step
        a pivot entry ``e`` is chosen from the entries that survive reduction
        modulo A: where ``e != 0`` it is eliminated (rank + 1), where ``e = 0``
        it joins the ideal.  Entries that are units on the piece need no split.
        """
        out = []
        rows = [[x if isinstance(x, MultiPoly) else MultiPoly.const(x, vars) for x in row] for row in M.entries]
        one = MultiPoly.const(1, vars)
        stack = [(list(A), list(removed), rows, one, 0, True)]
        while stack:
            A, removed, rows, prev, rank, check = stack.pop()
            Ab = self._ideal(vars, A)
            if check and self._stratum_is_empty(Ab, removed):
                continue
            A = list(Ab.basis())
            nf = [[Ab.normal_form(x) for x in row] for row in rows]
            keep_r = [i for i, row in enumerate(nf) if any(not x.is_zero() for x in row)]
            keep_c = [j for j in range(len(rows[0]) if rows else 0)
                      if any(not nf[i][j].is_zero() for i in keep_r)]
            if not keep_r or not keep_c:
                out.append((A, removed, rank))
                continue
            rows = [[rows[i][j] for j in keep_c] for i in keep_r]
            nf = [[nf[i][j] for j in keep_c] for i in keep_r]
            known = {_monic_key(I[0]) for I in removed if len(I) == 1}
            pivot = None
            for i, row in enumerate(nf):
                for j, x in enumerate(row):
                    if x.is_zero():
                        continue
                    if x.is_constant():
                        score = (0, 0, 0)
                    elif _monic_key(x) in known:
                        score = (1, x.total_degree(), len(x))
                    else:
                        score = (2, x.total_degree(), len(x))
                    if pivot is None or score < pivot[0]:
                        pivot = (score, i, j)
            score, i, j = pivot
            e = nf[i][j]
            if score[0] < 2:
                stack.append((A, removed, _bareiss_step(rows, i, j, prev), rows[i][j], rank + 1, False))
                continue
            if self._vanishes(e, Ab):
                stack.append((A + [e], removed, rows, prev, rank, False))
                continue
            # push the e = 0 branch first so the e != 0 branch is emitted first
            stack.append((A + [e], removed, rows, prev, rank, True))
            stack.append((A, removed + [[e]], _bareiss_step(rows, i, j, prev), rows[i][j], rank + 1, False))
        return out

    def _rank_strata_minors(self, vars, A, removed, M: ExactMatrix):
        """Peel off the generic-rank locus: rank t off V(A + Q_t), then recurse into V(A + Q_t)."""
        out = []
        A = list(A)
        while True:
            Ab = self._ideal(vars, A)
            if self._stratum_is_empty(Ab, removed):
                break
            t = generic_rank(M, Ab)
            if t == 0:
                out.append((list(Ab.basis()), removed, 0))
                break
            Q = [Ab.normal_form(q) for q in iter_nonzero_minors(M, t, vars)]
            Q = [q for q in Q if not q.is_zero()]
            out.append((list(Ab.basis()), removed + [Q], t))
            A = list(Ab.basis()) + Q
        return out

    # -- evaluation -----------------------------------------------------------------
    def evaluate_report(self, rep: StratumReport) -> int:
        total = 0
        for coeff, where, payload in rep.closed:
            if where is None:
                total += coeff
            elif isinstance(where, FiberOver):
                J, fs = payload
                total += coeff * self._fiber_value(where.full, where.v, J, fs)
            else:
                total += coeff * self.closed(where, payload)
        return total

    def _evaluate(self, reports) -> int:
        total = 0
        for rep in reports:
            if rep.fiber_kind == "empty" or rep.multiplier == 0:
                continue
            rep.chi = self.evaluate_report(rep)
            total += rep.multiplier * rep.chi
        return total

    def plan(self, vars, gens):
        """Top-level decomposition of V(gens) as a list of reports (not yet evaluated).

        Returns ``(value_if_trivial, reports)``; when the first is not None the
        locus needed no projection.
        """
        vars = tuple(vars)
        gens = [g.with_vars(vars) for g in gens if not g.is_zero()]
        if not gens:
            return 1, []
        gb = groebner_basis(gens, vars, self.config.pair_budget)
        if not gb:
            return 1, []
        if len(gb) == 1 and gb[0].is_constant():
            return 0, []
        used = tuple(v for v in vars if any(v in g.used_vars() for g in gb))
        if used != vars:
            gb = tuple(g.with_vars(used) for g in gb)
            gens = list(gb)
        if len(used) == 1:
            return _distinct_roots(gb), []
        return None, self._plan_closed(used, gb, gens)


def _bareiss_step(rows, i, j, prev):
    """One fraction-free step: pivot (i, j), divide by the previous pivot.

    By Sylvester's identity every new entry is a minor of the original
    matrix, so the division is exact and degrees grow only linearly.
    """
    vars = prev.vars
    ctx = flint_context(vars)
    e = to_flint(rows[i][j], ctx)
    d = to_flint(prev, ctx)
    prow = [to_flint(x, ctx) for x in rows[i]]
    out = []
    for r, row in enumerate(rows):
        if r == i:
            continue
        f = to_flint(row[j], ctx)
        new = []
        for c, x in enumerate(row):
            if c == j:
                continue
            val = e * to_flint(x, ctx)
            if not f.is_zero():
                val -= f * prow[c]
            new.append(from_flint(val / d if not val.is_zero() else val, vars))
        out.append(new)
    return out


# ---------------------------------------------------------------------------
# functional interface


def _locus_args(locus):
    if isinstance(locus, AffineLocus):
        return locus.vars, list(locus.ideal.gens)
    if isinstance(locus, IdealBasis):
        return locus.vars, list(locus.gens)
    raise PreconditionError(f"expected an AffineLocus or IdealBasis, got {type(locus).__name__}")


def chi_base_univariate(ideal: IdealBasis) -> int:
    """chi of V(ideal) in the affine line."""
    if len(ideal.vars) != 1:
        raise PreconditionError("chi_base_univariate needs exactly one variable")
    live = [g for g in ideal.gens if not g.is_zero()]
    if not live:
        return 1
    return distinct_root_count(live)


def chi_affine(locus, order: Sequence[str] | None = None, config: EulerConfig | None = None,
               engine: EulerEngine | None = None) -> int:
    """Exact topological Euler characteristic of V(ideal) ⊂ A^n."""
    vars, gens = _locus_args(locus)
    if engine is None:
        cfg = config or EulerConfig()
        if order is not None:
            if sorted(order) != sorted(vars):
                raise PreconditionError(f"projection order {tuple(order)} is not a permutation of {vars}")
            cfg = EulerConfig(**{**cfg.__dict__, "order": tuple(order)})
        engine = EulerEngine(cfg)
    return engine.closed(vars, gens)


def chi_fiberwise(J: IdealBasis, fs: Sequence[MultiPoly], v: str, config: EulerConfig | None = None) -> int:
    """chi of {(p, t) : p in V(J), f(p, t) = 0 for all f} where t is the coordinate ``v``."""
    return EulerEngine(config).fiberwise(list(J.gens), list(fs), v)


def chi_constructible(e: ConstructibleExpr, config: EulerConfig | None = None) -> int:
    engine = EulerEngine(config)
    return sum(c * chi_affine(loc, engine=engine) for c, loc in e.terms)


def union_chi(loci: Sequence[AffineLocus], M: int | None = None, config: EulerConfig | None = None):
    """chi of a union of closed loci by inclusion–exclusion, plus the ``(2^k - 1) M`` bound.

    When ``M`` is omitted the largest ``|chi|`` over all intersections is used.
    """
    if not loci:
        raise PreconditionError("empty union")
    vars = loci[0].vars
    if any(l.vars != vars for l in loci):
        raise PreconditionError("loci must share coordinates")
    engine = EulerEngine(config)
    k = len(loci)
    exact = 0
    biggest = 0
    for size in range(1, k + 1):
        for S in itertools.combinations(range(k), size):
            gens = [g for i in S for g in loci[i].ideal.gens]
            value = engine.closed(vars, gens)
            biggest = max(biggest, abs(value))
            exact += value if size % 2 else -value
    if M is None:
        M = biggest
    return exact, (2 ** k - 1) * M
