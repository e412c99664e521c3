"""Euler characteristics of weighted projective loci and cyclic quotients.

A weighted projective locus is cut into the chart where one coordinate is
nonzero (an affine cone slice modulo a cyclic group) and the rest, which lives
in a smaller weighted projective space.  Cyclic quotients are evaluated with the
branched-cover identity

    chi(X / mu_m) = (chi(X) - chi(R)) / m + chi(R / mu_m)

where R is the set of points with nontrivial stabilizer.  The group-average
formula ``chi(X/G) = (1/|G|) sum_g chi(X^g)`` is kept as an independent check.
"""

from __future__ import annotations

import logging

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Sequence

from .errors import PreconditionError
from .eulerchar import EulerConfig, EulerEngine
from .exactmath import MultiPoly, weighted_degree

_logger = logging.getLogger(__name__)
from .groebner import IdealBasis, vanishes_on_variety


@dataclass(frozen=True)
class WeightedSpace:
    weights: tuple

    def __post_init__(self):
        w = tuple(int(a) for a in self.weights)
        if any(a < 1 for a in w):
            raise PreconditionError(f"weights must be positive integers, got {w}")
        object.__setattr__(self, "weights", w)

    @property
    def dim(self) -> int:
        return len(self.weights) - 1


@dataclass(frozen=True)
class WeightedLocus:
    """Zero locus of weighted-homogeneous polynomials in P(weights)."""

    space: WeightedSpace
    gens: tuple
    vars: tuple = ()

    def __post_init__(self):
        gens = tuple(self.gens)
        vars = tuple(self.vars) or (gens[0].vars if gens else ())
        if len(vars) != len(self.space.weights):
            raise PreconditionError(
                f"{len(self.space.weights)} weights for {len(vars)} coordinates {vars}")
        gens = tuple(g.with_vars(vars) for g in gens)
        for g in gens:
            _, homogeneous = weighted_degree(g, self.space.weights)
            if not homogeneous:
                raise PreconditionError(f"{g} is not weighted-homogeneous for weights {self.space.weights}")
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "vars", vars)

    @classmethod
    def of(cls, weights: Sequence[int], gens: Sequence[MultiPoly], vars: Sequence[str] = ()):
        return cls(WeightedSpace(tuple(weights)), tuple(gens), tuple(vars))


@dataclass(frozen=True)
class CyclicQuotientLocus:
    """V(ideal) in A^n modulo mu_m acting by ``x_i -> zeta^{w_i} x_i``."""

    order: int
    weights: tuple
    ideal: IdealBasis

    def __post_init__(self):
        m = int(self.order)
        if m < 1:
            raise PreconditionError(f"group order must be positive, got {m}")
        if len(self.weights) != len(self.ideal.vars):
            raise PreconditionError(
                f"{len(self.weights)} action weights for {len(self.ideal.vars)} variables")
        w = tuple(int(a) % m for a in self.weights)
        for g in self.ideal.gens:
            chars = {sum(a * e for a, e in zip(w, exp)) % m for exp in g.terms}
            if len(chars) > 1:
                raise PreconditionError(f"{g} is not semi-invariant under 1/{m}{w}")
        object.__setattr__(self, "order", m)
        object.__setattr__(self, "weights", w)

    @classmethod
    def of(cls, order: int, weights: Sequence[int], vars: Sequence[str], gens: Sequence[MultiPoly] = ()):
        return cls(order, tuple(weights), IdealBasis(vars, gens))

    @property
    def vars(self) -> tuple:
        return self.ideal.vars


def effective_action(m: int, weights: Sequence[int]) -> tuple:
    """Order and weights of the faithful action obtained by dividing out the kernel."""
    eff = reduce(lambda a, b: a * b // gcd(a, b), (m // gcd(m, w) for w in weights), 1)
    step = m // eff
    return eff, tuple((w // step) % eff for w in weights)


def _prime_factors(m: int) -> list:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    return out + ([m] if m > 1 else [])


def _restrict(vars, gens, keep: Sequence[int]):
    """Intersect with the coordinate subspace spanned by the variables at ``keep``."""
    sub_vars = tuple(vars[i] for i in keep)
    zero = {v: 0 for i, v in enumerate(vars) if i not in keep}
    out = []
    for g in gens:
        h = (g.substitute(zero) if zero else g).with_vars(sub_vars)
        if not h.is_zero():
            out.append(h)
    return sub_vars, out


@dataclass
class QuotientEngine:
    """Shared state for quotient and weighted projective computations."""

    config: EulerConfig = field(default_factory=EulerConfig)
    engine: EulerEngine | None = None
    method: str = "cover"

    def __post_init__(self):
        if self.engine is None:
            self.engine = EulerEngine(self.config)
        if self.method not in ("cover", "average"):
            raise PreconditionError(f"unknown quotient method {self.method!r}")
        self._memo: dict = {}

    def affine(self, vars, gens) -> int:
        return self.engine.closed(tuple(vars), list(gens))

    # -- cyclic quotients ----------------------------------------------------------
    def quotient(self, m: int, weights, vars, gens) -> int:
        if self.method == "average":
            return self.quotient_average(m, weights, vars, gens)
        return self.quotient_cover(m, weights, vars, gens)

    def quotient_cover(self, m: int, weights, vars, gens) -> int:
        """Branched-cover evaluation, recursing into the ramification strata."""
        m, weights = effective_action(m, weights)
        vars = tuple(vars)
        if m == 1 or not vars:
            return self.affine(vars, gens)
        key = ("cover", m, weights, vars, tuple(sorted(g.sort_key() for g in gens)))
        if key in self._memo:
            return self._memo[key]
        # the subgroup of prime order p fixes the coordinates whose weight it kills
        fixed = {}
        for p in _prime_factors(m):
            keep = tuple(i for i, w in enumerate(weights) if (w * (m // p)) % m == 0)
            fixed.setdefault(keep, p)
        strata = list(fixed)
        chi_r = chi_r_image = 0
        for size in range(1, len(strata) + 1):
            sign = 1 if size % 2 else -1
            for combo in combinations(strata, size):
                keep = tuple(sorted(set.intersection(*(set(c) for c in combo))))
                sub_vars, sub_gens = _restrict(vars, gens, keep)
                chi_r += sign * self.affine(sub_vars, sub_gens)
                chi_r_image += sign * self.quotient_cover(m, tuple(weights[i] for i in keep), sub_vars, sub_gens)
        free = self.affine(vars, gens) - chi_r
        if free % m:
            raise PreconditionError(f"free part chi {free} is not divisible by the group order {m}")
        value = free // m + chi_r_image
        self._memo[key] = value
        return value

    def quotient_average(self, m: int, weights, vars, gens) -> int:
        """``(1/m) sum_j chi(X^{g^j})`` with each fixed locus cut by coordinate hyperplanes."""
        vars = tuple(vars)
        weights = tuple(int(w) % m for w in weights)
        total = 0
        by_keep: dict = {}
        for j in range(m):
            keep = tuple(i for i, w in enumerate(weights) if (w * j) % m == 0)
            by_keep[keep] = by_keep.get(keep, 0) + 1
        for keep, count in by_keep.items():
            sub_vars, sub_gens = _restrict(vars, gens, keep)
            total += count * self.affine(sub_vars, sub_gens)
        if total % m:
            raise PreconditionError(f"group average {Fraction(total, m)} is not an integer")
        return total // m

    # -- weighted projective loci -----------------------------------------------------
    def wps(self, weights, vars, gens, log: list | None = None) -> int:
        """chi of V(gens) in P(weights), peeling off one coordinate chart at a time.

        When ``log`` is a list, one entry per chart is appended to it.
        """
        weights, vars = tuple(weights), tuple(vars)
        gens = [g.with_vars(vars) for g in gens if not g.is_zero()]
        if not vars:
            return 0
        if any(g.is_constant() for g in gens):
            return 0
        cone = IdealBasis(vars, gens, self.config.pair_budget)
        for i, v in enumerate(vars):
            if gens and vanishes_on_variety(MultiPoly.var(v, vars), cone):
                continue
            chart = self._chart(weights, vars, gens, i)
            rest_vars = vars[:i] + vars[i + 1:]
            rest_w = weights[:i] + weights[i + 1:]
            _, rest = _restrict(vars, gens, [j for j in range(len(vars)) if j != i])
            if log is not None:
                log.append({"chart": v, "order": weights[i], "chi": chart})
            return chart + self.wps(rest_w, rest_vars, rest, log)
        # every coordinate vanishes on the cone, so the locus is empty
        return 0

    def _chart(self, weights, vars, gens, i) -> int:
        """The chart ``x_i != 0``: the slice ``x_i = 1`` of the cone modulo mu_{a_i}."""
        rest_vars = vars[:i] + vars[i + 1:]
        sliced = [g.substitute({vars[i]: 1}).with_vars(rest_vars) for g in gens]
        sliced = [g for g in sliced if not g.is_zero()]
        if any(g.is_constant() for g in sliced):
            return 0
        a = weights[i]
        return self.quotient(a, tuple(w % a for w in weights[:i] + weights[i + 1:]), rest_vars, sliced)


def _engine(config, method="cover", engine=None) -> QuotientEngine:
    return QuotientEngine(config or EulerConfig(), engine, method)


def chi_cyclic_quotient(q: CyclicQuotientLocus, config: EulerConfig | None = None) -> int:
    """Exact chi of V(ideal)/mu_m through the branched-cover identity."""
    return _engine(config).quotient_cover(q.order, q.weights, q.vars, [g for g in q.ideal.gens if not g.is_zero()])


def chi_quotient_average(q: CyclicQuotientLocus, config: EulerConfig | None = None) -> int:
    """Exact chi of V(ideal)/mu_m by averaging fixed-locus characteristics over the group."""
    return _engine(config).quotient_average(q.order, q.weights, q.vars, [g for g in q.ideal.gens if not g.is_zero()])


def chi_wps(y: WeightedLocus, config: EulerConfig | None = None, quotient: str = "cover",
            engine: QuotientEngine | None = None) -> int:
    """Exact chi of a weighted-homogeneous locus in P(a_0..a_n).

    ``quotient`` selects how chart quotients are evaluated: ``"cover"`` or the
    group-average ``"average"``.
    """
    eng = engine or _engine(config, quotient)
    return eng.wps(y.space.weights, y.vars, list(y.gens))


@dataclass(frozen=True)
class ReferenceCheck:
    """An engine value set against a value quoted from elsewhere.

    A mismatch is never resolved silently: both numbers are kept and
    ``discrepancy`` is raised.  The engine value is the one used downstream.
    """

    label: str
    engine: int
    reference: int

    @property
    def discrepancy(self) -> bool:
        return self.engine != self.reference

    def to_dict(self) -> dict:
        return {"label": self.label, "engine": self.engine, "reference": self.reference,
                "discrepancy": self.discrepancy}


def compare_reference(label: str, engine_value: int, reference: int) -> ReferenceCheck:
    chk = ReferenceCheck(label, int(engine_value), int(reference))
    if chk.discrepancy:
        _logger.warning("%s: engine gives %d, reference value is %d; keeping the engine value",
                    label, chk.engine, chk.reference)
    return chk


# ---------------------------------------------------------------------------
# weighted blow-ups


@dataclass(frozen=True)
class BlowupResult:
    chi_e: int
    delta_chi: int
    weights: tuple
    initial_forms: tuple
    degree: int

    def to_dict(self) -> dict:
        return {
            "chiE": self.chi_e,
            "deltaChi": self.delta_chi,
            "weights": list(self.weights),
            "initial_forms": [str(f) for f in self.initial_forms],
            "weighted_degree": self.degree,
        }


def _integer_weights(sigma: Sequence) -> tuple:
    fr = [Fraction(s) for s in sigma]
    if any(s <= 0 for s in fr):
        raise PreconditionError(f"blow-up weights must be positive, got {[str(s) for s in fr]}")
    den = reduce(lambda a, b: a * b // gcd(a, b), (s.denominator for s in fr), 1)
    ints = [int(s * den) for s in fr]
    g = reduce(gcd, ints)
    return tuple(i // g for i in ints)


def initial_form(f: MultiPoly, weights: Sequence[int]) -> tuple:
    """Lowest-weight part of ``f`` and its weight."""
    if f.is_zero():
        raise PreconditionError("the zero polynomial has no initial form")
    wt = {e: sum(a * b for a, b in zip(e, weights)) for e in f.terms}
    low = min(wt.values())
    return MultiPoly(f.vars, {e: c for e, c in f.terms.items() if wt[e] == low}), low


def exceptional_divisor_chi(ambient: CyclicQuotientLocus, sigma: Sequence, max_degree: int | None = None,
                            config: EulerConfig | None = None) -> BlowupResult:
    """chi of the exceptional divisor of the weighted blow-up of a germ at the origin.

    ``sigma`` is the weight vector ``(1/m)(a_0..a_n)`` (rationals); the divisor
    is the locus of the initial forms in P(a_0..a_n).
    """
    vars = ambient.vars
    if len(sigma) != len(vars):
        raise PreconditionError(f"{len(sigma)} blow-up weights for {len(vars)} variables {vars}")
    weights = _integer_weights(sigma)
    forms, degree = [], 0
    for g in ambient.ideal.gens:
        if g.is_zero():
            continue
        if g.constant_term() != 0:
            raise PreconditionError(f"{g} does not pass through the origin")
        init, low = initial_form(g, weights)
        if max_degree is not None and low > max_degree:
            offending = min(init.terms, key=lambda e: tuple(e))
            term = MultiPoly(vars, {offending: init.terms[offending]})
            raise PreconditionError(f"term {term} has weighted degree {low} above the limit {max_degree}")
        forms.append(init)
        degree = max(degree, low)
    chi_e = chi_wps(WeightedLocus.of(weights, forms, vars), config)
    return BlowupResult(chi_e, chi_e - 1, weights, tuple(forms), degree)
