"""Generalized resultant matrices and the root counts they encode.

For univariate ``g_1, ..., g_k`` of degrees ``d_i`` the matrix ``T`` has one
row block per ``i < k``.  Row block ``i`` is ``d_i + d_k`` rows tall and holds a
banded copy of ``g_i`` in the first ``d_k`` columns and a banded copy of
``g_k`` in its own column block of width ``d_i``.  A kernel vector is a tuple
``(u, v_1, ..., v_{k-1})`` with ``u * g_i + v_i * g_k = 0`` for every ``i``,
so the nullity is ``deg gcd(g_1, ..., g_k)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from gmpy2 import mpq

from .errors import PreconditionError
from .exactmath import (
    ExactMatrix,
    MultiPoly,
    _univariate_var,
    gcd_univariate,
    rank_nullity,
    squarefree_part,
    univariate_degree,
)


@dataclass(frozen=True)
class ResultantMatrix:
    matrix: ExactMatrix
    degrees: tuple
    rows: int
    cols: int

    def block_shape(self, i: int):
        """(rows, cols) of row block ``i`` (1-based, ``i < k``)."""
        d = self.degrees
        return d[i - 1] + d[-1], self.cols


def resultant_layout(coeffs: Sequence[Sequence], zero) -> ResultantMatrix:
    """Assemble T from coefficient lists (lowest power first, nonzero top entry).

    Entries may be scalars or polynomials; ``zero`` fills the empty positions.
    """
    k = len(coeffs)
    if k < 2:
        raise PreconditionError("the resultant layout needs at least two polynomials")
    degs = tuple(len(c) - 1 for c in coeffs)
    if any(d < 1 for d in degs):
        raise PreconditionError("condition (A) violated: constant polynomial in the resultant")
    dk = degs[-1]
    last = coeffs[-1]
    rows = sum(degs[:-1]) + (k - 1) * dk
    cols = sum(degs)
    # column offset of the block holding g_k for row block i
    offsets = []
    off = dk
    for d in degs[:-1]:
        offsets.append(off)
        off += d
    out = [[zero] * cols for _ in range(rows)]
    r0 = 0
    for i in range(k - 1):
        di = degs[i]
        gi = coeffs[i]
        for q in range(dk):
            for s in range(di + 1):
                out[r0 + q + s][q] = gi[di - s]
        c0 = offsets[i]
        for q in range(di):
            for s in range(dk + 1):
                out[r0 + q + s][c0 + q] = last[dk - s]
        r0 += di + dk
    return ResultantMatrix(ExactMatrix(out, rows, cols), degs, rows, cols)


def _dense_coeffs(g: MultiPoly, v: Optional[str]) -> list:
    if v is None:
        return [g.constant_value()]
    return [c.constant_value() for c in g.univariate_view(v)]


def build_T(gs: Sequence[MultiPoly]) -> ResultantMatrix:
    """Scalar resultant matrix of univariate polynomials (all of positive degree)."""
    if len(gs) < 2:
        raise PreconditionError("build_T needs k >= 2; pass (g, g') for a single polynomial")
    v = _univariate_var(gs)
    coeffs = []
    for g in gs:
        if g.is_constant():
            raise PreconditionError("condition (A) violated: constant polynomial in the resultant")
        coeffs.append(_dense_coeffs(g, v))
    return resultant_layout(coeffs, mpq(0))


def _nonzero(gs):
    if not gs:
        raise PreconditionError("empty polynomial list")
    _univariate_var(gs)
    live = [g for g in gs if not g.is_zero()]
    if not live:
        raise PreconditionError("all polynomials are zero")
    return live


def common_zero_count(gs: Sequence[MultiPoly]) -> int:
    """Common roots counted with multiplicity, read off as the nullity of T."""
    live = _nonzero(gs)
    if any(g.is_constant() for g in live):
        return 0
    if len(live) == 1:
        return univariate_degree(live[0])
    return rank_nullity(build_T(live).matrix)[1]


def _derivative(g: MultiPoly) -> MultiPoly:
    v = _univariate_var([g])
    return g.derivative(v) if v is not None else MultiPoly.zero(g.vars)


def distinct_root_count(gs: Sequence[MultiPoly]) -> int:
    """Number of distinct common roots.

    With every degree above 1 this is ``s0 - s1`` for the nullities of the
    resultant of the inputs and of the inputs together with their
    derivatives; a single polynomial goes through ``(g, g')``.  Lower degrees
    fall back to the degree of the squarefree part of the gcd.
    """
    live = _nonzero(gs)
    if any(g.is_constant() for g in live):
        return 0
    if len(live) == 1:
        g = live[0]
        d = univariate_degree(g)
        if d == 1:
            return 1
        return d - rank_nullity(build_T([g, _derivative(g)]).matrix)[1]
    if all(univariate_degree(g) > 1 for g in live):
        s0 = rank_nullity(build_T(live).matrix)[1]
        s1 = rank_nullity(build_T(live + [_derivative(g) for g in live]).matrix)[1]
        return s0 - s1
    return univariate_degree(squarefree_part(gcd_univariate(live)))


# ---------------------------------------------------------------------------
# parametric matrices over a base locus


@dataclass(frozen=True)
class FiberProfile:
    """Nullities of T0/T1 at a point (or generically on a stratum)."""

    s0: int
    s1: Optional[int] = None
    leading_vanishes: tuple = ()
    condition_a0: bool = True
    condition_a1: bool = False

    def __post_init__(self):
        if self.s1 is not None and not self.condition_a1:
            raise PreconditionError("s1 is only defined when condition (A^1) holds")


@dataclass(frozen=True)
class ParametricResultants:
    """T0/T1 for polynomials viewed in a projection variable ``v``."""

    v: str
    base_vars: tuple
    degrees: tuple
    leading: tuple
    condition_a0: bool
    condition_a1: bool
    T0: Optional[ResultantMatrix] = None
    T1: Optional[ResultantMatrix] = None
    extra: dict = field(default_factory=dict, compare=False)


def _coeff_list(f: MultiPoly, v: str) -> list:
    return f.univariate_view(v)


def _deriv_list(c: list) -> list:
    return [c[i] * i for i in range(1, len(c))]


def build_T0_T1(fs: Sequence[MultiPoly], v: str) -> ParametricResultants:
    """Polynomial-entry T0 (and T1 when its degree condition holds).

    k = 1: T0 = T(f, f') needs deg f >= 2, T1 = T(f, f', f'') needs deg f >= 3.
    k > 1: T0 = T(f_1..f_k) needs every deg >= 1, T1 = T(f_1..f_k, f_1'..f_k')
    needs every deg >= 2.
    """
    if not fs:
        raise PreconditionError("no polynomials")
    vars = fs[0].vars
    if v not in vars:
        raise PreconditionError(f"unknown variable {v!r}")
    base = tuple(x for x in vars if x != v)
    zero = MultiPoly.zero(base)
    lists = [_coeff_list(f, v) for f in fs]
    degs = tuple(len(c) - 1 if not (len(c) == 1 and c[0].is_zero()) else -1 for c in lists)
    leading = tuple(c[-1] for c in lists)
    k = len(fs)
    if k == 1:
        d = degs[0]
        a0, a1 = d >= 2, d >= 3
        T0 = T1 = None
        if a0:
            c, dc = lists[0], _deriv_list(lists[0])
            T0 = resultant_layout([c, dc], zero)
            if a1:
                T1 = resultant_layout([c, dc, _deriv_list(dc)], zero)
    else:
        a0 = all(d >= 1 for d in degs)
        a1 = all(d >= 2 for d in degs)
        T0 = resultant_layout(lists, zero) if a0 else None
        T1 = resultant_layout(lists + [_deriv_list(c) for c in lists], zero) if a1 else None
    return ParametricResultants(v, base, degs, leading, a0, a1, T0, T1)


def fiber_count(profile: FiberProfile, deg_f1: int, k: int) -> int:
    """Number of points in a fiber from the nullities at its base point."""
    if any(profile.leading_vanishes):
        raise PreconditionError("fiber_count needs nonvanishing leading coefficients")
    if k == 1:
        if not profile.condition_a0:
            raise PreconditionError("condition (A^0) fails; use the low-degree path")
        return deg_f1 - profile.s0
    if not profile.condition_a1 or profile.s1 is None:
        raise PreconditionError("condition (A^1) fails; use the low-degree path")
    return profile.s0 - profile.s1
