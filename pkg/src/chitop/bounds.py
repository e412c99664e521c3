"""Integer bounds on |chi| of affine and weighted projective loci, and the constants built on them.

``bound_N(n, d, k)`` bounds |chi| of any locus in A^n cut out by k polynomials
of degree at most d; ``bound_M`` does the same for weighted-homogeneous loci in
an n-dimensional weighted projective space.  Both follow the projection
recursion (fiber counting over a stratified base) and are then capped by the
Milnor bound on the total Betti number of a real algebraic set, which keeps the
values finite-size while staying valid.  The remaining constants bound the
change of chi under divisorial contractions and flips in terms of the depth.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import wraps
from math import comb

from .catalog import catalog_rows, catalog_weight_bound
from .errors import PreconditionError, ResourceBudgetExceeded

# intermediate values above this are saturated; every final value is capped
# by an explicit bound far below it
SATURATION_BITS = 4096
_CAP = 1 << SATURATION_BITS
MEMO_BUDGET = 200_000

_lock = threading.RLock()
_memo: dict = {}

FAMILIES = {
    "N": 3, "M": 3, "L": 5, "A": 3, "B": 3, "D": 1, "Dprime": 1,
    "Phi": 1, "Psi": 2, "PhiBar": 1, "Theta": 3,
}


@dataclass(frozen=True)
class BoundKey:
    family: str
    parameters: tuple

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown bound family {self.family!r}")
        if len(self.parameters) != FAMILIES[self.family]:
            raise PreconditionError(
                f"{self.family} takes {FAMILIES[self.family]} parameters, got {len(self.parameters)}")

    def value(self) -> int:
        return _DISPATCH[self.family](*self.parameters)


def _memoized(fn):
    name = fn.__name__

    @wraps(fn)
    def wrapper(*args):
        key = (name, args)
        with _lock:
            if key in _memo:
                return _memo[key]
        value = fn(*args)
        with _lock:
            if len(_memo) >= MEMO_BUDGET:
                raise ResourceBudgetExceeded(f"bound memo table exceeded {MEMO_BUDGET} entries")
            _memo[key] = value
        return value

    return wrapper


def clear_memo():
    with _lock:
        _memo.clear()


def _sat(x: int) -> int:
    return x if x < _CAP else _CAP


def _spow(base: int, exp: int) -> int:
    if base <= 1 or exp == 0:
        return base ** exp if base >= 0 else 0
    if exp * (base.bit_length() - 1) >= SATURATION_BITS:
        return _CAP
    return _sat(base ** exp)


def _smul(*xs: int) -> int:
    out = 1
    for x in xs:
        if x == 0:
            return 0
        if out >= _CAP or x >= _CAP or out.bit_length() + x.bit_length() > SATURATION_BITS + 1:
            out = _CAP
        else:
            out = _sat(out * x)
    return out


def _sadd(*xs: int) -> int:
    return _sat(sum(xs))


def _scomb(a: int, b: int) -> int:
    # C(a, b) <= 2^a
    if a >= SATURATION_BITS:
        return _CAP
    return comb(a, b)


def _check(**params):
    for name, v in params.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise PreconditionError(f"{name} must be an integer, got {v!r}")


def milnor_bound(n: int, d: int) -> int:
    """Total Betti number bound d(2d-1)^(2n-1) for a complex locus in A^n of degree <= d.

    The locus is a real algebraic set in R^(2n) cut out by real and imaginary
    parts of degree <= d.
    """
    if n == 0:
        return 1
    d = max(d, 1)
    return d * (2 * d - 1) ** (2 * n - 1)


def milnor_bound_projective(n: int, d: int) -> int:
    """Sum of the affine bounds over the coordinate strata of an n-dimensional weighted space."""
    return sum(milnor_bound(j, d) for j in range(n + 1))


# ---------------------------------------------------------------------------
# the projection recursion


def _gens_cap(m: int, l: int) -> int:
    # m + 1 generic linear combinations of the generators cut out the same set in A^m
    return min(l, m + 1)


@_memoized
def bound_L(n: int, d: int, k: int, e: int, l: int) -> int:
    """Bound on |chi| of the points over V(J) ⊂ A^(n-1) where k polynomials of degree <= d vanish.

    J has l generators of degree <= e.  One pass of the fiber decomposition is
    bounded term by term (rank-drop loci, leading-coefficient loci, the generic
    stratum with at most d points per fiber) at the largest parameters any
    stage of the induction can reach, then summed over the degree-sum
    induction with its (2^k - 1)-fold branching.
    """
    _check(n=n, d=d, k=k, e=e, l=l)
    if n < 1 or d < 1 or k < 1 or e < 0 or l < 0:
        raise PreconditionError("bound_L needs n, d, k >= 1 and e, l >= 0")
    if n == 1:
        return d
    m = n - 1
    kk = _gens_cap(n, k)
    c0 = max(d * kk, 2 * d - 1)
    r0 = max(2 * (kk - 1) * d, 2 * d - 1)
    c1, r1 = 2 * c0, 2 * r0
    # the rank induction runs at most (d + 1)^2 rounds, each adding minors of degree <= d * r1
    rounds = (d + 1) ** 2
    e_max = _sadd(e, _smul(d, r0), _spow(d, kk), _smul(rounds, d, r1))
    l_max = _sadd(l, _scomb(r0 + c0, c0), 1, _smul(rounds, r1, c1))

    def N(deg, gens):
        return bound_N(m, max(1, deg), max(1, _gens_cap(m, gens)))

    nz = N(max(e, 1), max(l, 1))
    nr = N(e_max, l_max)
    nw = N(e_max, l_max)
    nq = N(e_max, l_max)
    branch = (1 << kk) - 1
    plus = _sadd(nr, _smul(branch, nw))
    node = _sadd(_smul(d, _sadd(nz, nr)), _smul(d, rounds, _sadd(plus, nq, nq)), _smul(2, nz))
    # degree-sum induction: each level branches into at most 2^k - 1 truncated systems
    sigma = d * kk
    if branch == 1:
        total = _smul(node, sigma + 1)
    else:
        total = _smul(node, _sat((_spow(branch, sigma + 1) - 1) // (branch - 1)) if _spow(branch, sigma + 1) < _CAP else _CAP)
    return max(bound_N(m, max(d, e, 1), max(1, _gens_cap(m, k + l))), min(total, milnor_bound(n, max(d, e, 1))))


@_memoized
def bound_N(n: int, d: int, k: int) -> int:
    """|chi(V(f_1..f_k))| <= bound_N(n, d, k) for deg f_i <= d in A^n."""
    _check(n=n, d=d, k=k)
    if n < 0 or d < 1 or k < 1:
        raise PreconditionError("bound_N needs n >= 0 and d, k >= 1")
    if n == 0:
        return 1
    if n == 1:
        return d
    rec = bound_L(n, d, _gens_cap(n, k), 0, 1)
    return max(bound_N(n - 1, d, k), min(rec, milnor_bound(n, d)))


@_memoized
def bound_A(n: int, d: int, k: int) -> int:
    """Bound for the ramification locus upstairs: fewer than 2^n coordinate strata, each with <= n extra equations."""
    _check(n=n, d=d, k=k)
    comps = (1 << n) - 1
    return _smul((1 << comps) - 1, bound_N(n, d, k + n))


@_memoized
def bound_B(n: int, d: int, k: int) -> int:
    """Bound for the image of the ramification locus, each stratum a smaller weighted quotient."""
    _check(n=n, d=d, k=k)
    comps = (1 << n) - 1
    big = 2 * max(bound_M(r, d, k) for r in range(n))
    return _smul((1 << comps) - 1, big)


@_memoized
def bound_M(n: int, d: int, k: int) -> int:
    """|chi| bound for k weighted-homogeneous equations of degree <= d in P(a_0..a_n), any weights."""
    _check(n=n, d=d, k=k)
    if n < 0 or d < 1 or k < 1:
        raise PreconditionError("bound_M needs n >= 0 and d, k >= 1")
    if n == 0:
        return 1
    if n == 1:
        return d
    rec = _sadd(bound_M(n - 1, d, k), bound_N(n, d, k), bound_A(n, d, k), bound_B(n, d, k))
    return max(bound_M(n - 1, d, k), min(rec, milnor_bound_projective(n, d)))


# ---------------------------------------------------------------------------
# constants along the minimal model program


def _row_term(row, dep: int) -> int:
    d = max(1, catalog_weight_bound(row, dep))
    return bound_M(row.ambient, d, row.codim) + 1


@_memoized
def bound_D(dep: int) -> int:
    """|chi(Y) - chi(X)| for a w-morphism Y -> X, over every classified weight bound at this depth."""
    _check(dep=dep)
    if dep < 0:
        raise PreconditionError("depth must be nonnegative")
    return max(_row_term(row, dep) for row in catalog_rows("w_morphism"))


@_memoized
def bound_Dprime(dep: int) -> int:
    """|chi(Y) - chi(X)| for any divisorial contraction to a point, in terms of dep(Y)."""
    _check(dep=dep)
    if dep < 0:
        raise PreconditionError("depth must be nonnegative")
    terms = []
    for row in catalog_rows("divisorial_to_point"):
        if row.delegate == "w_morphism":
            terms.append(bound_D(dep + 1))
        else:
            terms.append(_row_term(row, dep))
    return max(terms)


@_memoized
def bound_Phi(dep: int) -> int:
    """b3 can grow by at most this much in one step (divisorial or flip) from a state of depth dep."""
    _check(dep=dep)
    if dep < -1:
        raise PreconditionError("depth must be >= -1")
    if dep == -1:
        return 0
    dp = bound_Dprime(dep)
    if dep == 0:
        # Gorenstein: no flips, and contractions to curves blow up lci curves
        return dp + 2
    prev = bound_Phi(dep - 1)
    psi = bound_Psi(dep, dep)
    return max(dp + 2, prev + psi, dp + prev + psi)


@_memoized
def bound_Psi(step: int, dep: int) -> int:
    _check(step=step, dep=dep)
    if step < 0 or dep < 0:
        raise PreconditionError("step and depth must be nonnegative")
    if step == 0:
        return bound_D(dep)
    return bound_Phi(dep - 1) + bound_Psi(step - 1, dep)


def bound_PhiBar(rho: int) -> int:
    """b3(X_i) <= b3(X_0) + bound_PhiBar(rho(X_0)) along any run."""
    _check(rho=rho)
    if rho < 0:
        raise PreconditionError("Picard number must be nonnegative")
    return 2 * rho * bound_Phi(rho)


def bound_Theta(i: int, rho: int, n_steps: int) -> int:
    """Growth of b_i from X to a resolution reached by ``n_steps`` contractions to points.

    For i in {2, 4} the answer is the relative Picard number, which equals
    ``n_steps`` for such a resolution.
    """
    _check(i=i, rho=rho, n_steps=n_steps)
    if not 0 <= i <= 6:
        raise PreconditionError("Betti index must be in 0..6")
    if rho < 0 or n_steps < 0:
        raise PreconditionError("rho and n_steps must be nonnegative")
    if i in (0, 1, 5, 6):
        return 0
    if i in (2, 4):
        return n_steps
    return n_steps * (bound_Dprime(rho) + 2)


_DISPATCH = {
    "N": bound_N, "M": bound_M, "L": bound_L, "A": bound_A, "B": bound_B,
    "D": bound_D, "Dprime": bound_Dprime, "Phi": bound_Phi, "Psi": bound_Psi,
    "PhiBar": bound_PhiBar, "Theta": bound_Theta,
}


def bound_value(family: str, *params: int) -> int:
    return BoundKey(family, tuple(params)).value()
