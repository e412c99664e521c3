"""Buchberger completion in degree-reverse-lexicographic order and the
ideal-theoretic decisions built on it (membership, radical membership,
emptiness of the variety, generic rank of a polynomial matrix on a variety).

Monomials are encoded as a single integer key ``K = deg * F**n - sum(e_i * F**i)``
with ``F = 2**16``.  The key is linear in the exponent vector, so monomial
multiplication is integer addition, and comparing keys is exactly grevlex
comparison with ``vars[0] > vars[1] > ...``.
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from gmpy2 import mpq

from .errors import GroebnerBudgetExceeded, PreconditionError
from .exactmath import ExactMatrix, MultiPoly, gcd_univariate, matrix_vars, squarefree_part

_BITS = 16
_F = 1 << _BITS
_MAX_EXP = (1 << (_BITS - 1)) - 1

DEFAULT_PAIR_BUDGET = 50_000


class _Codec:
    """Encode/decode exponent tuples for a fixed number of variables."""

    __slots__ = ("n", "top", "guard", "mask")

    def __init__(self, n: int):
        self.n = n
        self.top = _F ** n
        self.guard = sum((1 << (_BITS - 1)) << (_BITS * i) for i in range(n))
        self.mask = _F - 1

    def encode(self, exp) -> int:
        packed = 0
        deg = 0
        for i, e in enumerate(exp):
            if e > _MAX_EXP:
                raise PreconditionError(f"exponent {e} too large for the monomial encoding")
            packed |= e << (_BITS * i)
            deg += e
        return deg * self.top - packed

    def packed(self, key: int) -> int:
        deg = -((-key) // self.top)
        return deg * self.top - key

    def degree(self, key: int) -> int:
        return -((-key) // self.top)

    def decode(self, key: int) -> tuple:
        m = self.packed(key)
        return tuple((m >> (_BITS * i)) & self.mask for i in range(self.n))

    def divides(self, pa: int, pb: int) -> bool:
        """``a | b`` given packed exponent words."""
        return ((pb - pa) & self.guard) == 0

    def lcm(self, ea, eb) -> tuple:
        return tuple(a if a > b else b for a, b in zip(ea, eb))


_codecs: dict = {}


def _codec(n: int) -> _Codec:
    c = _codecs.get(n)
    if c is None:
        c = _codecs[n] = _Codec(n)
    return c


# ---------------------------------------------------------------------------
# internal polynomials: dict key -> mpq


def _to_internal(p: MultiPoly, codec: _Codec) -> dict:
    return {codec.encode(e): c for e, c in p.terms.items()}


def _to_multipoly(d: dict, vars, codec: _Codec) -> MultiPoly:
    return MultiPoly._raw(tuple(vars), {codec.decode(k): c for k, c in d.items()})


def _lead(d: dict) -> int:
    return max(d)


def _monic(d: dict) -> dict:
    lk = max(d)
    inv = 1 / d[lk]
    if inv == 1:
        return d
    return {k: c * inv for k, c in d.items()}


class _Reducer:
    """Reduction data for a list of basis polynomials."""

    def __init__(self, codec: _Codec, polys: Sequence[dict]):
        self.codec = codec
        self.polys = []
        for p in polys:
            lk = max(p)
            self.polys.append((codec.packed(lk), lk, p[lk], p))

    def find(self, key: int):
        pk = self.codec.packed(key)
        div = self.codec.divides
        for pl, lk, lc, p in self.polys:
            if div(pl, pk):
                return lk, lc, p
        return None

    def reduce(self, f: dict, full: bool = True) -> dict:
        """Normal form of ``f``; ``full=False`` stops once the leading term is irreducible."""
        f = dict(f)
        heap = [-k for k in f]
        heapq.heapify(heap)
        rem = {}
        while heap:
            k = -heapq.heappop(heap)
            c = f.get(k)
            if c is None:
                continue
            # keys may be pushed several times; skip stale duplicates
            while heap and heap[0] == -k:
                heapq.heappop(heap)
            hit = self.find(k)
            if hit is None:
                rem[k] = c
                del f[k]
                if not full:
                    rem.update(f)
                    return rem
                continue
            lk, lc, g = hit
            shift = k - lk
            q = c / lc
            for gk, gc in g.items():
                nk = gk + shift
                v = f.get(nk)
                if v is None:
                    f[nk] = -q * gc
                    heapq.heappush(heap, -nk)
                else:
                    v = v - q * gc
                    if v:
                        f[nk] = v
                    else:
                        del f[nk]
        return rem


@dataclass
class _Entry:
    poly: dict
    key: int
    exp: tuple
    packed: int


def _buchberger(gens: list, codec: _Codec, budget: int) -> list:
    """Gröbner basis (not yet reduced) with the Gebauer–Möller pair criteria."""
    entries: list[_Entry] = []
    active: list[int] = []
    pairs: list = []  # heap of (lcm key, i, j)
    counter = 0

    def add(h: dict):
        nonlocal active, pairs
        h = _monic(h)
        lk = max(h)
        e = _Entry(h, lk, codec.decode(lk), codec.packed(lk))
        entries.append(e)
        ih = len(entries) - 1
        lcms = {}
        for g in active:
            lcms[g] = codec.lcm(entries[g].exp, e.exp)
        # criterion M / F on new pairs
        cand = list(active)
        keep = []
        for idx, g in enumerate(cand):
            lg = lcms[g]
            coprime = all(a == 0 or b == 0 for a, b in zip(entries[g].exp, e.exp))
            if coprime:
                keep.append(g)
                continue
            plg = codec.packed(codec.encode(lg))
            dominated = False
            for other in cand[idx + 1:] + keep:
                if other == g:
                    continue
                if codec.divides(codec.packed(codec.encode(lcms[other])), plg):
                    dominated = True
                    break
            if not dominated:
                keep.append(g)
        new_pairs = []
        for g in keep:
            if all(a == 0 or b == 0 for a, b in zip(entries[g].exp, e.exp)):
                continue
            new_pairs.append((codec.encode(lcms[g]), g, ih))
        # criterion B on old pairs
        filtered = []
        for lk_pair, i, j in pairs:
            if codec.divides(e.packed, codec.packed(lk_pair)):
                li = codec.encode(codec.lcm(entries[i].exp, e.exp))
                lj = codec.encode(codec.lcm(entries[j].exp, e.exp))
                if li != lk_pair and lj != lk_pair:
                    continue
            filtered.append((lk_pair, i, j))
        filtered.extend(new_pairs)
        heapq.heapify(filtered)
        pairs = filtered
        active = [g for g in active if not codec.divides(e.packed, entries[g].packed)] + [ih]

    # seed with inter-reduced inputs, lowest leading term first
    for g in sorted(gens, key=max):
        red = _Reducer(codec, [entries[a].poly for a in active]).reduce(g, full=False) if active else g
        if red:
            add(red)
    while pairs:
        # normal selection strategy: smallest lcm
        lk_pair, i, j = heapq.heappop(pairs)
        counter += 1
        if counter > budget:
            raise GroebnerBudgetExceeded(f"Buchberger pair budget {budget} exceeded")
        a, b = entries[i], entries[j]
        sa, sb = lk_pair - a.key, lk_pair - b.key
        s = {}
        for k, c in a.poly.items():
            s[k + sa] = c
        for k, c in b.poly.items():
            nk = k + sb
            v = s.get(nk, 0) - c
            if v:
                s[nk] = v
            else:
                s.pop(nk, None)
        if not s:
            continue
        h = _Reducer(codec, [entries[g].poly for g in active]).reduce(s, full=True)
        if h:
            add(h)
    return [entries[g].poly for g in active]


def _reduce_basis(basis: list, codec: _Codec) -> list:
    basis = [_monic(p) for p in basis if p]
    # drop elements whose leading term is divisible by another's
    basis.sort(key=max)
    minimal = []
    for p in basis:
        pk = codec.packed(max(p))
        if not any(codec.divides(codec.packed(max(q)), pk) for q in minimal):
            minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = _Reducer(codec, others).reduce(p, full=True) if others else p
        out.append(_monic(r))
    out.sort(key=max, reverse=True)
    return out


_gb_cache: dict = {}
_gb_lock = threading.Lock()
_GB_CACHE_LIMIT = 200_000


def _canon_key(vars, polys):
    return (tuple(vars), tuple(sorted(p.sort_key() for p in polys if not p.is_zero())))


def groebner_basis(gens: Sequence[MultiPoly], vars=None, budget: int = DEFAULT_PAIR_BUDGET) -> tuple:
    """Reduced monic Gröbner basis (grevlex) as a tuple of MultiPoly.

    ``(1,)`` means the unit ideal and ``()`` the zero ideal.
    """
    if vars is None:
        if not gens:
            raise PreconditionError("need variables for an empty generator list")
        vars = gens[0].vars
    vars = tuple(vars)
    gens = [g.with_vars(vars) for g in gens]
    key = _canon_key(vars, gens)
    hit = _gb_cache.get(key)
    if hit is not None:
        return hit
    codec = _codec(len(vars))
    internal = [_to_internal(g, codec) for g in gens if not g.is_zero()]
    if any(max(p) == 0 for p in internal):
        result = (MultiPoly.const(1, vars),)
    elif not internal:
        result = ()
    elif len({v for g in gens for v in g.used_vars()}) == 1:
        result = (gcd_univariate(gens).with_vars(vars),)
    else:
        basis = _reduce_basis(_buchberger(internal, codec, budget), codec)
        result = tuple(_to_multipoly(p, vars, codec) for p in basis)
    with _gb_lock:
        if len(_gb_cache) > _GB_CACHE_LIMIT:
            _gb_cache.clear()
        _gb_cache[key] = result
    return result


def normal_form(p: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
    """Remainder of ``p`` on division by a Gröbner basis (unique for a reduced basis)."""
    if not basis or p.is_zero():
        return p
    vars = basis[0].vars
    p = p.with_vars(vars)
    codec = _codec(len(vars))
    red = _Reducer(codec, [_to_internal(g, codec) for g in basis])
    return _to_multipoly(red.reduce(_to_internal(p, codec)), vars, codec)


class IdealBasis:
    """Generators of an ideal in a fixed variable tuple, with a lazily cached reduced basis."""

    __slots__ = ("vars", "gens", "budget", "_gb", "_reducer")

    def __init__(self, vars: Sequence[str], gens: Sequence[MultiPoly] = (), budget: int = DEFAULT_PAIR_BUDGET):
        self.vars = tuple(vars)
        gens = [g.with_vars(self.vars) for g in gens]
        self.gens = tuple(gens) if gens else (MultiPoly.zero(self.vars),)
        self.budget = budget
        self._gb = None
        self._reducer = None

    def __repr__(self):
        return f"IdealBasis({self.vars}, [{', '.join(str(g) for g in self.gens)}])"

    def basis(self) -> tuple:
        if self._gb is None:
            self._gb = groebner_basis(self.gens, self.vars, self.budget)
        return self._gb

    def is_unit(self) -> bool:
        gb = self.basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero_ideal(self) -> bool:
        return not self.basis()

    def normal_form(self, p: MultiPoly) -> MultiPoly:
        gb = self.basis()
        if not gb or p.is_zero():
            return p.with_vars(self.vars)
        if self._reducer is None:
            codec = _codec(len(self.vars))
            self._reducer = (_Reducer(codec, [_to_internal(g, codec) for g in gb]), codec)
        red, codec = self._reducer
        return _to_multipoly(red.reduce(_to_internal(p.with_vars(self.vars), codec)), self.vars, codec)

    def contains(self, p: MultiPoly) -> bool:
        return self.normal_form(p).is_zero()

    def plus(self, extra: Sequence[MultiPoly]) -> "IdealBasis":
        return IdealBasis(self.vars, list(self.basis()) + [e.with_vars(self.vars) for e in extra], self.budget)

    def canonical_key(self):
        return (self.vars, tuple(g.sort_key() for g in self.basis()))


def _as_basis(b, vars=None) -> IdealBasis:
    if isinstance(b, IdealBasis):
        return b
    b = list(b)
    if vars is None:
        vars = b[0].vars
    return IdealBasis(vars, b)


def reduce_basis(b: IdealBasis) -> IdealBasis:
    """A new IdealBasis whose generators are the reduced Gröbner basis of ``b``."""
    b = _as_basis(b)
    gb = b.basis()
    out = IdealBasis(b.vars, gb, b.budget)
    out._gb = gb
    return out


def ideal_membership(p: MultiPoly, b: IdealBasis) -> bool:
    return _as_basis(b).contains(p)


def is_empty_variety(b: IdealBasis) -> bool:
    """Weak Nullstellensatz: V(b) is empty iff 1 is in the ideal."""
    return _as_basis(b).is_unit()


_AUX = "_t"


def vanishes_on_variety(p: MultiPoly, b: IdealBasis) -> bool:
    """Radical membership: ``p`` vanishes on V(b) iff ``1 ∈ b + (1 - t*p)``."""
    b = _as_basis(b)
    p = p.with_vars(b.vars)
    if p.is_zero():
        return True
    nf = b.normal_form(p)
    if nf.is_zero():
        return True
    if b.is_unit():
        return True
    if nf.is_constant():
        return False
    gb = b.basis()
    used = {v for g in gb for v in g.used_vars()}
    if len(used) == 1:
        return _vanishes_univariate(nf, gb[0], used.pop())
    aux = _AUX
    while aux in b.vars:
        aux += "_"
    ext = b.vars + (aux,)
    t = MultiPoly.var(aux, ext)
    gens = [g.with_vars(ext) for g in b.basis()] + [1 - t * nf.with_vars(ext)]
    gb = groebner_basis(gens, ext, b.budget)
    return len(gb) == 1 and gb[0].is_constant()


def _vanishes_univariate(p: MultiPoly, a: MultiPoly, z: str) -> bool:
    """V(a) is (roots of a(z)) x (free coordinates): test each coefficient against sqfree(a)."""
    s = squarefree_part(a.with_vars((z,)))
    others = tuple(v for v in p.vars if v != z)
    iz = p.vars.index(z)
    buckets: dict = {}
    for e, c in p.terms.items():
        rest = e[:iz] + e[iz + 1:]
        buckets.setdefault(rest, {})[(e[iz],)] = c
    for terms in buckets.values():
        coeff = MultiPoly._raw((z,), terms)
        if not _dense_rem_zero(coeff, s):
            return False
    return True


def _dense_rem_zero(f: MultiPoly, s: MultiPoly) -> bool:
    g = gcd_univariate([f, s])
    return g == s


def generic_rank(m: ExactMatrix, b: IdealBasis) -> int:
    """Largest t such that some t x t minor of ``m`` does not vanish identically on V(b)."""
    b = _as_basis(b)
    if b.is_unit():
        return 0
    vars = b.vars

    def entry(x):
        if isinstance(x, MultiPoly):
            return b.normal_form(x.with_vars(vars))
        return MultiPoly.const(x, vars)

    rows = [[entry(x) for x in row] for row in m.entries]
    from .exactmath import _poly_det

    best = 0
    for t in range(1, min(m.rows, m.cols) + 1):
        found = False
        for rs in combinations(range(m.rows), t):
            for cs in combinations(range(m.cols), t):
                d = _poly_det([[rows[i][j] for j in cs] for i in rs], vars)
                if not d.is_zero() and not vanishes_on_variety(d, b):
                    found = True
                    break
            if found:
                break
        if not found:
            break
        best = t
    return best
