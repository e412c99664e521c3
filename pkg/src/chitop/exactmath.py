"""Exact rationals, sparse multivariate polynomials and fraction-free linear algebra.

Everything here is immutable once built.  Coefficients are ``gmpy2.mpq``
values, which are always stored in lowest terms with a positive denominator.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

import flint
from flint.utils.flint_exceptions import DomainError
import gmpy2
from gmpy2 import mpq, mpz

from .errors import PreconditionError

Rat = type(mpq(0))
Scalar = Union[int, Fraction, "Rat"]

#: returned by :func:`weighted_degree` for the zero polynomial
MINUS_INFINITY = float("-inf")
# products with more term pairs than this go through FLINT
_FLINT_MUL_CUTOFF = 64


def rat(value) -> Rat:
    """Coerce ints, Fractions, mpq values and strings like ``"3/4"`` to ``mpq``."""
    if isinstance(value, Rat):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


class MultiPoly:
    """Sparse polynomial over Q in a fixed ordered tuple of variables.

    ``terms`` maps exponent tuples to nonzero coefficients.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Sequence[int], Scalar] | None = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != n or any(x < 0 for x in exp):
                raise PreconditionError(f"bad exponent vector {exp} for variables {self.vars}")
            c = rat(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms):
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls, vars):
        return cls._raw(tuple(vars), {})

    @classmethod
    def const(cls, c, vars):
        vars = tuple(vars)
        c = rat(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, name, vars):
        vars = tuple(vars)
        if name not in vars:
            raise PreconditionError(f"unknown variable {name!r}")
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls._raw(vars, {exp: mpq(1)})

    @classmethod
    def from_univariate(cls, coeffs: Sequence, v: str, vars: Sequence[str]):
        """Rebuild ``sum coeffs[i] * v**i``; coefficients are scalars or polys without ``v``."""
        vars = tuple(vars)
        i_v = vars.index(v)
        out = {}
        for power, c in enumerate(coeffs):
            if isinstance(c, MultiPoly):
                c = c.with_vars(vars)
                for exp, a in c.terms.items():
                    if exp[i_v]:
                        raise PreconditionError("coefficient depends on the main variable")
                    e = list(exp)
                    e[i_v] = power
                    out[tuple(e)] = a
            else:
                c = rat(c)
                if c:
                    e = [0] * len(vars)
                    e[i_v] = power
                    out[tuple(e)] = c
        return cls._raw(vars, out)

    # -- predicates and accessors -------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Rat:
        if not self.is_constant():
            raise PreconditionError(f"{self} is not constant")
        return next(iter(self.terms.values()), mpq(0))

    def constant_term(self) -> Rat:
        return self.terms.get((0,) * len(self.vars), mpq(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, v: str) -> int:
        """Degree in ``v``; -1 for the zero polynomial."""
        i = self._index(v)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def used_vars(self) -> tuple:
        used = [False] * len(self.vars)
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def _index(self, v):
        try:
            return self.vars.index(v)
        except ValueError:
            raise PreconditionError(f"unknown variable {v!r}") from None

    def __len__(self):
        return len(self.terms)

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise PreconditionError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction, Rat)) or type(other).__name__ == "mpz":
            return MultiPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction, Rat)):
                c = rat(other)
                if not c:
                    return MultiPoly._raw(self.vars, {})
                return MultiPoly._raw(self.vars, {e: a * c for e, a in self.terms.items()})
            return NotImplemented
        other = self._coerce(other)
        if len(self.terms) * len(other.terms) > _FLINT_MUL_CUTOFF:
            ctx = flint_context(self.vars)
            return from_flint(to_flint(self, ctx) * to_flint(other, ctx), self.vars)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return MultiPoly._raw(self.vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return exact_quotient(self, other)
        c = rat(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if k < 0:
            raise PreconditionError("negative power")
        result = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction, Rat)):
            return self == MultiPoly.const(other, self.vars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def scale(self, c) -> "MultiPoly":
        return self * rat(c)

    def monic(self) -> "MultiPoly":
        """Divide by the leading coefficient in the printed (graded lex) order."""
        if not self.terms:
            return self
        lead = max(self.terms, key=lambda e: (sum(e), e))
        return self * (1 / self.terms[lead])

    # -- calculus and structure -----------------------------------------
    def derivative(self, v: str) -> "MultiPoly":
        i = self._index(v)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return MultiPoly._raw(self.vars, out)

    def univariate_view(self, v: str) -> list:
        """Coefficients of ``self`` as a polynomial in ``v`` (index = power of ``v``).

        Each coefficient lives in the remaining variables.  The list is ``[0]``
        for the zero polynomial and otherwise has a nonzero last entry.
        """
        i = self._index(v)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        if not buckets:
            return [MultiPoly._raw(rest, {})]
        top = max(buckets)
        return [MultiPoly._raw(rest, buckets.get(p, {})) for p in range(top + 1)]

    def leading_coeff(self, v: str) -> "MultiPoly":
        return self.univariate_view(v)[-1]

    def drop_leading(self, v: str) -> "MultiPoly":
        """Delete the top ``v``-degree part."""
        i = self._index(v)
        d = self.degree(v)
        return MultiPoly._raw(self.vars, {e: c for e, c in self.terms.items() if e[i] != d})

    def with_vars(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-express in another variable tuple (reorder, embed, or drop unused)."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        for v in self.used_vars():
            if v not in pos:
                raise PreconditionError(f"variable {v!r} is used but missing from {vars}")
        idx = [(pos[v], j) for j, v in enumerate(self.vars) if v in pos]
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(vars)
            for i, j in idx:
                new[i] = e[j]
            out[tuple(new)] = c
        return MultiPoly._raw(vars, out)

    def substitute(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute scalars or polynomials (in ``self.vars``) for variables."""
        items = [(self._index(v), val) for v, val in values.items()]
        scalar_only = all(not isinstance(val, MultiPoly) for _, val in items)
        if scalar_only:
            vals = [(i, rat(val)) for i, val in items]
            out = {}
            for e, c in self.terms.items():
                e = list(e)
                for i, val in vals:
                    if e[i]:
                        c = c * val ** e[i]
                        e[i] = 0
                if c:
                    e = tuple(e)
                    s = out.get(e)
                    out[e] = c if s is None else s + c
            return MultiPoly._raw(self.vars, {e: c for e, c in out.items() if c})
        result = MultiPoly.zero(self.vars)
        subs = {i: (val if isinstance(val, MultiPoly) else MultiPoly.const(val, self.vars)) for i, val in items}
        for e, c in self.terms.items():
            e = list(e)
            factor = MultiPoly.const(c, self.vars)
            for i, val in subs.items():
                if e[i]:
                    factor = factor * val.with_vars(self.vars) ** e[i]
                    e[i] = 0
            factor = factor * MultiPoly._raw(self.vars, {tuple(e): mpq(1)})
            result = result + factor
        return result

    def evaluate(self, point: Mapping[str, object]) -> Rat:
        p = self.substitute(point)
        return p.constant_value()

    def content_normalized(self) -> "MultiPoly":
        """Scale to integer coefficients with gcd 1 and positive leading term."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = gmpy2.lcm(den, c.denominator)
        g = 0
        for c in self.terms.values():
            g = gmpy2.gcd(g, c.numerator * (den // c.denominator))
        lead = max(self.terms, key=lambda e: (sum(e), e))
        sign = -1 if self.terms[lead] < 0 else 1
        return self * mpq(sign * den, g)

    def sort_key(self):
        return tuple(sorted(((e, (c.numerator, c.denominator)) for e, c in self.terms.items()), reverse=True))

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.vars, e) if x
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly_ring(names: str | Sequence[str]):
    """Convenience: ``x, y = poly_ring("x y")`` returns generator polynomials."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    vars = tuple(names)
    gens = tuple(MultiPoly.var(v, vars) for v in vars)
    return gens if len(gens) > 1 else gens[0]


def exact_quotient(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """``f / g`` when ``g`` divides ``f``; raises otherwise."""
    if g.is_zero():
        raise PreconditionError("division by zero polynomial")
    if g.is_constant():
        return f * (1 / g.constant_value())
    if len(f.terms) * len(g.terms) > _FLINT_MUL_CUTOFF:
        ctx = flint_context(f.vars)
        try:
            return from_flint(to_flint(f, ctx) / to_flint(g.with_vars(f.vars), ctx), f.vars)
        except DomainError:
            raise PreconditionError("inexact polynomial division") from None
    vars = f.vars
    order = lambda e: (sum(e), e)
    glead = max(g.terms, key=order)
    ginv = 1 / g.terms[glead]
    gterms = [(e, c) for e, c in g.terms.items()]
    rem = dict(f.terms)
    heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
    heapq.heapify(heap)
    quot = {}
    while heap:
        negd, nege = heapq.heappop(heap)
        e = tuple(-x for x in nege)
        c = rem.get(e)
        if c is None:
            continue
        shift = tuple(a - b for a, b in zip(e, glead))
        if any(s < 0 for s in shift):
            raise PreconditionError("inexact polynomial division")
        q = c * ginv
        quot[shift] = q
        for ge, gc in gterms:
            ne = tuple(a + b for a, b in zip(ge, shift))
            v = rem.get(ne)
            if v is None:
                rem[ne] = -q * gc
                heapq.heappush(heap, (-sum(ne), tuple(-x for x in ne)))
            else:
                v = v - q * gc
                if v:
                    rem[ne] = v
                else:
                    del rem[ne]
    if rem:
        raise PreconditionError("inexact polynomial division")
    return MultiPoly._raw(vars, quot)


def weighted_degree(f: MultiPoly, w: Sequence[int]):
    """Return ``(degree, homogeneous)`` for the weight vector ``w``.

    The zero polynomial has degree :data:`MINUS_INFINITY` and counts as homogeneous.
    """
    if len(w) != len(f.vars):
        raise PreconditionError(f"need {len(f.vars)} weights, got {len(w)}")
    if f.is_zero():
        return MINUS_INFINITY, True
    degs = {sum(a * b for a, b in zip(e, w)) for e in f.terms}
    return max(degs), len(degs) == 1


# ---------------------------------------------------------------------------
# univariate helpers (dense coefficient lists, lowest power first)

def _univariate_var(polys: Sequence[MultiPoly]) -> str | None:
    vars = polys[0].vars
    used = set()
    for p in polys:
        if p.vars != vars:
            raise PreconditionError("univariate inputs must share a variable tuple")
        used.update(p.used_vars())
    if len(used) > 1:
        raise PreconditionError(f"expected univariate polynomials, found variables {sorted(used)}")
    if used:
        return used.pop()
    return vars[0] if vars else None


def _dense(p: MultiPoly, v: str | None) -> list:
    if v is None:
        return [p.constant_value()] if not p.is_zero() else []
    i = p.vars.index(v)
    if p.is_zero():
        return []
    out = [mpq(0)] * (p.degree(v) + 1)
    for e, c in p.terms.items():
        out[e[i]] = c
    return out


def _from_dense(coeffs: Sequence, v: str | None, vars) -> MultiPoly:
    if v is None:
        return MultiPoly.const(coeffs[0] if coeffs else 0, vars)
    return MultiPoly.from_univariate(coeffs, v, vars)


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _dense_rem(a: list, b: list) -> list:
    a = list(a)
    db = len(b) - 1
    inv = 1 / b[-1]
    while len(a) - 1 >= db and a:
        q = a[-1] * inv
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        _trim(a)
    return a


def _to_flint(a: list) -> flint.fmpq_poly:
    return flint.fmpq_poly([flint.fmpq(int(c.numerator), int(c.denominator)) for c in a])


def _from_flint(p: flint.fmpq_poly) -> list:
    return [mpq(int(c.p), int(c.q)) for c in p.coeffs()]


def flint_context(vars) -> flint.fmpq_mpoly_ctx:
    return flint.fmpq_mpoly_ctx.get(tuple(vars) or ("_",), "degrevlex")


def to_flint(p: MultiPoly, ctx: flint.fmpq_mpoly_ctx) -> flint.fmpq_mpoly:
    """The same polynomial as a FLINT multivariate (fast products and exact division)."""
    pad = () if p.vars else (0,)
    return ctx.from_dict({e + pad: flint.fmpq(int(c.numerator), int(c.denominator))
                          for e, c in p.terms.items()})


def from_flint(fp: flint.fmpq_mpoly, vars) -> MultiPoly:
    n = len(vars)
    return MultiPoly._raw(tuple(vars), {tuple(e[:n]): mpq(int(c.p), int(c.q))
                                        for e, c in fp.to_dict().items()})


def _dense_gcd(a: list, b: list) -> list:
    """Monic gcd of dense rational coefficient lists (lowest power first)."""
    a, b = _trim([mpq(c) for c in a]), _trim([mpq(c) for c in b])
    if not a or not b:
        g = a or b
        if not g:
            return []
        return [c / g[-1] for c in g]
    return _from_flint(_to_flint(a).gcd(_to_flint(b)))


def _dense_div(a: list, b: list) -> list:
    """Exact quotient a/b (caller guarantees divisibility)."""
    a = list(a)
    db = len(b) - 1
    q = [mpq(0)] * (len(a) - db)
    inv = 1 / b[-1]
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] * inv
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
    if any(a[:db]):
        raise PreconditionError("inexact univariate division")
    return q


def _dense_derivative(a: list) -> list:
    return [a[i] * i for i in range(1, len(a))]


def formal_derivative(f: MultiPoly, v: str) -> MultiPoly:
    return f.derivative(v)


def univariate_view(f: MultiPoly, v: str) -> list:
    return f.univariate_view(v)


def gcd_univariate(gs: Sequence[MultiPoly]) -> MultiPoly:
    """Monic gcd of univariate polynomials."""
    if not gs:
        raise PreconditionError("gcd of an empty list")
    v = _univariate_var(gs)
    g: list = []
    for p in gs:
        g = _dense_gcd(g, _dense(p, v))
    if not g:
        raise PreconditionError("gcd of all-zero polynomials is undefined")
    return _from_dense(g, v, gs[0].vars)


def squarefree_part(g: MultiPoly) -> MultiPoly:
    """Monic product of the distinct irreducible factors: g / gcd(g, g')."""
    if g.is_zero():
        raise PreconditionError("squarefree part of zero")
    v = _univariate_var([g])
    a = _dense(g, v)
    d = _dense_gcd(a, _dense_derivative(a))
    if not d:
        d = [mpq(1)]
    q = _dense_div(a, d)
    lead = q[-1]
    return _from_dense([c / lead for c in q], v, g.vars)


def univariate_degree(g: MultiPoly) -> int:
    return len(_dense(g, _univariate_var([g]))) - 1


# ---------------------------------------------------------------------------
# matrices

class ExactMatrix:
    """Dense rows x cols matrix of rationals or of :class:`MultiPoly` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], rows: int | None = None, cols: int | None = None):
        data = tuple(tuple(r) for r in entries)
        self.rows = len(data) if rows is None else rows
        if cols is None:
            cols = len(data[0]) if data else 0
        self.cols = cols
        if len(data) != self.rows or any(len(r) != self.cols for r in data):
            raise PreconditionError("ragged matrix entries")
        self.entries = data

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.entries == other.entries and \
            (self.rows, self.cols) == (other.rows, other.cols)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"

    @property
    def shape(self):
        return self.rows, self.cols

    def is_polynomial(self) -> bool:
        return any(isinstance(x, MultiPoly) for row in self.entries for x in row)

    def tolist(self):
        return [list(r) for r in self.entries]

    def map(self, fn) -> "ExactMatrix":
        return ExactMatrix([[fn(x) for x in row] for row in self.entries], self.rows, self.cols)

    def evaluate(self, point: Mapping[str, object]) -> "ExactMatrix":
        """Specialize polynomial entries at a rational point."""
        return self.map(lambda x: x.evaluate(point) if isinstance(x, MultiPoly) else rat(x))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.entries[i][j] for j in cols] for i in rows], len(rows), len(cols))


def _integer_rows(m: ExactMatrix) -> list:
    out = []
    for row in m.entries:
        row = [rat(x) for x in row]
        den = 1
        for x in row:
            den = gmpy2.lcm(den, x.denominator)
        out.append([mpz(x.numerator * (den // x.denominator)) for x in row])
    return out


def rank_nullity(m: ExactMatrix):
    """Exact ``(rank, nullity)`` of a rational matrix by Bareiss elimination.

    Rows are first cleared of denominators (a nonzero row scaling), then the
    fraction-free recurrence keeps every intermediate an integer minor.
    """
    if m.is_polynomial():
        raise PreconditionError("rank_nullity needs scalar entries; use generic_rank for polynomials")
    a = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    prev = mpz(1)
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * prow[j]) // prev
            row[c] = mpz(0)
        prev = p
        r += 1
        if r == nrows:
            break
    return r, ncols - r


def _poly_det(rows: list, vars) -> MultiPoly:
    """Determinant by expansion over column subsets (dynamic programming)."""
    t = len(rows)
    one = MultiPoly.const(1, vars)
    # level[mask] = sum over assignments of the first k rows to columns in mask
    level = {0: one}
    for i in range(t):
        nxt = {}
        row = rows[i]
        for mask, val in level.items():
            for j in range(t):
                if mask >> j & 1:
                    continue
                entry = row[j]
                if entry.is_zero():
                    continue
                # sign: number of used columns greater than j
                sign = -1 if bin(mask >> (j + 1)).count("1") % 2 else 1
                term = val * entry
                if sign < 0:
                    term = -term
                key = mask | (1 << j)
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        level = nxt
    return level.get((1 << t) - 1, MultiPoly.zero(vars))


def _as_poly(x, vars):
    return x if isinstance(x, MultiPoly) else MultiPoly.const(x, vars)


def matrix_vars(m: ExactMatrix):
    for row in m.entries:
        for x in row:
            if isinstance(x, MultiPoly):
                return x.vars
    return ()


def determinant(m: ExactMatrix, vars=None) -> MultiPoly:
    if m.rows != m.cols:
        raise PreconditionError("determinant of a non-square matrix")
    vars = tuple(vars) if vars is not None else matrix_vars(m)
    rows = [[_as_poly(x, vars) for x in row] for row in m.entries]
    return _poly_det(rows, vars)


def minors_ideal(m: ExactMatrix, t: int, vars=None) -> list:
    """All t x t minors; row subsets outermost, column subsets innermost, both lexicographic."""
    if t <= 0:
        raise PreconditionError("minor size must be positive")
    if t > min(m.rows, m.cols):
        raise PreconditionError(f"no {t}x{t} minors in a {m.rows}x{m.cols} matrix")
    vars = tuple(vars) if vars is not None else matrix_vars(m)
    rows = [[_as_poly(x, vars) for x in row] for row in m.entries]
    out = []
    for rs in combinations(range(m.rows), t):
        for cs in combinations(range(m.cols), t):
            out.append(_poly_det([[rows[i][j] for j in cs] for i in rs], vars))
    return out


def iter_nonzero_minors(m: ExactMatrix, t: int, vars=None) -> Iterable[MultiPoly]:
    """Lazily yield the nonzero t x t minors in the same order as :func:`minors_ideal`."""
    vars = tuple(vars) if vars is not None else matrix_vars(m)
    rows = [[_as_poly(x, vars) for x in row] for row in m.entries]
    for rs in combinations(range(m.rows), t):
        for cs in combinations(range(m.cols), t):
            d = _poly_det([[rows[i][j] for j in cs] for i in rs], vars)
            if not d.is_zero():
                yield d
