"""Exact dense matrices over the ring menu.

Determinants are fraction-free (Bareiss) over rings with exact division
(Z, localizations of Z, polynomials over those) and cofactor expansion
with memoized minors elsewhere (Z/m and friends, where pivots may be
zero divisors).  Inverses go through the adjugate and exist exactly when
the determinant is a unit.
"""

from __future__ import annotations

from .errors import MixedRings, NotInvertible, ShapeMismatch, UnsupportedRing
from .rings import IdealSpec, ModularRing, RElem, embed


def _has_exact_division(ring):
    k = ring
    while k.kind in ("poly", "localized"):
        k = k.base
    if k.kind != "integers":
        return False
    return ring.kind != "modular"


class MatR:
    """Immutable m x n matrix with RElem entries sharing one ring."""

    __slots__ = ("ring", "rows", "m", "n")

    def __init__(self, ring, rows):
        rows = tuple(tuple(r) for r in rows)
        for r in rows:
            for x in r:
                if not isinstance(x, RElem) or x.ring != ring:
                    raise MixedRings("entry outside the owner ring")
            if len(r) != len(rows[0]):
                raise ShapeMismatch("ragged rows")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "m", len(rows))
        object.__setattr__(self, "n", len(rows[0]) if rows else 0)

    def __setattr__(self, *a):
        raise AttributeError("MatR is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_ints(cls, ring, rows):
        return cls(ring, [[ring.from_int(v) for v in r] for r in rows])

    @classmethod
    def from_strs(cls, ring, rows):
        return cls(ring, [[ring.parse(v) for v in r] for r in rows])

    @classmethod
    def identity(cls, ring, n):
        one, zero = ring.one, ring.zero
        return cls(ring, [[one if i == j else zero for j in range(n)]
                          for i in range(n)])

    @classmethod
    def zeros(cls, ring, m, n):
        zero = ring.zero
        return cls(ring, [[zero] * n for _ in range(m)])

    @classmethod
    def column(cls, entries):
        entries = list(entries)
        return cls(entries[0].ring, [[x] for x in entries])

    # -- basics ----------------------------------------------------------

    @property
    def shape(self):
        return (self.m, self.n)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, MatR) and self.ring == other.ring
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ring.key(), self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"[{body}]"

    def is_identity(self):
        return self == MatR.identity(self.ring, self.m) if self.m == self.n else False

    def is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)

    # -- algebra ----------------------------------------------------------

    def _same(self, other, need_shape=None):
        if not isinstance(other, MatR):
            raise ShapeMismatch(f"not a matrix: {other!r}")
        if other.ring != self.ring:
            raise MixedRings(f"{self.ring} vs {other.ring}")
        if need_shape == "add" and self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        if need_shape == "mul" and self.n != other.m:
            raise ShapeMismatch(f"{self.shape} * {other.shape}")
        return other

    def __add__(self, other):
        other = self._same(other, "add")
        return MatR(self.ring, [[a + b for a, b in zip(r1, r2)]
                                for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        other = self._same(other, "add")
        return MatR(self.ring, [[a - b for a, b in zip(r1, r2)]
                                for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return MatR(self.ring, [[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, RElem):
            return self.scale(other)
        other = self._same(other, "mul")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = self.ring.zero
                for a, b in zip(r, c):
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return MatR(self.ring, out)

    def scale(self, c):
        if isinstance(c, int):
            c = self.ring.from_int(c)
        return MatR(self.ring, [[c * a for a in r] for r in self.rows])

    def transpose(self):
        return MatR(self.ring, list(zip(*self.rows)))

    def perp(self, other):
        """Block diagonal; the (m+n)-square matrix diag(self, other)."""
        other = self._same(other)
        if self.m != self.n or other.m != other.n:
            raise ShapeMismatch("perp needs square blocks")
        z = self.ring.zero
        top = [list(r) + [z] * other.n for r in self.rows]
        bot = [[z] * self.n + list(r) for r in other.rows]
        return MatR(self.ring, top + bot)

    def submatrix(self, rows, cols):
        return MatR(self.ring, [[self.rows[i][j] for j in cols] for i in rows])

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def map_entries(self, fn, target=None):
        target = target or self.ring
        return MatR(target, [[fn(x) for x in r] for r in self.rows])

    # -- determinants and inverses ----------------------------------------

    def det(self):
        if self.m != self.n:
            raise ShapeMismatch("determinant of a non-square matrix")
        if self.m == 0:
            return self.ring.one
        if _has_exact_division(self.ring):
            return self._det_bareiss()
        return self._det_cofactor()

    def _det_bareiss(self):
        ring = self.ring
        n = self.m
        a = [list(r) for r in self.rows]
        sign = 1
        prev = ring.one
        for k in range(n - 1):
            if a[k][k].is_zero():
                for i in range(k + 1, n):
                    if not a[i][k].is_zero():
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return ring.zero
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                    q = ring.divexact(num.payload, prev.payload)
                    if q is None:
                        raise UnsupportedRing("exact division failed in Bareiss")
                    a[i][j] = ring.el(q)
                a[i][k] = ring.zero
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return -d if sign < 0 else d

    def _det_cofactor(self):
        ring = self.ring
        rows = self.rows
        memo = {}

        def minor(cols):
            if cols in memo:
                return memo[cols]
            r = self.m - len(cols)
            if not cols:
                out = ring.one
            else:
                out = ring.zero
                sign = 1
                for pos, j in enumerate(cols):
                    x = rows[r][j]
                    if not x.is_zero():
                        rest = cols[:pos] + cols[pos + 1:]
                        term = x * minor(rest)
                        out = out + (term if sign > 0 else -term)
                    sign = -sign
            memo[cols] = out
            return out

        return minor(tuple(range(self.m)))

    def adjugate(self):
        if self.m != self.n:
            raise ShapeMismatch("adjugate of a non-square matrix")
        n = self.m
        if n == 1:
            return MatR.identity(self.ring, 1)
        out = []
        idx = range(n)
        for i in idx:
            row = []
            for j in idx:
                sub = self.submatrix([r for r in idx if r != j],
                                     [c for c in idx if c != i])
                c = sub.det()
                row.append(c if (i + j) % 2 == 0 else -c)
            out.append(row)
        return MatR(self.ring, out)

    def det_and_inverse(self):
        """(det, inverse) with inverse None when det is not a unit."""
        d = self.det()
        d_inv = d.inverse_or_none()
        if d_inv is None:
            return d, None
        inv = self.adjugate().scale(d_inv)
        if not (self * inv).is_identity():
            raise NotInvertible("adjugate inverse failed verification")
        return d, inv

    def inverse(self):
        d, inv = self.det_and_inverse()
        if inv is None:
            raise NotInvertible(f"determinant {d} is not a unit in {self.ring}")
        return inv


# -- entrywise specialization --------------------------------------------


def specialize_eval(mat, images):
    """Entrywise polynomial evaluation / variable substitution."""
    ring = mat.ring
    if ring.kind != "poly":
        raise UnsupportedRing("evaluation needs a polynomial matrix")
    full = {v: images.get(v) for v in ring.vars}
    missing = [v for v, im in full.items() if im is None]
    if missing:
        raise UnsupportedRing(f"no image for {missing}")
    target = next(iter(full.values())).ring
    return mat.map_entries(lambda x: ring.evaluate(x, full), target)


def quotient_ring(ideal):
    own = ideal.owner
    if own.kind == "integers":
        g = 0
        for gen in ideal.generators:
            import math
            g = math.gcd(g, gen.payload)
        if g == 0:
            return own, lambda x: x
        if g == 1:
            raise UnsupportedRing("quotient by the unit ideal is the zero ring")
        q = ModularRing(g)
        return q, lambda x: q.from_int(x.payload)
    if own.kind == "modular":
        import math
        g = own.m
        for gen in ideal.generators:
            g = math.gcd(g, gen.payload)
        if g == 1:
            raise UnsupportedRing("quotient by the unit ideal is the zero ring")
        q = ModularRing(g)
        return q, lambda x: q.from_int(x.payload)
    raise UnsupportedRing(f"no quotient construction for {own}")


def specialize_reduce(mat, ideal):
    """Entrywise reduction modulo an ideal of Z or Z/m (optionally under
    a polynomial ring, reducing coefficients)."""
    own = mat.ring
    if own.kind == "poly":
        base_q, base_map = quotient_ring(
            IdealSpec(own.base, [own.base.el(g.payload[0][1]) if g.payload
                                 else own.base.zero
                                 for g in ideal.generators]))
        from .rings import PolynomialRing
        q = PolynomialRing(base_q, own.vars)
        return mat.map_entries(
            lambda x: q.el([(e, base_map(own.base.el(c)).payload)
                            for e, c in x.payload]), q)
    q, fn = quotient_ring(ideal)
    return mat.map_entries(fn, q)


def specialize_localize(mat, target):
    """Entrywise canonical image in a localization (or a polynomial ring
    over a localization of the coefficient ring)."""
    return mat.map_entries(lambda x: _localize_entry(x, target), target)


def _localize_entry(x, target):
    if target.kind == "localized":
        return target.localize(x)
    if target.kind == "poly" and x.ring.kind == "poly":
        return x.ring.evaluate(x, {v: target.var(v) for v in target.vars},
                               coeff_hom=lambda c: embed(c, target.base))
    if target.kind == "poly":
        return embed(x, target)
    raise UnsupportedRing(f"cannot localize into {target}")


def specialize(mat, how, **kw):
    if how == "eval":
        return specialize_eval(mat, kw["images"])
    if how == "reduce":
        return specialize_reduce(mat, kw["ideal"])
    if how == "localize":
        return specialize_localize(mat, kw["target"])
    raise UnsupportedRing(f"unknown specialization {how!r}")
