"""Alternating matrices, Pfaffians, and standard-form decomposition.

The Pfaffian uses first-row recursive expansion with the sign convention
Pf(psi_n) = +1, where psi_n is the block-diagonal standard form with
2x2 blocks [[0,1],[-1,0]].  Over local-like rings an invertible
alternating matrix A of Pfaffian 1 reduces to A = eps^t psi_n eps by
symplectic Gram-Schmidt; det(eps) = 1 is the elementarity certificate
(SL = E over the local-like rings supported here).
"""

from __future__ import annotations

import hashlib
import json

from .errors import (NoUnitPivot, NotAlternating, NotInvertible, OddSize,
                     PfaffianNotOne, ShapeMismatch)
from .matrices import MatR


def psi(ring, n):
    """The standard 2n x 2n alternating matrix of Pfaffian 1."""
    one, zero = ring.one, ring.zero
    rows = [[zero] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[2 * i][2 * i + 1] = one
        rows[2 * i + 1][2 * i] = -one
    return MatR(ring, rows)


def pfaffian_of(mat):
    """Pfaffian of an alternating matrix by first-row expansion."""
    if mat.m != mat.n:
        raise ShapeMismatch("Pfaffian of a non-square matrix")
    if mat.m % 2:
        raise OddSize(f"Pfaffian needs even size, got {mat.m}")
    ring = mat.ring
    memo = {}

    def pf(idx):
        if not idx:
            return ring.one
        if idx in memo:
            return memo[idx]
        i0 = idx[0]
        out = ring.zero
        sign = 1
        for pos in range(1, len(idx)):
            j = idx[pos]
            x = mat[i0, j]
            if not x.is_zero():
                rest = tuple(k for k in idx if k != i0 and k != j)
                term = x * pf(rest)
                out = out + (term if sign > 0 else -term)
            sign = -sign
        memo[idx] = out
        return out

    return pf(tuple(range(mat.m)))


class AltForm:
    """An alternating matrix with its cached Pfaffian and an optional
    decomposition certificate (a generator word whose frame conjugates
    psi_n onto the matrix)."""

    __slots__ = ("mat", "n", "pf", "cert", "cert_kind", "_hash")

    def __init__(self, mat, pf, cert=None, cert_kind=None):
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "n", mat.m // 2)
        object.__setattr__(self, "pf", pf)
        object.__setattr__(self, "cert", cert)
        object.__setattr__(self, "cert_kind", cert_kind)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("AltForm is immutable")

    @property
    def ring(self):
        return self.mat.ring

    @property
    def size(self):
        return self.mat.m

    def content_hash(self):
        h = self._hash
        if h is None:
            blob = json.dumps(
                {"ring": self.ring.descriptor(),
                 "rows": [[str(x) for x in r] for r in self.mat.rows]},
                sort_keys=True)
            h = hashlib.sha256(blob.encode()).hexdigest()[:16]
            object.__setattr__(self, "_hash", h)
        return h

    def __eq__(self, other):
        return isinstance(other, AltForm) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"AltForm({self.mat!r}, pf={self.pf})"

    def frame_matrix(self):
        """The 2n x 2n matrix F with F^t psi_n F = mat, from the
        certificate; None when no certificate is attached."""
        if self.cert is None:
            return None
        f = self.cert.evaluate()
        if self.cert_kind == "bordered":
            f = MatR.identity(self.ring, 1).perp(f)
        return f

    def inverse_mat(self):
        return self.mat.inverse()


def check_alternating(mat, cert=None, cert_kind=None):
    """Validate mat^t = -mat with zero diagonal and cache the Pfaffian."""
    if mat.m != mat.n:
        raise ShapeMismatch("alternating matrices are square")
    if mat.m % 2:
        raise OddSize(f"alternating forms here have even size, got {mat.m}")
    for i in range(mat.m):
        if not mat[i, i].is_zero():
            raise NotAlternating(f"nonzero diagonal entry at ({i},{i})")
        for j in range(i + 1, mat.n):
            if mat[i, j] != -mat[j, i]:
                raise NotAlternating(f"symmetry violation at ({i},{j})")
    form = AltForm(mat, pfaffian_of(mat), cert=cert, cert_kind=cert_kind)
    if cert is not None:
        f = form.frame_matrix()
        if f.transpose() * psi(mat.ring, mat.m // 2) * f != mat:
            raise NotAlternating("certificate does not reproduce the matrix")
    return form


def standard_psi(ring, n):
    form = check_alternating(psi(ring, n))
    if not form.pf.is_one():
        raise PfaffianNotOne("psi_n must have Pfaffian 1")
    return form


def standard_form_local(form, require_pf_one=True):
    """eps with eps^t psi_n eps = form.mat over a local-like ring.

    Symplectic Gram-Schmidt: repeatedly pick a basis pair whose pairing
    is a unit and clear the complement.  Raises NoUnitPivot when no unit
    pairing exists (the ring is not local-like for this input).
    """
    mat = form.mat
    ring = mat.ring
    n2 = mat.m
    if require_pf_one and not form.pf.is_one():
        raise PfaffianNotOne(f"Pfaffian is {form.pf}")
    if form.pf.inverse_or_none() is None:
        raise NotInvertible("the form must be invertible (unit Pfaffian)")

    def pair(u, v):
        acc = ring.zero
        for i in range(n2):
            if u[i].is_zero():
                continue
            for j in range(n2):
                acc = acc + u[i] * mat[i, j] * v[j]
        return acc

    basis = [tuple(ring.one if k == i else ring.zero for k in range(n2))
             for i in range(n2)]
    columns = []
    work = basis
    while work:
        found = None
        for ui in range(len(work)):
            for wi in range(len(work)):
                if wi == ui:
                    continue
                inv = pair(work[ui], work[wi]).inverse_or_none()
                if inv is not None:
                    found = (ui, wi, inv)
                    break
            if found:
                break
        if not found:
            raise NoUnitPivot("no unit pairing among remaining basis vectors")
        ui, wi, inv = found
        u = work[ui]
        v = tuple(inv * x for x in work[wi])
        rest = [w for k, w in enumerate(work) if k not in (ui, wi)]
        fixed = []
        for w in rest:
            cu, cv = pair(u, w), pair(v, w)
            fixed.append(tuple(w[i] - cu * v[i] + cv * u[i] for i in range(n2)))
        columns.extend([u, v])
        work = fixed
    m = MatR(ring, [[columns[j][i] for j in range(n2)] for i in range(n2)])
    eps = m.inverse()
    if eps.transpose() * psi(ring, n2 // 2) * eps != mat:
        raise NoUnitPivot("reduction produced an invalid frame")
    return eps
