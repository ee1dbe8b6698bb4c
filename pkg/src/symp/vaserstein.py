"""Bordered column/row generators built from the blocks of an invertible
alternating matrix and its inverse.

Writing phi = [[0, -c^t], [c, nu]] and phi^{-1} = [[0, d^t], [-d, mu]],
the generators are

    alpha(v) = I + d v^t nu        beta(v) = I + mu v c^t
    C_phi(v) = [[1, 0], [v, alpha]]   R_phi(v) = [[1, v^t], [0, beta]]

Every constructed C/R is checked against Sp_phi membership on the spot;
a failure is an internal bug, not an input error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alternating import AltForm, check_alternating, psi
from .errors import (DecompositionMismatch, FormMismatch, MembershipViolation,
                     MixedRings, NotInvertible, ShapeMismatch)
from .generators import (GenWord, LetterC, LetterR, LetterSE,
                         check_sp_membership, sigma)
from .matrices import MatR


@dataclass(frozen=True)
class VasersteinData:
    phi: AltForm
    c: MatR
    d: MatR
    nu: MatR
    mu: MatR

    @property
    def ring(self):
        return self.phi.ring

    @property
    def n2(self):
        return self.phi.size


def vaserstein_data(form):
    """Read the (c, d, nu, mu) blocks off phi and its exact inverse."""
    mat = form.mat
    if form.pf.inverse_or_none() is None:
        raise NotInvertible(f"Pfaffian {form.pf} is not a unit")
    inv = mat.inverse()
    n2 = mat.m
    idx = list(range(1, n2))
    c = MatR.column([mat[i, 0] for i in idx])
    nu = mat.submatrix(idx, idx)
    d = MatR.column([inv[0, j] for j in idx]).map_entries(lambda x: x)
    # phi^{-1} = [[0, d^t], [-d, mu]]: read d off the first row
    mu = inv.submatrix(idx, idx)
    data = VasersteinData(form, c, d, nu, mu)
    _check_blocks(data, mat, inv)
    return data


def _check_blocks(data, mat, inv):
    ring = mat.ring
    n2 = mat.m
    zero = ring.zero
    for i in range(1, n2):
        if mat[0, i] != -data.c[i - 1, 0] or mat[i, 0] != data.c[i - 1, 0]:
            raise DecompositionMismatch("c block does not reassemble phi")
        if inv[0, i] != data.d[i - 1, 0] or inv[i, 0] != -data.d[i - 1, 0]:
            raise DecompositionMismatch("d block does not reassemble phi^{-1}")
    if not mat[0, 0] == zero == inv[0, 0]:
        raise DecompositionMismatch("corner entries must vanish")
    if not (mat * inv).is_identity():
        raise DecompositionMismatch("phi * phi^{-1} != I")


def _as_column(ring, v, length):
    if isinstance(v, MatR):
        if v.shape != (length, 1):
            raise ShapeMismatch(f"need a {length}-vector")
        return v
    v = [ring.from_int(x) if isinstance(x, int) else x for x in v]
    if len(v) != length:
        raise ShapeMismatch(f"need a {length}-vector, got {len(v)}")
    for x in v:
        if x.ring != ring:
            raise MixedRings("vector entry outside the form ring")
    return MatR.column(v)


def make_alpha_beta(data, v):
    """(alpha, beta) for the vector v; both have determinant 1, which is
    asserted (necessary for their elementarity)."""
    ring = data.ring
    k = data.n2 - 1
    v = _as_column(ring, v, k)
    ident = MatR.identity(ring, k)
    alpha = ident + data.d * v.transpose() * data.nu
    beta = ident + data.mu * v * data.c.transpose()
    if not alpha.det().is_one() or not beta.det().is_one():
        raise MembershipViolation("alpha/beta determinant is not 1 (bug)")
    return alpha, beta


def make_CR(data, v):
    """(C_phi(v), R_phi(v)); Sp_phi membership enforced on every call."""
    ring = data.ring
    k = data.n2 - 1
    v = _as_column(ring, v, k)
    alpha, beta = make_alpha_beta(data, v)
    zero, one = ring.zero, ring.one
    c_rows = [[one] + [zero] * k]
    for i in range(k):
        c_rows.append([v[i, 0]] + list(alpha.rows[i]))
    r_rows = [[one] + [v[i, 0] for i in range(k)]]
    for i in range(k):
        r_rows.append([zero] + list(beta.rows[i]))
    cm, rm = MatR(ring, c_rows), MatR(ring, r_rows)
    for mat in (cm, rm):
        if not check_sp_membership(mat, data.phi).in_sp:
            raise MembershipViolation("C/R failed Sp membership (bug)")
    return cm, rm


def transport(eps, letter, target_form):
    """Transport a C/R letter across phi = (1 perp eps)^t phi* (1 perp eps):

        (1 perp eps)^{-1} C_{phi*}(v) (1 perp eps) = C_phi(eps^{-1} v)
        (1 perp eps)^{-1} R_{phi*}(v) (1 perp eps) = R_phi(eps^t v)

    The matrix identity is verified exactly on every call."""
    src = letter.form
    ring = src.ring
    frame = MatR.identity(ring, 1).perp(eps)
    if frame.transpose() * src.mat * frame != target_form.mat:
        raise FormMismatch("target form is not (1 perp eps)^t phi* (1 perp eps)")
    v = _as_column(ring, list(letter.v), src.size - 1)
    if isinstance(letter, LetterC):
        w = eps.inverse() * v
        out = LetterC(target_form, tuple(w.col(0)))
    elif isinstance(letter, LetterR):
        w = eps.transpose() * v
        out = LetterR(target_form, tuple(w.col(0)))
    else:
        raise ShapeMismatch(f"cannot transport {letter!r}")
    lhs = frame.inverse() * letter.matrix(ring, src.size) * frame
    if lhs != out.matrix(ring, src.size):
        raise FormMismatch("transport identity failed verification")
    return out


def decompose_CR_psi(form, v, kind):
    """Write C_{psi_n}(v) (kind='C') or R_{psi_n}(v) (kind='R') as a word
    of se letters with first-column / first-row indices.

    The product over i >= 3 of se_{i1}(v_{i-1}) reproduces everything but
    the long-root coordinate, which picks up quadratic cross terms; the
    residual long argument is read off and verified, so the word is exact
    by construction."""
    ring = form.ring
    n = form.n
    if form.mat != psi(ring, n):
        raise FormMismatch("decomposition is specific to the standard form")
    v = _as_column(ring, v, 2 * n - 1)
    data = vaserstein_data(form)
    cm, rm = make_CR(data, v)
    target = cm if kind == "C" else rm
    letters = []
    for i in range(3, 2 * n + 1):
        a = v[i - 2, 0]
        if not a.is_zero():
            letters.append(LetterSE(i, 1, a) if kind == "C"
                           else LetterSE(1, i, a))
    partial = GenWord(ring, 2 * n, letters).evaluate()
    resid = target * partial.inverse()
    t = resid[1, 0] if kind == "C" else resid[0, 1]
    if not t.is_zero():
        letters.insert(0, LetterSE(2, 1, t) if kind == "C"
                       else LetterSE(1, 2, t))
    out = GenWord(ring, 2 * n, letters)
    if out.evaluate() != target:
        raise DecompositionMismatch(
            "se-word does not reproduce the generator")
    return out


def se_to_CR_letter(form, letter):
    """The inverse direction: a single se_{i1}/se_{1j} letter as a one-
    coordinate column/row generator over psi_n (exact, verified)."""
    ring = form.ring
    n = form.n
    i, j, a = letter.i, letter.j, letter.a
    if j == 1:
        out = LetterC(form, tuple(a if k == i - 2 else ring.zero
                                  for k in range(2 * n - 1)))
    elif i == 1:
        out = LetterR(form, tuple(a if k == j - 2 else ring.zero
                                  for k in range(2 * n - 1)))
    else:
        raise ShapeMismatch("need a first-row or first-column letter")
    if out.matrix(ring, 2 * n) != letter.matrix(ring, 2 * n):
        raise DecompositionMismatch("se -> C/R conversion failed (bug)")
    return out
