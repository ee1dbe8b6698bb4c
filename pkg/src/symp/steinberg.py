"""Evaluation-certified flattening of conjugated elementary symplectic
letters.

The engine rewrites frame^{-1} * se_ij(arg) * frame (frame a word of
first-row/first-column se letters) into a flat word of first-row/column
se letters.  Internally letters are indexed by their weight-lattice
roots; the correction terms of a single-letter conjugation are read off
the exact matrix commutator by peeling candidate root positions, so no
hard-coded structure-constant table can silently be wrong: every peel
and the final word are verified by exact evaluation and any mismatch
raises ExpansionFailure instead of emitting an unverified word.

Opposite-root pairs (where no commutator formula exists) are kept as
literal conjugations by the remaining frame letters; those frame copies
are first-row/column letters themselves, so flatness survives, at the
price of arguments without the divisor factor.  Letters that leave the
first row/column are restored by the commutator trick
x_theta(c) = [x_{theta_C}(c/(C*Y^h)), x_{theta_R}(Y^h)], which consumes
divisibility budget and places the ideal-tagged argument on the
column-type letter.
"""

from __future__ import annotations

from .errors import ExpansionFailure, IdealViolation, ShapeMismatch
from .generators import GenWord, LetterSE, make_se, sigma
from .matrices import MatR


def weight(i, n):
    """Weight of basis index i (1-based): +e_u for 2u-1, -e_u for 2u."""
    u = (i + 1) // 2 - 1
    s = 1 if i % 2 else -1
    return tuple(s if k == u else 0 for k in range(n))


def se_root(i, j, n):
    wi, wj = weight(i, n), weight(j, n)
    return tuple(a - b for a, b in zip(wi, wj))


def root_neg(r):
    return tuple(-x for x in r)


def root_add(r, s, m=1, k=1):
    return tuple(m * a + k * b for a, b in zip(r, s))


def is_root(r):
    nz = [(u, x) for u, x in enumerate(r) if x]
    if len(nz) == 1:
        return abs(nz[0][1]) == 2
    if len(nz) == 2:
        return abs(nz[0][1]) == 1 and abs(nz[1][1]) == 1
    return False


def root_index(r):
    """Canonical (i, j) with the argument of se_ij at entry (i, j).

    First-row/column representatives are preferred whenever the root
    touches e_1: positive e_1 coefficient gives a row letter se_1j,
    negative gives a column letter se_i1."""
    nz = [(u, x) for u, x in enumerate(r) if x]
    if len(nz) == 1:
        u, x = nz[0]
        i = 2 * u + 1 if x > 0 else 2 * u + 2
        return i, sigma(i)
    (u, su), (v, sv) = nz
    if u == 0:
        if su > 0:
            return 1, (2 * v + 2 if sv > 0 else 2 * v + 1)
        return (2 * v + 1 if sv > 0 else 2 * v + 2), 1
    return (2 * u + 1 if su > 0 else 2 * u + 2,
            2 * v + 2 if sv > 0 else 2 * v + 1)


def letter_root(letter, n):
    return se_root(letter.i, letter.j, n)


def root_letter(r, arg):
    i, j = root_index(r)
    return LetterSE(i, j, arg)


def is_first_line(letter):
    return letter.i == 1 or letter.j == 1


def _mat(letter, ring, size):
    return make_se(ring, size // 2, letter.i, letter.j, letter.a)


def commutator_letters(p, q, ring, size):
    """Flat letters for [P, Q] = P Q P^{-1} Q^{-1}, roots not opposite.

    Candidate roots m*delta + k*gamma, (m,k) in {(1,1),(2,1),(1,2)}, are
    peeled off the exact commutator matrix; the residual must come back
    to the identity."""
    n = size // 2
    delta, gamma = letter_root(p, n), letter_root(q, n)
    if delta == root_neg(gamma):
        raise ExpansionFailure("no commutator formula for opposite roots")
    pm, qm = _mat(p, ring, size), _mat(q, ring, size)
    w = pm * qm * _mat(p.inverse(), ring, size) * _mat(q.inverse(), ring, size)
    out = []
    for m, k in ((1, 1), (2, 1), (1, 2)):
        theta = root_add(delta, gamma, m, k)
        if not is_root(theta):
            continue
        i, j = root_index(theta)
        t = w[i - 1, j - 1]
        if t.is_zero():
            continue
        letter = LetterSE(i, j, t)
        out.append(letter)
        w = _mat(letter.inverse(), ring, size) * w
    if not w.is_identity():
        raise ExpansionFailure("commutator peel left a nontrivial residual")
    return out


def _probe_constant(r1, r2, target, ring, size):
    """Coefficient C with [x_{r1}(1), x_{r2}(1)] = x_target(C) * rest."""
    one = ring.one
    a, b = root_letter(r1, one), root_letter(r2, one)
    w = (_mat(a, ring, size) * _mat(b, ring, size)
         * _mat(a.inverse(), ring, size) * _mat(b.inverse(), ring, size))
    i, j = root_index(target)
    c = w[i - 1, j - 1]
    for cand in (1, -1, 2, -2):
        if c == ring.from_int(cand):
            return cand
    raise ExpansionFailure(f"unexpected structure constant {c}")


def shape_fix(letter, ring, size, y_var, ideal=None):
    """Rewrite a letter off the first row/column as a commutator of
    first-row/column letters, spending divisor budget.

    Needs the argument divisible by y^2; the ideal-constrained side is
    the column-type letter, which inherits the argument's membership."""
    n = size // 2
    theta = letter_root(letter, n)
    arg = letter.a
    if ring.kind != "poly" or y_var not in ring.vars:
        raise ExpansionFailure("shape fix needs a polynomial ring with the divisor variable")
    val = ring.val_in(arg, y_var)
    if val is None:
        return []
    if val < 2:
        raise ExpansionFailure(
            f"argument {arg} has divisor valuation {val} < 2; "
            "raise the dilation exponent")
    nz = [(u, x) for u, x in enumerate(theta) if x]
    if len(nz) == 1:
        (u, x) = nz[0]
        su = sv = 1 if x > 0 else -1
        v = u
    else:
        (u, su), (v, sv) = nz
    theta_c = tuple((su if k == u else 0) - (1 if k == 0 else 0)
                    for k in range(n))
    theta_r = tuple((sv if k == v else 0) + (1 if k == 0 else 0)
                    for k in range(n))
    const = _probe_constant(theta_c, theta_r, theta, ring, size)
    inv_c = {1: ring.one, -1: -ring.one}.get(const)
    if inv_c is None:
        h2 = ring.half()
        if h2 is None:
            raise ExpansionFailure("structure constant 2 needs 2 invertible")
        inv_c = h2 if const == 2 else -h2
    h = max(1, val // 2)
    w_side = ring.divexact_monomial(arg, y_var, h)
    if w_side is None:
        raise ExpansionFailure("divisor division failed")
    w_side = w_side * inv_c
    if ideal is not None and not ideal.contains(w_side):
        raise IdealViolation("shape fix would place a free argument on a"
                             " column letter")
    a = root_letter(theta_c, w_side)
    b = root_letter(theta_r, ring.var(y_var) ** h)
    out = [a, b, a.inverse(), b.inverse()]
    prod = MatR.identity(ring, size)
    for piece in out:
        prod = prod * _mat(piece, ring, size)
    if prod != _mat(letter, ring, size):
        raise ExpansionFailure("shape fix failed verification")
    return out


def steinberg_expand(frame, core, y_var=None, ideal=None, require_val=0):
    """Flatten frame^{-1} * core * frame into first-row/column letters.

    frame: GenWord of first-row/column se letters (the conjugating word);
    core: a first-row/column se letter.  The evaluation identity is
    asserted on every call; when y_var is given, letters off the first
    line are repaired by shape_fix and, with require_val > 0, every
    output argument must reach that divisor valuation.  With an ideal,
    column letters (j = 1) must carry member arguments.
    """
    ring = frame.ring
    size = frame.size
    n = size // 2
    if not isinstance(core, LetterSE) or not is_first_line(core):
        raise ShapeMismatch("core must be a first-row/column se letter")
    for g in frame.letters:
        if not isinstance(g, LetterSE) or not is_first_line(g):
            raise ShapeMismatch("frame letters must be first-row/column"
                                " se letters")
    frames = [g for g in frame.letters if not g.a.is_zero()]
    items = [(core, True)] if not core.a.is_zero() else []
    for t, g in enumerate(frames):
        nxt = []
        g_root = letter_root(g, n)
        for letter, active in items:
            if not active:
                nxt.append((letter, False))
                continue
            if letter.a.is_zero():
                continue
            if letter_root(letter, n) == root_neg(g_root):
                tail = frames[t:]
                for h in reversed(tail):
                    nxt.append((h.inverse(), False))
                nxt.append((letter, False))
                for h in tail:
                    nxt.append((h, False))
            else:
                nxt.append((letter, True))
                for corr in commutator_letters(letter.inverse(), g.inverse(),
                                               ring, size):
                    nxt.append((corr, True))
        items = nxt
    flat = []
    for letter, _ in items:
        if letter.a.is_zero():
            continue
        if is_first_line(letter):
            flat.append(letter)
        else:
            flat.extend(shape_fix(letter, ring, size, y_var, ideal))
    out = GenWord(ring, size, flat, relative=ideal)
    f = frame.evaluate()
    if out.evaluate() != f.inverse() * _mat(core, ring, size) * f:
        raise ExpansionFailure("expansion failed the evaluation certificate")
    if require_val and y_var is not None:
        for letter in flat:
            val = ring.val_in(letter.a, y_var)
            if val is not None and val < require_val:
                raise ExpansionFailure(
                    f"argument {letter.a} misses divisor valuation"
                    f" {require_val}")
    if ideal is not None:
        for letter in flat:
            if letter.j == 1 and not ideal.contains(letter.a):
                raise IdealViolation(
                    f"column letter argument {letter.a} escapes the ideal")
    return out
