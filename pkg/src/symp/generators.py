"""Generator words for symplectic groups: elementary matrices E_ij(a),
elementary symplectic matrices se_ij(a), bordered column/row generators,
torus letters, formal inverses and conjugation frames.

Words are immutable sequences of tagged letters over one ring with a
fixed matrix size; evaluation is the left-to-right product.  A word may
carry a relative tag (an ideal): core arguments of its letters must then
lie in the ideal, which is checked structurally, never inferred.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .alternating import AltForm, check_alternating, psi
from .errors import (DiagonalIndex, IdealViolation, MixedRings,
                     NoCertificate, NonPolynomialArgument, ShapeMismatch)
from .matrices import MatR
from .rings import IdealSpec, RElem


@dataclass(frozen=True)
class Sigma:
    """The pairing involution on indices 1..2n: 2i-1 <-> 2i."""

    n: int

    def __call__(self, i):
        if not 1 <= i <= 2 * self.n:
            raise ShapeMismatch(f"index {i} out of range 1..{2 * self.n}")
        return i + 1 if i % 2 else i - 1


def sigma(i):
    """sigma(2i-1) = 2i, sigma(2i) = 2i-1 (1-based, size-free)."""
    return i + 1 if i % 2 else i - 1


def make_E(ring, size, i, j, a):
    """E_ij(a) = I + a*e_ij of the given size, 1-based indices."""
    if i == j:
        raise DiagonalIndex(f"E_{i}{j} needs i != j")
    if not (1 <= i <= size and 1 <= j <= size):
        raise ShapeMismatch(f"indices ({i},{j}) out of range for size {size}")
    if isinstance(a, int):
        a = ring.from_int(a)
    rows = [list(r) for r in MatR.identity(ring, size).rows]
    rows[i - 1][j - 1] = rows[i - 1][j - 1] + a
    return MatR(ring, rows)


def make_se(ring, n, i, j, a):
    """Elementary symplectic se_ij(a) in Sp_{2n} with respect to psi_n.

    se_ij(a) = I + a*e_ij when i = sigma(j), and
    I + a*e_ij - (-1)^(i+j)*a*e_{sigma(j),sigma(i)} otherwise.
    """
    if i == j:
        raise DiagonalIndex(f"se_{i}{j} needs i != j")
    size = 2 * n
    if not (1 <= i <= size and 1 <= j <= size):
        raise ShapeMismatch(f"indices ({i},{j}) out of range for n={n}")
    if isinstance(a, int):
        a = ring.from_int(a)
    rows = [list(r) for r in MatR.identity(ring, size).rows]
    rows[i - 1][j - 1] = rows[i - 1][j - 1] + a
    if i != sigma(j):
        s = -a if (i + j) % 2 == 0 else a
        si, sj = sigma(j), sigma(i)
        rows[si - 1][sj - 1] = rows[si - 1][sj - 1] + s
    return MatR(ring, rows)


# -- letters ---------------------------------------------------------------


@dataclass(frozen=True)
class LetterE:
    """E_ij(a) acting on the word's full size."""

    i: int
    j: int
    a: RElem

    def matrix(self, ring, size):
        return make_E(ring, size, self.i, self.j, self.a)

    def inverse(self):
        return LetterE(self.i, self.j, -self.a)

    def core_args(self):
        return (self.a,)


@dataclass(frozen=True)
class LetterSE:
    """se_ij(a); the word size must be even, 2n."""

    i: int
    j: int
    a: RElem

    def matrix(self, ring, size):
        return make_se(ring, size // 2, self.i, self.j, self.a)

    def inverse(self):
        return LetterSE(self.i, self.j, -self.a)

    def core_args(self):
        return (self.a,)


@dataclass(frozen=True)
class LetterC:
    """Column generator C_phi(v), v of length 2n-1."""

    form: AltForm
    v: tuple

    def matrix(self, ring, size):
        from .vaserstein import make_CR, vaserstein_data
        c, _ = make_CR(vaserstein_data(self.form), list(self.v))
        return c

    def inverse(self):
        return LetterInv(self)

    def core_args(self):
        return self.v


@dataclass(frozen=True)
class LetterR:
    """Row generator R_phi(v)."""

    form: AltForm
    v: tuple

    def matrix(self, ring, size):
        from .vaserstein import make_CR, vaserstein_data
        _, r = make_CR(vaserstein_data(self.form), list(self.v))
        return r

    def inverse(self):
        return LetterInv(self)

    def core_args(self):
        return self.v


@dataclass(frozen=True)
class LetterTorus:
    """diag(.., u, u^{-1}, ..) placed on the symplectic pair `pair`."""

    pair: int
    u: RElem

    def matrix(self, ring, size):
        u_inv = self.u.inverse_or_none()
        if u_inv is None:
            raise IdealViolation(f"torus argument {self.u} is not a unit")
        rows = [list(r) for r in MatR.identity(ring, size).rows]
        i = 2 * (self.pair - 1)
        rows[i][i] = self.u
        rows[i + 1][i + 1] = u_inv
        return MatR(ring, rows)

    def inverse(self):
        u_inv = self.u.inverse_or_none()
        if u_inv is None:
            raise IdealViolation(f"torus argument {self.u} is not a unit")
        return LetterTorus(self.pair, u_inv)

    def core_args(self):
        return (self.u - self.u.ring.one,)


@dataclass(frozen=True)
class LetterInv:
    """Formal inverse of a letter without a cheap closed form."""

    inner: object

    def matrix(self, ring, size):
        return self.inner.matrix(ring, size).inverse()

    def inverse(self):
        return self.inner

    def core_args(self):
        return self.inner.core_args()


@dataclass(frozen=True)
class LetterConj:
    """Conjugate(frame, core) evaluating to frame^{-1} * core * frame."""

    frame: "GenWord"
    core: "GenWord"

    def matrix(self, ring, size):
        f = self.frame.evaluate()
        return f.inverse() * self.core.evaluate() * f

    def inverse(self):
        return LetterConj(self.frame, self.core.inverse_word())

    def core_args(self):
        out = []
        for letter in self.core.letters:
            out.extend(letter.core_args())
        return tuple(out)


class GenWord:
    """An immutable word of letters over one ring with a fixed size."""

    __slots__ = ("ring", "size", "letters", "relative", "_value")

    def __init__(self, ring, size, letters=(), relative=None):
        letters = tuple(letters)
        for letter in letters:
            for a in letter.core_args():
                if isinstance(a, RElem) and a.ring != ring:
                    raise MixedRings("letter argument outside the word ring")
        if relative is not None and relative.owner != ring:
            raise MixedRings("relative tag over a different ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "relative", relative)
        object.__setattr__(self, "_value", None)

    def __setattr__(self, *a):
        raise AttributeError("GenWord is immutable")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return (isinstance(other, GenWord) and self.ring == other.ring
                and self.size == other.size and self.letters == other.letters)

    def __hash__(self):
        return hash((self.ring.key(), self.size, self.letters))

    def __repr__(self):
        return f"GenWord({len(self.letters)} letters, size {self.size}, {self.ring})"

    def with_letters(self, letters):
        return GenWord(self.ring, self.size, letters, self.relative)

    def __mul__(self, other):
        if other.ring != self.ring or other.size != self.size:
            raise ShapeMismatch("concatenating incompatible words")
        tag = self.relative if self.relative == other.relative else None
        return GenWord(self.ring, self.size, self.letters + other.letters, tag)

    def evaluate(self):
        out = self._value
        if out is None:
            out = MatR.identity(self.ring, self.size)
            for letter in self.letters:
                out = out * letter.matrix(self.ring, self.size)
            object.__setattr__(self, "_value", out)
        return out

    def inverse_word(self):
        return GenWord(self.ring, self.size,
                       [letter.inverse() for letter in reversed(self.letters)],
                       self.relative)

    def check_relative_tags(self):
        """True iff every core argument lies in the relative ideal.

        Frames of conjugation letters are exempt, matching the normal
        closure shape of relative groups."""
        if self.relative is None:
            return True
        return _letters_relative(self.letters, self.relative)


def _letters_relative(letters, ideal):
    for letter in letters:
        if isinstance(letter, LetterConj):
            if not _letters_relative(letter.core.letters, ideal):
                return False
        elif isinstance(letter, LetterInv):
            if not _letters_relative([letter.inner], ideal):
                return False
        else:
            for a in letter.core_args():
                if not ideal.contains(a):
                    return False
    return True


def word(ring, size, letters, relative=None):
    return GenWord(ring, size, letters, relative)


# -- membership and congruence checks --------------------------------------


@dataclass(frozen=True)
class SpCheckReport:
    in_sp: bool
    witness: tuple | None
    mod_I_identity: bool | None = None


def check_sp_membership(alpha, form):
    """Exact test of alpha^t * phi * alpha = phi."""
    phi = form.mat if isinstance(form, AltForm) else form
    if alpha.m != alpha.n or alpha.m != phi.m:
        raise ShapeMismatch(f"{alpha.shape} vs form size {phi.m}")
    lhs = alpha.transpose() * phi * alpha
    for i in range(phi.m):
        for j in range(phi.n):
            if lhs[i, j] != phi[i, j]:
                return SpCheckReport(False, (i, j))
    return SpCheckReport(True, None)


def check_relative(alpha, ideal):
    """True iff alpha is congruent to the identity entrywise modulo I."""
    if alpha.m != alpha.n:
        raise ShapeMismatch("congruence test needs a square matrix")
    one, zero = alpha.ring.one, alpha.ring.zero
    for i in range(alpha.m):
        for j in range(alpha.n):
            delta = one if i == j else zero
            if not ideal.contains(alpha[i, j] - delta):
                return False
    return True


# -- word-level operations --------------------------------------------------


def split_constant(w, var=None):
    """Rewrite each se_ij(f) as se_ij(f(0)) * se_ij(X*g(X)) with
    f = f(0) + X*g(X); evaluation is unchanged (verified)."""
    ring = w.ring
    if ring.kind != "poly":
        raise NonPolynomialArgument(f"word ring {ring} is not polynomial")
    var = var or ring.vars[-1]
    vi = ring.vars.index(var)
    out = []
    for letter in w.letters:
        if not isinstance(letter, LetterSE):
            raise NonPolynomialArgument(f"unsupported letter {letter!r}")
        f = letter.a
        const = ring.el([(e, c) for e, c in f.payload if e[vi] == 0])
        rest = f - const
        pieces = []
        if not const.is_zero():
            pieces.append(LetterSE(letter.i, letter.j, const))
        if not rest.is_zero():
            pieces.append(LetterSE(letter.i, letter.j, rest))
        if not pieces:
            pieces = [LetterSE(letter.i, letter.j, ring.zero)]
        out.extend(pieces)
    new = w.with_letters(out)
    if new.evaluate() != w.evaluate():
        raise NonPolynomialArgument("constant split failed verification")
    return new


def split_constant_pairs(w, var=None):
    """Like split_constant but returns (constant, X-part) letter pairs,
    zero letters included so the pairing stays aligned."""
    ring = w.ring
    var = var or ring.vars[-1]
    vi = ring.vars.index(var)
    pairs = []
    for letter in w.letters:
        f = letter.a
        const = ring.el([(e, c) for e, c in f.payload if e[vi] == 0])
        pairs.append((LetterSE(letter.i, letter.j, const),
                      LetterSE(letter.i, letter.j, f - const)))
    return pairs


def conjugate_normalize(pairs):
    """Reshuffle prod a_i b_i into (prod A_i b_i A_i^{-1}) * prod a_i
    with A_i = a_1 ... a_i; returns (conjugated word, tail word)."""
    if not pairs:
        raise ShapeMismatch("need at least one (a, b) pair")
    ring, size = pairs[0][0].ring, pairs[0][0].size
    for a, b in pairs:
        if a.ring != ring or b.ring != ring or a.size != size or b.size != size:
            raise ShapeMismatch("mixed rings or sizes in pairs")
    conj_letters = []
    prefix = GenWord(ring, size)
    tail = GenWord(ring, size)
    for a, b in pairs:
        prefix = prefix * a
        conj_letters.append(LetterConj(prefix.inverse_word(), b))
        tail = tail * a
    conjugated = GenWord(ring, size, conj_letters)
    interleaved = MatR.identity(ring, size)
    for a, b in pairs:
        interleaved = interleaved * a.evaluate() * b.evaluate()
    if conjugated.evaluate() * tail.evaluate() != interleaved:
        raise ShapeMismatch("reshuffle failed verification")
    return conjugated, tail


# -- samplers ----------------------------------------------------------------


def _sample_unit(ring, rng):
    for _ in range(64):
        x = ring.sample(rng)
        if x.is_unit():
            return x
    return ring.one


def random_e_word(ring, size, seed, length, small=True):
    rng = random.Random(seed)
    letters = []
    for _ in range(length):
        i = rng.randrange(1, size + 1)
        j = rng.randrange(1, size + 1)
        while j == i:
            j = rng.randrange(1, size + 1)
        letters.append(LetterE(i, j, ring.sample(rng, small)))
    return GenWord(ring, size, letters)


def random_se_word(ring, n, seed, length, ideal=None):
    rng = random.Random(seed)
    letters = []
    for _ in range(length):
        i = rng.randrange(1, 2 * n + 1)
        j = rng.randrange(1, 2 * n + 1)
        while j == i:
            j = rng.randrange(1, 2 * n + 1)
        a = ideal.sample(rng) if ideal is not None else ring.sample(rng)
        letters.append(LetterSE(i, j, a))
    return GenWord(ring, 2 * n, letters, relative=ideal)


def gen_pfaffian_one(ring, n, seed, word_length):
    """A random Pfaffian-1 alternating form phi = eps^t psi_n eps with
    eps drawn as a word in E_{2n}; the word is kept as certificate."""
    if n < 1:
        raise ShapeMismatch("need n >= 1")
    eps_word = random_e_word(ring, 2 * n, seed, word_length)
    eps = eps_word.evaluate()
    mat = eps.transpose() * psi(ring, n) * eps
    form = check_alternating(mat, cert=eps_word, cert_kind="frame")
    if not form.pf.is_one():
        raise ShapeMismatch(f"generated form has Pfaffian {form.pf}, expected 1")
    return form


def gen_bordered_pfaffian_one(ring, n, seed, word_length):
    """phi = (1 perp eps)^t psi_n (1 perp eps) with eps a word in
    E_{2n-1}; returns (form, eps word)."""
    eps_word = random_e_word(ring, 2 * n - 1, seed, word_length)
    eps = MatR.identity(ring, 1).perp(eps_word.evaluate())
    mat = eps.transpose() * psi(ring, n) * eps
    form = check_alternating(mat, cert=eps_word, cert_kind="bordered")
    if not form.pf.is_one():
        raise ShapeMismatch(f"generated form has Pfaffian {form.pf}, expected 1")
    return form, eps_word


def sample_sp(form, seed, length):
    """A pseudorandom element of Sp_phi(R): a word of se and torus
    letters over psi_n transported through the form's certificate."""
    if form.cert is None:
        raise NoCertificate("sampling needs a decomposition certificate")
    ring = form.ring
    n = form.n
    rng = random.Random(seed)
    letters = []
    for _ in range(length):
        if rng.random() < 0.25:
            letters.append(LetterTorus(rng.randrange(1, n + 1),
                                       _sample_unit(ring, rng)))
        else:
            i = rng.randrange(1, 2 * n + 1)
            j = rng.randrange(1, 2 * n + 1)
            while j == i:
                j = rng.randrange(1, 2 * n + 1)
            letters.append(LetterSE(i, j, ring.sample(rng)))
    base = GenWord(ring, 2 * n, letters).evaluate()
    frame = form.frame_matrix()
    delta = frame.inverse() * base * frame
    report = check_sp_membership(delta, form)
    if not report.in_sp:
        raise NoCertificate("transported sample failed Sp membership (bug)")
    return delta
