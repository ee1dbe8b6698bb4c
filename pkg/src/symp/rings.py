"""Exact arithmetic over a small menu of commutative rings.

Supported kinds: the integers, Z/m, sparse multivariate polynomial rings
over those, and localizations R_a at a non-nilpotent element of Z or Z/m.
Every element carries a canonical payload, so equality is literal payload
comparison and elements are hashable.  All values are immutable.

Localized equality r/a^k = s/a^l is the saturation condition
a^t(r*a^l - s*a^k) = 0 for some t; canonicalization (dividing out powers
of a over Z, reducing to the stable modulus over Z/m) realizes it as
payload identity.
"""

from __future__ import annotations

import math
import os

from .errors import (BadDescriptor, BadModulus, MixedRings,
                     NilpotentLocalization, UnsupportedRing)


def nil_bound():
    """Cap for power-saturation searches (env SYMP_NIL_BOUND, default 64)."""
    return int(os.environ.get("SYMP_NIL_BOUND", "64"))


class RElem:
    """An element of a Ring: an owner plus a canonical payload."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring, payload):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, *a):
        raise AttributeError("RElem is immutable")

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ring.from_int(other)
        if not isinstance(other, RElem):
            return NotImplemented
        if other.ring != self.ring:
            raise MixedRings(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring.el(self.ring._add(self.payload, other.payload))

    __radd__ = __add__

    def __neg__(self):
        return self.ring.el(self.ring._neg(self.payload))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring.el(self.ring._mul(self.payload, other.payload))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            inv = self.inverse_or_none()
            if inv is None:
                raise ZeroDivisionError("negative power of a non-unit")
            return inv ** (-k)
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, RElem):
            return NotImplemented
        return self.ring == other.ring and self.payload == other.payload

    def __hash__(self):
        return hash((self.ring.key(), self.payload))

    def is_zero(self):
        return self.payload == self.ring.zero.payload

    def is_one(self):
        return self.payload == self.ring.one.payload

    def inverse_or_none(self):
        p = self.ring._unit(self.payload)
        return None if p is None else self.ring.el(p)

    def is_unit(self):
        return self.ring._unit(self.payload) is not None

    def is_nilpotent(self):
        return self.ring._nilpotent(self.payload)

    def __str__(self):
        return self.ring._str(self.payload)

    def __repr__(self):
        return f"<{self} in {self.ring}>"


class Ring:
    kind = ""

    def el(self, payload):
        return RElem(self, self._canon(payload))

    def key(self):
        k = getattr(self, "_key", None)
        if k is None:
            k = self._key = _freeze(self.descriptor())
        return k

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return self._name()

    @property
    def zero(self):
        return self.el(self._zero())

    @property
    def one(self):
        return self.el(self._one())

    def from_int(self, n):
        out = self.el(self._zero())
        one = self.one
        step = one if n >= 0 else -one
        for _ in range(abs(n)):
            out = out + step
        return out

    def half(self):
        """The inverse of 2 if 2 is a unit, else None (cached)."""
        if not hasattr(self, "_half"):
            self._half = self.from_int(2).inverse_or_none()
        return self._half

    @property
    def half_available(self):
        return self.half() is not None

    # subclasses: descriptor, _name, _zero, _one, _canon, _add, _neg,
    # _mul, _unit, _nilpotent, _str, parse, sample, divexact


def _freeze(obj):
    if isinstance(obj, dict):
        return tuple(sorted((k, _freeze(v)) for k, v in obj.items()))
    if isinstance(obj, (list, tuple)):
        return tuple(_freeze(v) for v in obj)
    return obj


class IntegerRing(Ring):
    kind = "integers"

    def descriptor(self):
        return {"kind": "integers"}

    def _name(self):
        return "Z"

    def _zero(self):
        return 0

    def _one(self):
        return 1

    def _canon(self, p):
        return int(p)

    def _add(self, p, q):
        return p + q

    def _neg(self, p):
        return -p

    def _mul(self, p, q):
        return p * q

    def _unit(self, p):
        return p if p in (1, -1) else None

    def _nilpotent(self, p):
        return p == 0

    def _str(self, p):
        return str(p)

    def parse(self, s):
        return self.el(int(s))

    def from_int(self, n):
        return self.el(n)

    def sample(self, rng, small=True):
        return self.el(rng.randint(-3, 3) if small else rng.randint(-50, 50))

    def divexact(self, p, q):
        if q == 0:
            return None
        d, r = divmod(p, q)
        return d if r == 0 else None


class ModularRing(Ring):
    kind = "modular"

    def __init__(self, m):
        if not isinstance(m, int) or m < 2:
            raise BadModulus(f"modulus must be an integer >= 2, got {m!r}")
        self.m = m

    def descriptor(self):
        return {"kind": "modular", "m": self.m}

    def _name(self):
        return f"Z/{self.m}"

    def _zero(self):
        return 0

    def _one(self):
        return 1 % self.m

    def _canon(self, p):
        return int(p) % self.m

    def _add(self, p, q):
        return (p + q) % self.m

    def _neg(self, p):
        return (-p) % self.m

    def _mul(self, p, q):
        return (p * q) % self.m

    def _unit(self, p):
        g = math.gcd(p, self.m)
        if g != 1:
            return None
        return pow(p, -1, self.m)

    def _nilpotent(self, p):
        # nilpotent iff rad(m) divides p; exponents in m are < bit_length
        return pow(p, self.m.bit_length(), self.m) == 0

    def _str(self, p):
        return str(p)

    def parse(self, s):
        return self.el(int(s))

    def from_int(self, n):
        return self.el(n)

    def sample(self, rng, small=True):
        return self.el(rng.randrange(self.m))

    def divexact(self, p, q):
        return None


def _strip_factor(n, a):
    """Remove from n > 0 every prime factor shared with a."""
    while True:
        g = math.gcd(n, a)
        if g == 1:
            return n
        while n % g == 0:
            n //= g


class LocalizedRing(Ring):
    """R_a for R = Z or Z/m.  Payloads are (numerator, k) meaning r/a^k."""

    kind = "localized"

    def __init__(self, base, at):
        if isinstance(at, RElem):
            if at.ring != base:
                raise MixedRings("localization element must live in the base")
            at = at.payload
        self.base = base
        if base.kind == "integers":
            self.a = int(at)
            if self.a == 0:
                raise NilpotentLocalization("cannot localize Z at 0")
            self.m_stable = None
        elif base.kind == "modular":
            self.a = int(at) % base.m
            g = math.gcd(self.a, base.m)
            while True:
                g2 = math.gcd(g * g, base.m)
                if g2 == g:
                    break
                g = g2
            m_stable = base.m // g
            if m_stable == 1:
                raise NilpotentLocalization(
                    f"{self.a} is nilpotent in Z/{base.m}")
            self.m_stable = m_stable
            self.a_inv_stable = pow(self.a % m_stable, -1, m_stable)
        else:
            raise UnsupportedRing("localization base must be Z or Z/m")
        self.at = base.el(self.a)

    def descriptor(self):
        return {"kind": "localized", "base": self.base.descriptor(),
                "at": str(self.at)}

    def _name(self):
        return f"({self.base})_{self.at}"

    def _zero(self):
        return (self.base._zero(), 0)

    def _one(self):
        return (self.base._one(), 0)

    def _canon(self, p):
        r, k = p
        if self.m_stable is not None:
            ms = self.m_stable
            return ((r * pow(self.a_inv_stable, k, ms)) % ms, 0)
        r = int(r)
        if r == 0:
            return (0, 0)
        a = self.a
        if a in (1, -1):
            return (r * a ** (k % 2 if a == -1 else 0), 0)
        while k > 0 and r % a == 0:
            r //= a
            k -= 1
        return (r, k)

    def _add(self, p, q):
        (r, k), (s, l) = p, q
        top = max(k, l)
        num = self.base._add(
            self.base._mul(r, self.base._canon(self.a ** (top - k))),
            self.base._mul(s, self.base._canon(self.a ** (top - l))))
        return (num, top)

    def _neg(self, p):
        return (self.base._neg(p[0]), p[1])

    def _mul(self, p, q):
        return (self.base._mul(p[0], q[0]), p[1] + q[1])

    def _unit(self, p):
        r, k = self._canon(p)
        if self.m_stable is not None:
            ms = self.m_stable
            if math.gcd(r, ms) != 1:
                return None
            return (pow(r, -1, ms), 0)
        if r == 0:
            return None
        if _strip_factor(abs(r), abs(self.a)) != 1:
            return None
        a, bound = self.a, nil_bound()
        power = 1
        for t in range(bound + 1):
            if power % r == 0:
                return self._canon((self.a ** k * (power // r), t))
            power *= a
        return None

    def _nilpotent(self, p):
        r, _ = self._canon(p)
        if self.m_stable is not None:
            return pow(r, self.m_stable.bit_length(), self.m_stable) == 0
        return r == 0

    def _str(self, p):
        r, k = p
        if k == 0:
            return self.base._str(r)
        a_str = self.base._str(self.a if self.m_stable is None else self.at.payload)
        if a_str.startswith("-"):
            a_str = f"({a_str})"
        return f"{self.base._str(r)}/{a_str}" + (f"^{k}" if k > 1 else "")

    def parse(self, s):
        s = s.strip()
        if "/" not in s:
            return self.localize(self.base.parse(s))
        num, den = s.split("/", 1)
        den = den.strip()
        if den.startswith("("):
            close = den.index(")")
            a_str, rest = den[1:close], den[close + 1:]
        elif "^" in den:
            a_str, rest = den.split("^", 1)
            rest = "^" + rest
        else:
            a_str, rest = den, ""
        k = int(rest.lstrip("^")) if rest.strip().lstrip("^") else 1
        if self.base.parse(a_str) != self.at:
            raise BadDescriptor(f"denominator {a_str!r} is not the stored element")
        return self.el((self.base.parse(num).payload, k))

    def from_int(self, n):
        return self.el((self.base.from_int(n).payload, 0))

    def localize(self, x):
        """Canonical image x/1 of a base element."""
        if x.ring != self.base:
            raise MixedRings("element does not live in the base ring")
        return self.el((x.payload, 0))

    def delocalize_or_none(self, x):
        """A base preimage if one exists (any section of the canonical map)."""
        r, k = x.payload
        if k == 0:
            return self.base.el(r)
        return None

    def sample(self, rng, small=True):
        return self.el((self.base.sample(rng, small).payload, rng.randint(0, 2)))

    def divexact(self, p, q):
        if q == self._zero():
            return None
        qinv = self._unit(q)
        if qinv is not None:
            return self._mul(p, qinv)
        if self.m_stable is not None:
            return None
        (r, k), (s, l) = self._canon(p), self._canon(q)
        power = 1
        for t in range(nil_bound() + 1):
            if (r * power) % s == 0:
                return self._canon((r * power // s, k - l + t))
            power *= self.a
        return None


def _grlex_key(exps):
    return (sum(exps), exps)


class PolynomialRing(Ring):
    """Sparse multivariate polynomials with graded-lex term order.

    Payload: tuple of (exponent-tuple, base payload) pairs, nonzero
    coefficients only, sorted grlex-descending.
    """

    kind = "poly"

    def __init__(self, base, variables):
        if base.kind == "poly":
            raise UnsupportedRing("nested polynomial rings are not supported;"
                                  " use a single multivariate ring")
        variables = tuple(variables)
        if not variables or len(set(variables)) != len(variables):
            raise BadDescriptor(f"bad variable list {variables!r}")
        self.base = base
        self.vars = variables
        self.n = len(variables)

    def descriptor(self):
        return {"kind": "poly", "base": self.base.descriptor(),
                "vars": list(self.vars)}

    def _name(self):
        return f"{self.base}[{','.join(self.vars)}]"

    def _zero(self):
        return ()

    def _one(self):
        return (((0,) * self.n, self.base._one()),)

    def _canon(self, p):
        items = [(tuple(e), c) for e, c in (p.items() if isinstance(p, dict) else p)]
        acc = {}
        for e, c in items:
            acc[e] = self.base._add(acc[e], c) if e in acc else self.base._canon(c)
        z = self.base._zero()
        out = [(e, c) for e, c in acc.items() if c != z]
        out.sort(key=lambda ec: _grlex_key(ec[0]), reverse=True)
        return tuple(out)

    def _add(self, p, q):
        acc = dict(p)
        for e, c in q:
            acc[e] = self.base._add(acc[e], c) if e in acc else c
        return acc

    def _neg(self, p):
        return tuple((e, self.base._neg(c)) for e, c in p)

    def _mul(self, p, q):
        acc = {}
        for e1, c1 in p:
            for e2, c2 in q:
                e = tuple(a + b for a, b in zip(e1, e2))
                c = self.base._mul(c1, c2)
                acc[e] = self.base._add(acc[e], c) if e in acc else c
        return acc

    def _unit(self, p):
        # f is a unit iff f(0,..,0) is a unit and every other coefficient
        # is nilpotent; then the tail is nilpotent and a geometric series
        # terminates.
        p = self._canon(p)
        zero_exp = (0,) * self.n
        const = self.base._zero()
        tail = []
        for e, c in p:
            if e == zero_exp:
                const = c
            else:
                if not self.base._nilpotent(c):
                    return None
                tail.append((e, c))
        c_inv = self.base._unit(const)
        if c_inv is None:
            return None
        inv = self._canon([(zero_exp, c_inv)])
        if not tail:
            return inv
        minus_cn = self._canon([(e, self.base._neg(self.base._mul(c_inv, c)))
                                for e, c in tail])
        out, power = inv, self._one()
        for _ in range(nil_bound()):
            power = self._canon(self._mul(power, minus_cn))
            if not power:
                break
            out = self._canon(self._add(out, self._mul(power, inv)))
        else:
            return None
        if self._canon(self._mul(out, p)) != self._one():
            return None
        return out

    def _nilpotent(self, p):
        return all(self.base._nilpotent(c) for _, c in p)

    def _monomial_str(self, e, c):
        parts = []
        c_str = self.base._str(c)
        if any(e):
            negate = False
            if c == self.base._neg(self.base._one()) and self.base.kind == "integers":
                negate = True
            elif c != self.base._one():
                parts.append(c_str)
            for name, k in zip(self.vars, e):
                if k == 1:
                    parts.append(name)
                elif k > 1:
                    parts.append(f"{name}^{k}")
            return ("-" if negate else "") + "*".join(parts)
        return c_str

    def _str(self, p):
        if not p:
            return "0"
        out = ""
        for e, c in p:
            term = self._monomial_str(e, c)
            if out:
                out += "-" + term[1:] if term.startswith("-") else "+" + term
            else:
                out = term
        return out

    def parse(self, s):
        return parse_poly(self, s)

    def from_int(self, n):
        return self.el([((0,) * self.n, self.base.from_int(n).payload)])

    def var(self, name):
        if name not in self.vars:
            raise BadDescriptor(f"unknown variable {name!r} in {self}")
        e = tuple(1 if v == name else 0 for v in self.vars)
        return self.el([(e, self.base._one())])

    def constant(self, x):
        if isinstance(x, RElem):
            if x.ring != self.base:
                raise MixedRings("constant must live in the coefficient ring")
            x = x.payload
        return self.el([((0,) * self.n, x)])

    def coefficients(self, x):
        """Base-ring coefficients of x, constant term included even if zero."""
        out = [self.base.el(c) for _, c in x.payload]
        if not out:
            out = [self.base.zero]
        return out

    def evaluate(self, x, images, coeff_hom=None):
        """Map x through var -> images[var] with an optional coefficient
        homomorphism; images must share one target ring."""
        targets = list(images.values())
        if not targets:
            raise BadDescriptor("need at least one variable image")
        tgt = targets[0].ring
        hom = coeff_hom or (lambda c: _default_coeff_map(self.base, c, tgt))
        missing = [v for v in self.vars if v not in images]
        if missing:
            raise BadDescriptor(f"no image for variables {missing}")
        out = tgt.zero
        for e, c in x.payload:
            term = hom(self.base.el(c))
            for name, k in zip(self.vars, e):
                if k:
                    term = term * images[name] ** k
            out = out + term
        return out

    def val_in(self, x, name):
        """Minimum exponent of `name` across terms; None for the zero poly."""
        i = self.vars.index(name)
        if not x.payload:
            return None
        return min(e[i] for e, _ in x.payload)

    def divexact_monomial(self, x, name, k):
        """Exact division by name**k, or None."""
        i = self.vars.index(name)
        out = []
        for e, c in x.payload:
            if e[i] < k:
                return None
            e2 = tuple(v - k if j == i else v for j, v in enumerate(e))
            out.append((e2, c))
        return self.el(out)

    def sample(self, rng, small=True):
        terms = []
        for _ in range(rng.randint(0, 2)):
            e = tuple(rng.randint(0, 2) for _ in self.vars)
            terms.append((e, self.base.sample(rng, small=True).payload))
        return self.el(terms)

    def divexact(self, p, q):
        if not q:
            return None
        if self.base.divexact(self.base._one(), self.base._one()) is None:
            return None
        rem = self._canon(p)
        quot = {}
        le, lc = q[0]
        for _ in range(len(p) * (len(q) + 1) + 4):
            if not rem:
                return self._canon(quot)
            e, c = rem[0]
            de = tuple(a - b for a, b in zip(e, le))
            if any(v < 0 for v in de):
                return None
            dc = self.base.divexact(c, lc)
            if dc is None:
                return None
            quot[de] = self.base._add(quot[de], dc) if de in quot else dc
            piece = self._canon(self._mul(((de, dc),), q))
            rem = self._canon(self._add(rem, self._neg(piece)))
        return None


def _default_coeff_map(src, c, tgt):
    """Canonical coefficient map used by PolynomialRing.evaluate."""
    if tgt == src:
        return c
    if tgt.kind == "poly":
        if tgt.base == src:
            return tgt.constant(c)
        return tgt.constant(_default_coeff_map(src, c, tgt.base))
    if tgt.kind == "localized" and tgt.base == src:
        return tgt.localize(c)
    if src.kind == "localized" and tgt == src.base:
        pre = src.delocalize_or_none(c)
        if pre is None:
            raise UnsupportedRing(f"{c} has no preimage in {tgt}")
        return pre
    raise UnsupportedRing(f"no canonical map {src} -> {tgt}")


# -- parsing -------------------------------------------------------------

def _split_top(s, seps="+-"):
    """Split outside parentheses, keeping the sign with each chunk."""
    chunks, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in seps and cur.strip():
            chunks.append(cur)
            cur = ch if ch == "-" else ""
            continue
        if depth == 0 and ch in seps and not cur.strip():
            cur = ch if ch == "-" else ""
            continue
        cur += ch
    if cur.strip():
        chunks.append(cur)
    return chunks


def parse_poly(ring, s):
    s = s.strip().replace(" ", "")
    if not s:
        raise BadDescriptor("empty polynomial string")
    total = ring.zero
    for chunk in _split_top(s):
        neg = chunk.startswith("-")
        body = chunk[1:] if neg else chunk
        coeff = ring.base.one
        exps = [0] * ring.n
        for factor in body.split("*"):
            if not factor:
                continue
            name, _, power = factor.partition("^")
            if name.startswith("(") and name.endswith(")"):
                coeff = coeff * ring.base.parse(name[1:-1])
                continue
            if name in ring.vars:
                exps[ring.vars.index(name)] += int(power) if power else 1
            else:
                coeff = coeff * ring.base.parse(factor)
        term = ring.el([(tuple(exps), coeff.payload)])
        total = total + (-term if neg else term)
    return total


# -- constructors --------------------------------------------------------

def make_ring(spec):
    """Build a Ring from a JSON-style descriptor dict or shorthand string.

    Shorthands: "integers", "zmod:9", "poly:integers:X,Y",
    "poly:zmod:9:X", "loc:integers:2", "loc:zmod:35:5".
    """
    if isinstance(spec, Ring):
        return spec
    if isinstance(spec, str):
        return _ring_from_shorthand(spec)
    if not isinstance(spec, dict) or "kind" not in spec:
        raise BadDescriptor(f"bad ring descriptor {spec!r}")
    kind = spec["kind"]
    if kind == "integers":
        return IntegerRing()
    if kind == "modular":
        return ModularRing(spec.get("m"))
    if kind == "poly":
        base = make_ring(spec["base"])
        return PolynomialRing(base, spec["vars"])
    if kind == "localized":
        base = make_ring(spec["base"])
        return LocalizedRing(base, base.parse(str(spec["at"])))
    raise BadDescriptor(f"unknown ring kind {kind!r}")


def _ring_from_shorthand(s):
    parts = s.split(":")
    if parts[0] == "integers":
        return IntegerRing()
    if parts[0] == "zmod":
        if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
            raise BadDescriptor(f"bad shorthand {s!r}")
        return ModularRing(int(parts[1]))
    if parts[0] == "poly":
        vars_part = parts[-1]
        base = _ring_from_shorthand(":".join(parts[1:-1]))
        return PolynomialRing(base, vars_part.split(","))
    if parts[0] == "loc":
        at_part = parts[-1]
        base = _ring_from_shorthand(":".join(parts[1:-1]))
        return LocalizedRing(base, base.parse(at_part))
    raise BadDescriptor(f"bad shorthand {s!r}")


# -- ideals --------------------------------------------------------------

class IdealSpec:
    """A finitely generated ideal with decidable membership.

    Membership is gcd-based over Z and Z/m (and their localizations);
    over polynomial rings only constant-coefficient generators are
    supported, realizing the extension I[X] with coefficientwise tests.
    Generators {1} give the unit ideal.
    """

    def __init__(self, owner, generators):
        self.owner = owner
        gens = []
        for g in generators:
            if isinstance(g, int):
                g = owner.from_int(g)
            if g.ring != owner:
                raise MixedRings("generator outside the owner ring")
            gens.append(g)
        self.generators = tuple(gens)
        self._base_ideal = None
        if owner.kind == "poly":
            consts = []
            for g in self.generators:
                pay = g.payload
                if any(any(e) for e, _ in pay):
                    raise UnsupportedRing(
                        "polynomial ideals support constant generators only"
                        " (extension ideals I[X])")
                consts.append(owner.base.el(pay[0][1]) if pay else owner.base.zero)
            self._base_ideal = IdealSpec(owner.base, consts)

    def descriptor(self):
        return {"ring": self.owner.descriptor(),
                "generators": [str(g) for g in self.generators]}

    def __repr__(self):
        return f"({', '.join(map(str, self.generators))}) in {self.owner}"

    def __eq__(self, other):
        return (isinstance(other, IdealSpec) and self.owner == other.owner
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.owner.key(), self.generators))

    def is_unit_ideal(self):
        return self.contains(self.owner.one)

    def contains(self, x):
        if isinstance(x, int):
            x = self.owner.from_int(x)
        if x.ring != self.owner:
            raise MixedRings("membership test outside the owner ring")
        own = self.owner
        if own.kind == "poly":
            return all(self._base_ideal.contains(c)
                       for c in own.coefficients(x))
        if own.kind == "integers":
            g = 0
            for gen in self.generators:
                g = math.gcd(g, gen.payload)
            return x.payload == 0 if g == 0 else x.payload % g == 0
        if own.kind == "modular":
            g = own.m
            for gen in self.generators:
                g = math.gcd(g, gen.payload)
            return x.payload % g == 0
        if own.kind == "localized":
            if own.m_stable is not None:
                g = own.m_stable
                for gen in self.generators:
                    g = math.gcd(g, gen.payload[0])
                return x.payload[0] % g == 0
            g = 0
            for gen in self.generators:
                g = math.gcd(g, abs(gen.payload[0]))
            if g == 0:
                return x.payload[0] == 0
            g = _strip_factor(g, abs(own.a))
            return x.payload[0] % g == 0
        raise UnsupportedRing(f"no membership procedure for {own}")

    def extend_to(self, target):
        """The extension ideal in a ring reachable from the owner by
        polynomial extension and/or localization."""
        if target == self.owner:
            return self
        return IdealSpec(target, [embed(g, target) for g in self.generators])

    def sample(self, rng):
        """A random element of the ideal."""
        out = self.owner.zero
        for g in self.generators:
            out = out + self.owner.sample(rng) * g
        return out


def embed(x, target):
    """Canonical image of x under base -> poly constants / localization."""
    if x.ring == target:
        return x
    if target.kind == "poly":
        return target.constant(embed(x, target.base))
    if target.kind == "localized":
        return target.localize(embed(x, target.base))
    raise UnsupportedRing(f"no canonical embedding {x.ring} -> {target}")


def ideal_contains(ideal, x):
    return ideal.contains(x)


def localize_map(x, target):
    """The map a -> a/1 into a localization of x's ring, extended
    coefficientwise to polynomial rings over it."""
    if target.kind == "localized" and target.base == x.ring:
        return target.localize(x)
    if (target.kind == "poly" and x.ring.kind == "poly"
            and target.vars == x.ring.vars):
        return x.ring.evaluate(
            x, {v: target.var(v) for v in target.vars},
            coeff_hom=lambda c: embed(c, target.base))
    raise MixedRings(f"{target} is not a localization of {x.ring}")
