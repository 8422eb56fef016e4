"""Exact arithmetic in Z[x1^{+-1}, ..., xk^{+-1}] and in prime fields.

Polynomials are stored as finite maps from exponent vectors (one integer
per context variable, negatives allowed) to nonzero integer coefficients.
All values are immutable after construction and all operations are pure.
"""
from __future__ import annotations

import re

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")
_FAMILY_RE = re.compile(r"([A-Za-z_]+?)([0-9]+)$")
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\^)|(\*)|(\+)|(-))")


class ContextMismatch(ValueError):
    """Operands belong to different ring contexts."""


class NotAUnit(ValueError):
    """An inverse of a non-unit was requested."""


class PolyParseError(ValueError):
    """Polynomial text does not match the grammar."""


class RingContext:
    """An ordered tuple of distinct Laurent variable names."""

    __slots__ = ("variables", "_index")

    def __init__(self, variables):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate variable names: %r" % (vs,))
        for v in vs:
            if not _NAME_RE.match(v):
                raise ValueError("bad variable name: %r" % (v,))
        self.variables = vs
        self._index = {v: i for i, v in enumerate(vs)}

    @property
    def arity(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError("variable %r not in context %r" % (name, self.variables))

    def zero(self):
        return LaurentPoly._raw(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        if c == 0:
            return self.zero()
        return LaurentPoly._raw(self, {(0,) * self.arity: int(c)})

    def monomial(self, exps, c=1):
        """Single-term polynomial c * prod(x_i^exps[i])."""
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.arity:
            raise ValueError("exponent vector length %d != arity %d" % (len(exps), self.arity))
        if c == 0:
            return self.zero()
        return LaurentPoly._raw(self, {exps: int(c)})

    def var(self, name, power=1):
        exps = [0] * self.arity
        exps[self.index(name)] = power
        return self.monomial(exps)

    def families(self):
        """Split variables into indexed families, e.g. u1,u2 -> ('u', 1), ('u', 2).

        Returns a dict variable -> (family, index).  Raises if any variable
        does not carry a trailing integer index.
        """
        out = {}
        for v in self.variables:
            m = _FAMILY_RE.match(v)
            if not m:
                raise ValueError("variable %r is not part of an indexed family" % v)
            out[v] = (m.group(1), int(m.group(2)))
        return out

    def parse(self, text):
        """Parse polynomial text (integer coefficients, `*`, `^`, `+`, `-`)."""
        return _parse_poly(self, text)

    def __eq__(self, other):
        return isinstance(other, RingContext) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return "RingContext(%s)" % ", ".join(self.variables)


class LaurentPoly:
    """Multivariate Laurent polynomial with integer coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        clean = {}
        for e, c in terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != ctx.arity:
                raise ValueError("exponent vector arity mismatch")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.ctx = ctx
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, ctx, terms):
        p = object.__new__(cls)
        p.ctx = ctx
        p.terms = terms
        return p

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.ctx != self.ctx:
                raise ContextMismatch("%r vs %r" % (self.ctx, other.ctx))
            return other
        if isinstance(other, int):
            return self.ctx.const(other)
        return None

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.ctx.arity: 1}

    def is_monomial(self):
        return len(self.terms) == 1

    def is_unit(self):
        """Units of Z[Lambda] are +-(single monomial)."""
        if len(self.terms) != 1:
            return False
        (c,) = self.terms.values()
        return c in (1, -1)

    def inverse(self):
        if not self.is_unit():
            raise NotAUnit("not a unit: %s" % self)
        ((e, c),) = self.terms.items()
        return LaurentPoly._raw(self.ctx, {tuple(-x for x in e): c})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return LaurentPoly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return LaurentPoly._raw(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == self.ctx.const(other).terms
        return (
            isinstance(other, LaurentPoly)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx, tuple(sorted(self.terms.items()))))

    def __str__(self):
        return poly_render(self)

    def __repr__(self):
        return "<%s>" % poly_render(self)


class PrimeField:
    """The field Z/pZ for a prime p.  Acts as a ring context for matrices."""

    __slots__ = ("p",)

    def __init__(self, p):
        p = int(p)
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("modulus %d is not prime" % p)
        self.p = p

    def zero(self):
        return PrimeFieldScalar(self, 0)

    def one(self):
        return PrimeFieldScalar(self, 1)

    def elem(self, v):
        return PrimeFieldScalar(self, v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


class PrimeFieldScalar:
    """An element of a prime field, stored reduced mod p."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = int(value) % field.p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldScalar):
            if other.field != self.field:
                raise ContextMismatch("different moduli")
            return other
        if isinstance(other, int):
            return PrimeFieldScalar(self.field, other)
        return None

    def is_zero(self):
        return self.value == 0

    def is_one(self):
        return self.value == 1

    def is_unit(self):
        return self.value != 0

    def inverse(self):
        if self.value == 0:
            raise NotAUnit("zero has no inverse")
        return PrimeFieldScalar(self.field, pow(self.value, self.field.p - 2, self.field.p))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeFieldScalar(self.field, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return PrimeFieldScalar(self.field, -self.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeFieldScalar(self.field, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PrimeFieldScalar(self.field, self.value * other.value)

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldScalar(self.field, pow(self.value, k, self.field.p))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.field.p
        return (
            isinstance(other, PrimeFieldScalar)
            and self.field == other.field
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return "%d (mod %d)" % (self.value, self.field.p)


def specialize(p, images, target):
    """Apply the ring homomorphism sending each variable to its image.

    `images` maps every variable of p's context to a unit of `target`
    (a RingContext or a PrimeField).  Images must be units because
    exponents may be negative.
    """
    missing = [v for v in p.ctx.variables if v not in images]
    if missing:
        raise KeyError("no image for variables %r" % (missing,))
    vals = []
    for v in p.ctx.variables:
        img = images[v]
        if isinstance(img, int):
            img = target.const(img) if isinstance(target, RingContext) else target.elem(img)
        if not img.is_unit():
            raise NotAUnit("image of %s is not a unit: %r" % (v, img))
        vals.append(img)
    out = target.zero()
    for e, c in p.terms.items():
        term = target.const(c) if isinstance(target, RingContext) else target.elem(c)
        for img, exp in zip(vals, e):
            if exp:
                term = term * img ** exp
        out = out + term
    return out


def embed(p, target):
    """Canonical inclusion into a context containing the same variables."""
    images = {v: target.var(v) for v in p.ctx.variables}
    return specialize(p, images, target)


def poly_render(p):
    """Canonical text form, parseable back to an equal polynomial.

    Terms are ordered lexicographically by exponent vector; variables
    inside a monomial are printed in alphabetical order.
    """
    if not p.terms:
        return "0"
    pieces = []
    names = p.ctx.variables
    order = sorted(range(len(names)), key=lambda i: names[i])
    for e in sorted(p.terms):
        c = p.terms[e]
        factors = []
        for i in order:
            exp = e[i]
            if exp == 1:
                factors.append(names[i])
            elif exp:
                factors.append("%s^%d" % (names[i], exp))
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += " %s %s" % (sign, body)
    return text


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise PolyParseError("bad token at offset %d in %r" % (pos, text))
            break
        pos = m.end()
        if m.group(1):
            out.append(("int", int(m.group(1))))
        elif m.group(2):
            out.append(("name", m.group(2)))
        elif m.group(3):
            out.append(("pow", None))
        elif m.group(4):
            out.append(("mul", None))
        elif m.group(5):
            out.append(("plus", None))
        else:
            out.append(("minus", None))
    return out


def _parse_poly(ctx, text):
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial text")
    result = ctx.zero()
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        while i < n and tokens[i][0] in ("plus", "minus"):
            if tokens[i][0] == "minus":
                sign = -sign
            i += 1
            first = False
        if i >= n:
            raise PolyParseError("dangling sign in %r" % text)
        if not first and tokens[i][0] not in ("int", "name"):
            raise PolyParseError("expected term in %r" % text)
        coeff = 1
        exps = [0] * ctx.arity
        expect_factor = True
        while i < n:
            kind, val = tokens[i]
            if kind == "int" and expect_factor:
                coeff *= val
                i += 1
            elif kind == "name" and expect_factor:
                idx = ctx.index(val)
                power = 1
                i += 1
                if i < n and tokens[i][0] == "pow":
                    i += 1
                    psign = 1
                    if i < n and tokens[i][0] == "minus":
                        psign = -1
                        i += 1
                    if i >= n or tokens[i][0] != "int":
                        raise PolyParseError("bad exponent in %r" % text)
                    power = psign * tokens[i][1]
                    i += 1
                exps[idx] += power
            elif kind == "mul":
                expect_factor = True
                i += 1
                continue
            else:
                break
            expect_factor = False
        if expect_factor:
            raise PolyParseError("dangling '*' in %r" % text)
        result = result + ctx.monomial(exps, sign * coeff)
        first = False
    return result
