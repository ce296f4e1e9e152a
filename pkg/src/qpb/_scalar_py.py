"""Pure-Python kernel for exact arithmetic in Q(q).

A scalar is a reduced fraction of integer-coefficient polynomials in the
deformation parameter q.  Polynomials are little-endian int tuples with no
trailing zeros; the zero polynomial is the empty tuple.  Canonical form:

* denominator nonzero, with positive leading coefficient,
* gcd of numerator and denominator is 1 in Q[q] (primitive parts coprime),
* gcd(content(num), content(den)) = 1.

This module has a Cython twin (qpb._scalar_cy) with the identical surface;
qpb._backend selects one at import time.  Keep the two in sync.
"""

from __future__ import annotations

from math import gcd as _igcd

from .errors import DivisionByZero

BACKEND = "python"


def pnorm(c):
    """Strip trailing zeros from a coefficient list, return a tuple."""
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] += b[i]
    return pnorm(out)


def psub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i in range(len(b)):
        out[i] -= b[i]
    return pnorm(out)


def pneg(a):
    return tuple(-x for x in a)


def pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return pnorm(out)


def pcontent(a):
    """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for x in a:
        g = _igcd(g, x)
        if g == 1:
            return 1
    return g


def pprim(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    c = pcontent(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return tuple(a)
    return tuple(x // c for x in a)


def pdivexact(a, b):
    """Quotient a // b assuming the division is exact over Z[q]."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if not a:
        return ()
    ra = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = ra[k + db]
        if c:
            c //= lb
            out[k] = c
            for j in range(len(b)):
                ra[k + j] -= c * b[j]
    return pnorm(out)


def ppseudo_rem(a, b):
    """Remainder of a by b up to a power of lc(b); callers re-primitivize."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            for j in range(len(r)):
                r[j] *= lb
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    return pnorm(r)


def pgcd(a, b):
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if not a:
        return pprim(b)
    if not b:
        return pprim(a)
    if len(a) == 1 and len(b) == 1:
        return (_igcd(a[0], b[0]),)
    a, b = pprim(a), pprim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, pprim(ppseudo_rem(a, b))
    return a


def _normalize(num, den):
    if not den:
        raise DivisionByZero("zero denominator in Q(q)")
    if not num:
        return (), (1,)
    if len(num) == 1 and len(den) == 1:
        n, d = num[0], den[0]
        g = _igcd(n, d)
        if d < 0:
            g = -g
        return (n // g,), (d // g,)
    g = pgcd(num, den)
    if len(g) > 1 or g[0] != 1:
        num = pdivexact(num, g)
        den = pdivexact(den, g)
    cn, cd = pcontent(num), pcontent(den)
    c = _igcd(cn, cd)
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return tuple(num), tuple(den)


class Scalar:
    """Immutable element of Q(q) in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=(1,), _raw=False):
        if _raw:
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "den", den)
        else:
            n, d = _normalize(pnorm(num), pnorm(den))
            object.__setattr__(self, "num", n)
            object.__setattr__(self, "den", d)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        if name == "_hash":
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("Scalar is immutable")

    @staticmethod
    def from_int(n):
        if n == 0:
            return ZERO
        return Scalar((n,), (1,), _raw=True)

    @staticmethod
    def from_fraction(n, d):
        return Scalar((n,), (d,))

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num == (1,) and self.den == (1,)

    def is_rational(self):
        return len(self.num) <= 1 and len(self.den) <= 1

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other):
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return Scalar(padd(self.num, other.num), self.den)
        return Scalar(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    def __sub__(self, other):
        if not other.num:
            return self
        if self.den == other.den:
            return Scalar(psub(self.num, other.num), self.den)
        return Scalar(
            psub(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    def __neg__(self):
        if not self.num:
            return self
        return Scalar(pneg(self.num), self.den, _raw=True)

    def __mul__(self, other):
        if not self.num or not other.num:
            return ZERO
        return Scalar(pmul(self.num, other.num), pmul(self.den, other.den))

    def __truediv__(self, other):
        if not other.num:
            raise DivisionByZero("division by zero in Q(q)")
        if not self.num:
            return ZERO
        return Scalar(pmul(self.num, other.den), pmul(self.den, other.num))

    def inv(self):
        if not self.num:
            raise DivisionByZero("inverting zero in Q(q)")
        return Scalar(self.den, self.num)

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        r = ONE
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __repr__(self):
        return f"Scalar({self.num!r}, {self.den!r})"


ZERO = Scalar((), (1,), _raw=True)
ONE = Scalar((1,), (1,), _raw=True)
Q = Scalar((0, 1), (1,), _raw=True)
