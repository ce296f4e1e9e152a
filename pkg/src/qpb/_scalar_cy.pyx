# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython kernel for exact arithmetic in Q(q).

Twin of qpb._scalar_py with the identical surface and identical canonical
forms; only the inner loops differ (typed indices, no interpreter dispatch).
Coefficients stay Python ints: arbitrary precision is required because exact
elimination blows up intermediate coefficients.
"""

from math import gcd as _igcd

from .errors import DivisionByZero

BACKEND = "cython"


cpdef tuple pnorm(c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


cpdef tuple padd(tuple a, tuple b):
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    cdef Py_ssize_t i
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return pnorm(out)


cpdef tuple psub(tuple a, tuple b):
    cdef list out = list(a) + [0] * (len(b) - len(a))
    cdef Py_ssize_t i
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return pnorm(out)


cpdef tuple pneg(tuple a):
    return tuple([-x for x in a])


cpdef tuple pmul(tuple a, tuple b):
    if not a or not b:
        return ()
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef list out = [0] * (la + lb - 1)
    cdef Py_ssize_t i, j
    cdef object ai
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                out[i + j] = out[i + j] + ai * b[j]
    return pnorm(out)


cpdef object pcontent(tuple a):
    cdef object g = 0
    for x in a:
        g = _igcd(g, x)
        if g == 1:
            return 1
    return g


cpdef tuple pprim(tuple a):
    if not a:
        return ()
    cdef object c = pcontent(a)
    if a[len(a) - 1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple([x // c for x in a])


cpdef tuple pdivexact(tuple a, tuple b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if not a:
        return ()
    cdef list ra = list(a)
    cdef Py_ssize_t db = len(b) - 1
    cdef object lb = b[db]
    cdef list out = [0] * (len(a) - len(b) + 1)
    cdef Py_ssize_t k, j
    cdef object c
    for k in range(len(out) - 1, -1, -1):
        c = ra[k + db]
        if c:
            c = c // lb
            out[k] = c
            for j in range(len(b)):
                ra[k + j] = ra[k + j] - c * b[j]
    return pnorm(out)


cpdef tuple ppseudo_rem(tuple a, tuple b):
    cdef Py_ssize_t db = len(b) - 1
    cdef object lb = b[db]
    cdef list r = list(a)
    cdef Py_ssize_t k, j
    cdef object c
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            for j in range(len(r)):
                r[j] = r[j] * lb
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * b[j]
    return pnorm(r)


cpdef tuple pgcd(tuple a, tuple b):
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


cdef class Scalar:
    """Immutable element of Q(q) in canonical form."""

    cdef readonly tuple num
    cdef readonly tuple den
    cdef Py_hash_t _hash
    cdef bint _hashed

    def __init__(self, num, den=(1,), _raw=False):
        cdef tuple n, d
        if _raw:
            self.num = num
            self.den = den
        else:
            n = pnorm(num)
            d = pnorm(den)
            self._set_normalized(n, d)
        self._hashed = False

    cdef _set_normalized(self, tuple num, tuple den):
        cdef object g, cn, cd, c
        if not den:
            raise DivisionByZero("zero denominator in Q(q)")
        if not num:
            self.num = ()
            self.den = (1,)
            return
        if len(num) == 1 and len(den) == 1:
            g = _igcd(num[0], den[0])
            if den[0] < 0:
                g = -g
            self.num = (num[0] // g,)
            self.den = (den[0] // g,)
            return
        g = pgcd(num, den)
        if len(g) > 1 or g[0] != 1:
            num = pdivexact(num, g)
            den = pdivexact(den, g)
        cn = pcontent(num)
        cd = pcontent(den)
        c = _igcd(cn, cd)
        if den[len(den) - 1] < 0:
            c = -c
        if c != 1:
            num = tuple([x // c for x in num])
            den = tuple([x // c for x in den])
        self.num = num
        self.den = den

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
        return self.num == (<Scalar>other).num and self.den == (<Scalar>other).den

    def __hash__(self):
        if not self._hashed:
            self._hash = hash((self.num, self.den))
            self._hashed = True
        return self._hash

    def __add__(self, other):
        cdef Scalar s = <Scalar>self, o = <Scalar>other
        if not o.num:
            return s
        if not s.num:
            return o
        if s.den == o.den:
            return Scalar(padd(s.num, o.num), s.den)
        return Scalar(
            padd(pmul(s.num, o.den), pmul(o.num, s.den)),
            pmul(s.den, o.den),
        )

    def __sub__(self, other):
        cdef Scalar s = <Scalar>self, o = <Scalar>other
        if not o.num:
            return s
        if s.den == o.den:
            return Scalar(psub(s.num, o.num), s.den)
        return Scalar(
            psub(pmul(s.num, o.den), pmul(o.num, s.den)),
            pmul(s.den, o.den),
        )

    def __neg__(self):
        cdef Scalar s = <Scalar>self
        if not s.num:
            return s
        return Scalar(pneg(s.num), s.den, _raw=True)

    def __mul__(self, other):
        cdef Scalar s = <Scalar>self, o = <Scalar>other
        if not s.num or not o.num:
            return ZERO
        return Scalar(pmul(s.num, o.num), pmul(s.den, o.den))

    def __truediv__(self, other):
        cdef Scalar s = <Scalar>self, o = <Scalar>other
        if not o.num:
            raise DivisionByZero("division by zero in Q(q)")
        if not s.num:
            return ZERO
        return Scalar(pmul(s.num, o.den), pmul(s.den, o.num))

    def inv(self):
        cdef Scalar s = <Scalar>self
        if not s.num:
            raise DivisionByZero("inverting zero in Q(q)")
        return Scalar(s.den, s.num)

    def __pow__(self, k, mod):
        cdef Scalar r, b
        if k < 0:
            return (<Scalar>self).inv() ** (-k)
        r = ONE
        b = <Scalar>self
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
