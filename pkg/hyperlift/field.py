# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""
Finite field arithmetic.

Coloring scalars live in prime fields F_q with q <= 251; field elements are
plain ints in [0, q).  GF(16) is only needed to generate one witness
coloring, so it is kept as a fixed table below rather than as a general
extension-field implementation.
"""
import functools

from hyperlift.exceptions import FieldError


MAX_FIELD_ORDER = 251

# x^4 + x + 1, elements of GF(16) are bit-polynomials in x.
GF16_MODULUS = 0b10011
GF16_GENERATOR = 0b0010


def is_prime(q):
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


class PrimeField(object):
    """The prime field F_q."""

    def __init__(self, q):
        q = int(q)
        if not 2 <= q <= MAX_FIELD_ORDER:
            raise FieldError("field order %d outside [2, %d]"
                             % (q, MAX_FIELD_ORDER))
        if not is_prime(q):
            raise FieldError("field order %d is not prime" % (q,))
        self.q = q

    def __repr__(self):
        return "PrimeField(%d)" % (self.q,)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def elements(self):
        return range(self.q)

    def element(self, value):
        """Check that value is an element of the field and return it."""
        value = int(value)
        if not 0 <= value < self.q:
            raise FieldError("%d is not an element of F_%d" % (value, self.q))
        return value

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def mul(self, a, b):
        return (a * b) % self.q

    def neg(self, a):
        return (-a) % self.q

    def inv(self, a):
        if a % self.q == 0:
            raise FieldError("zero has no inverse in F_%d" % (self.q,))
        return pow(a, self.q - 2, self.q)


@functools.lru_cache(maxsize=None)
def prime_field_ops(q):
    """Return the (shared) PrimeField handle for F_q."""
    return PrimeField(q)


def gf16_mul(a, b):
    """Multiply two GF(16) elements given as 4-bit ints."""
    if not (0 <= a < 16 and 0 <= b < 16):
        raise FieldError("GF(16) elements are 4-bit values")
    product = 0
    while b:
        if b & 1:
            product ^= a
        b >>= 1
        a <<= 1
        if a & 0b10000:
            a ^= GF16_MODULUS
    return product


def _gf16_tables():
    exp = []
    log = {}
    x = 1
    for i in range(15):
        exp.append(x)
        log[x] = i
        x = gf16_mul(x, GF16_GENERATOR)
    if len(log) != 15:
        raise FieldError("GF(16) generator %d is not primitive"
                         % (GF16_GENERATOR,))
    return tuple(exp), log


GF16_EXP, _GF16_LOG = _gf16_tables()


def gf16_log(a):
    """Discrete logarithm of a nonzero GF(16) element to the generator."""
    try:
        return _GF16_LOG[a]
    except KeyError:
        raise FieldError("%r has no logarithm in GF(16)" % (a,))


def gf16_order(a):
    """Multiplicative order of a nonzero GF(16) element."""
    if a == 0:
        raise FieldError("zero has no multiplicative order")
    order, x = 1, a
    while x != 1:
        x = gf16_mul(x, a)
        order += 1
    return order
