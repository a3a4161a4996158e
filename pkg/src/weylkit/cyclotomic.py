"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A scalar is a polynomial residue modulo the m-th cyclotomic polynomial
with Fraction coefficients.  Mixed conductors are unified to the least
common multiple on demand; equality is coefficient equality after
unification.  Only the operations the character computations need are
provided: ring arithmetic, complex conjugation, and division by
rationals.
"""

from fractions import Fraction
from math import gcd

from .errors import PreconditionError

_cyclo_cache = {}


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1, 1) / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coeff = a[i + len(b) - 1] * inv
        if coeff:
            q[i] = coeff
            for j, y in enumerate(b):
                a[i + j] -= coeff * y
    return _poly_trim(q), _poly_trim(a)


def cyclotomic_polynomial(m):
    """Coefficient list of Phi_m, low degree first, exact."""
    if m in _cyclo_cache:
        return _cyclo_cache[m]
    poly = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            if rem:
                raise AssertionError("cyclotomic division left a remainder")
    _cyclo_cache[m] = poly
    return poly


def _reduce(coeffs, m):
    """Reduce a coefficient list modulo x^m - 1 and then Phi_m."""
    folded = [Fraction(0)] * m
    for k, c in enumerate(coeffs):
        folded[k % m] += c
    phi = cyclotomic_polynomial(m)
    _, rem = _poly_divmod(folded, phi)
    deg = len(phi) - 1
    rem = list(rem) + [Fraction(0)] * (deg - len(rem))
    return tuple(rem)


class Cyc:
    """An element of Q(zeta_m)."""

    __slots__ = ("m", "coeffs")
    __hash__ = None

    def __init__(self, m, coeffs):
        self.m = m
        deg = len(cyclotomic_polynomial(m)) - 1
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            coeffs = _reduce(coeffs, m)
        self.coeffs = coeffs

    @staticmethod
    def rational(x):
        return Cyc(1, (Fraction(x),))

    @staticmethod
    def zeta(m, k=1):
        return Cyc(m, _reduce([Fraction(0)] * (k % m) + [Fraction(1)], m))

    def promote(self, big):
        if big == self.m:
            return self
        if big % self.m != 0:
            raise PreconditionError("conductor must divide the target")
        step = big // self.m
        lifted = [Fraction(0)] * (len(self.coeffs) * step or 1)
        for k, c in enumerate(self.coeffs):
            lifted[k * step] += c
        return Cyc(big, _reduce(lifted, big))

    def _pair(self, other):
        if not isinstance(other, Cyc):
            other = Cyc.rational(other)
        m = self.m * other.m // gcd(self.m, other.m)
        return self.promote(m), other.promote(m)

    def __add__(self, other):
        a, b = self._pair(other)
        return Cyc(a.m, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.m, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._pair(other)
        return Cyc(a.m, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        return Cyc(a.m, _reduce(_poly_mul(list(a.coeffs), list(b.coeffs)), a.m))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyc):
            if not other.is_rational():
                raise PreconditionError("division only by rational scalars")
            other = other.to_fraction()
        inv = Fraction(1, 1) / Fraction(other)
        return Cyc(self.m, tuple(x * inv for x in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def conjugate(self):
        lifted = [Fraction(0)] * self.m if self.m > 1 else [Fraction(0)]
        for k, c in enumerate(self.coeffs):
            lifted[(self.m - k) % self.m] += c
        return Cyc(self.m, _reduce(lifted, self.m))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise PreconditionError("value is not rational")
        return self.coeffs[0]

    def render(self):
        """Human-readable polynomial in z{m}."""
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                var = f"z{self.m}" + (f"^{k}" if k > 1 else "")
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        return "+".join(parts).replace("+-", "-") or "0"

    def __repr__(self):
        return f"Cyc({self.render()})"
