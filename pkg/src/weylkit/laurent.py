"""Precision-tracked formal Laurent series over a prime field.

A scalar is a finite window of coefficients indexed by exponents of the
uniformizer e, together with a precision bound: coefficients at
exponents >= prec are unknown.  Exact elements (Laurent polynomials,
all higher coefficients zero) carry infinite precision.  Arithmetic is
pessimistic: any operation that cannot be decided at the tracked
precision raises rather than guessing, because the downstream
valuation arguments are parity-sensitive.

The valuation of zero is +infinity.
"""

import math
import re

from .errors import IndeterminateError, PreconditionError, UnsupportedRegimeError


def _check_prime(q):
    if q < 2 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise UnsupportedRegimeError(f"{q} is not prime; only prime base fields"
                                     " are supported")


class LaurentScalar:
    """An element of F_q((e)) known modulo e^prec."""

    __slots__ = ("q", "coeffs", "prec")
    __hash__ = None

    def __init__(self, q, coeffs, prec=math.inf):
        _check_prime(q)
        self.q = q
        self.prec = prec
        clean = {}
        for exp, c in coeffs.items():
            c %= q
            if c and (prec is math.inf or exp < prec):
                clean[exp] = c
        self.coeffs = clean
        if prec is not math.inf and not isinstance(prec, int):
            raise PreconditionError("precision must be an integer or infinite")

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero(q, prec=math.inf):
        return LaurentScalar(q, {}, prec)

    @staticmethod
    def one(q):
        return LaurentScalar(q, {0: 1})

    @staticmethod
    def const(q, c):
        return LaurentScalar(q, {0: c})

    @staticmethod
    def eps(q, n=1):
        return LaurentScalar(q, {n: 1})

    # -- predicates ----------------------------------------------------
    def is_exact(self):
        return self.prec is math.inf

    def is_zero_to_prec(self):
        return not self.coeffs

    def val_lower_bound(self):
        """A certified lower bound for the valuation."""
        if self.coeffs:
            return min(self.coeffs)
        return self.prec  # +inf for exact zero

    def valuation(self):
        """Exact valuation; +inf for exact zero; raises when the value is
        zero to precision but not known to be zero."""
        if self.coeffs:
            return min(self.coeffs)
        if self.is_exact():
            return math.inf
        raise IndeterminateError(
            "valuation undecidable: zero to precision "
            f"e^{self.prec}", partial=self.prec)

    # -- arithmetic ----------------------------------------------------
    def _compat(self, other):
        if not isinstance(other, LaurentScalar):
            other = LaurentScalar.const(self.q, other)
        if other.q != self.q:
            raise PreconditionError("mismatched base fields")
        return other

    def __add__(self, other):
        other = self._compat(other)
        prec = min(self.prec, other.prec)
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentScalar(self.q, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar(self.q, {e: -c for e, c in self.coeffs.items()},
                             self.prec)

    def __sub__(self, other):
        return self + (-self._compat(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._compat(other)
        if self.is_exact() and not self.coeffs:
            return LaurentScalar.zero(self.q)
        if other.is_exact() and not other.coeffs:
            return LaurentScalar.zero(self.q)
        # a = A + O(e^Pa), b = B + O(e^Pb):
        # ab = AB + O(e^(v(B)+Pa)) + O(e^(v(A)+Pb)) + O(e^(Pa+Pb)).
        prec = math.inf
        if other.prec is not math.inf:
            prec = min(prec, self.val_lower_bound() + other.prec)
        if self.prec is not math.inf:
            prec = min(prec, other.val_lower_bound() + self.prec)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentScalar(self.q, out, prec)

    __rmul__ = __mul__

    def inverse(self, prec=None):
        """Series inverse, known modulo e^prec."""
        v = self.valuation()
        if v is math.inf:
            raise PreconditionError("cannot invert zero")
        if prec is None:
            if self.prec is math.inf:
                raise PreconditionError("an exact element needs a target"
                                        " precision for inversion")
            prec = self.prec - 2 * v
        elif self.prec is not math.inf and prec > self.prec - 2 * v:
            raise IndeterminateError(
                "inverse not known to the requested precision",
                partial=self.prec - 2 * v)
        # self = e^v * u with u a unit; invert u modulo e^(prec + v).
        length = prec + v
        if length <= 0:
            raise IndeterminateError("no significant digits at this precision",
                                     partial=prec)
        u = [0] * length
        for exp, c in self.coeffs.items():
            if exp - v < length:
                u[exp - v] = c
        lead_inv = pow(u[0], -1, self.q)
        inv = [0] * length
        inv[0] = lead_inv
        for n in range(1, length):
            acc = sum(u[k] * inv[n - k] for k in range(1, n + 1)) % self.q
            inv[n] = (-acc * lead_inv) % self.q
        return LaurentScalar(self.q,
                             {k - v: c for k, c in enumerate(inv)}, prec)

    def __truediv__(self, other):
        other = self._compat(other)
        prec = None
        if self.prec is math.inf and other.prec is math.inf:
            quotient_exact = self._exact_divide(other)
            if quotient_exact is not None:
                return quotient_exact
            raise PreconditionError("exact quotient is not a Laurent"
                                    " polynomial; truncate first")
        return self * other.inverse(prec)

    def _exact_divide(self, other):
        """Exact polynomial division when it terminates, else None."""
        v_self = self.val_lower_bound()
        v_other = other.valuation()
        if v_other is math.inf:
            raise PreconditionError("cannot invert zero")
        if not self.coeffs:
            return LaurentScalar.zero(self.q)
        rem = dict(self.coeffs)
        out = {}
        lead_inv = pow(other.coeffs[v_other], -1, self.q)
        guard = len(self.coeffs) + len(other.coeffs) + 64
        while rem:
            if guard == 0:
                return None
            guard -= 1
            lo = min(rem)
            c = (rem[lo] * lead_inv) % self.q
            out[lo - v_other] = c
            for exp, oc in other.coeffs.items():
                k = lo - v_other + exp
                rem[k] = (rem.get(k, 0) - c * oc) % self.q
                if rem[k] == 0:
                    del rem[k]
        return LaurentScalar(self.q, out)

    def truncate(self, prec):
        return LaurentScalar(self.q, self.coeffs, min(self.prec, prec))

    def shift(self, n):
        """Multiply by e^n (exactly)."""
        prec = self.prec if self.prec is math.inf else self.prec + n
        return LaurentScalar(self.q, {e + n: c for e, c in self.coeffs.items()},
                             prec)

    def __eq__(self, other):
        """Equality on the common known window; raises if the values
        agree there but the windows differ and digits are left over."""
        other = self._compat(other)
        prec = min(self.prec, other.prec)
        for exp in set(self.coeffs) | set(other.coeffs):
            if exp >= prec:
                continue
            if self.coeffs.get(exp, 0) != other.coeffs.get(exp, 0):
                return False
        return True

    # -- text ------------------------------------------------------------
    def render(self):
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for exp in sorted(self.coeffs):
                c = self.coeffs[exp]
                if exp == 0:
                    parts.append(str(c))
                elif exp == 1:
                    parts.append(f"{c}e" if c != 1 else "e")
                else:
                    parts.append(f"{c}e{exp}" if c != 1 else f"e{exp}")
            body = "+".join(parts)
        if self.prec is math.inf:
            return body
        return f"{body}+O(e{self.prec})"

    def __repr__(self):
        return f"LaurentScalar({self.render()})"


_TERM = re.compile(r"^(?:(\d+)\*?)?(?:e(?:\^?(-?\d+))?)?$")


def parse_scalar(text, q, prec=math.inf):
    """Parse "c0+c1e+c2e2@v": polynomial in e shifted by e^v."""
    text = text.strip()
    shift = 0
    if "@" in text:
        text, _, v = text.rpartition("@")
        shift = int(v)
    coeffs = {}
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise PreconditionError(f"empty term in scalar {text!r}")
        m = _TERM.match(term)
        if not m or (m.group(1) is None and "e" not in term):
            raise PreconditionError(f"cannot parse scalar term {term!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if "e" in term:
            exp = int(m.group(2)) if m.group(2) is not None else 1
        else:
            exp = 0
        coeffs[exp + shift] = coeffs.get(exp + shift, 0) + coeff
    return LaurentScalar(q, coeffs, prec)


# -- 2x2 matrices ------------------------------------------------------

def mat_mul(A, B):
    return tuple(
        tuple(
            sum((A[i][k] * B[k][j] for k in range(2)),
                LaurentScalar.zero(A[0][0].q))
            for j in range(2))
        for i in range(2))


def mat_det(M):
    return M[0][0] * M[1][1] - M[0][1] * M[1][0]


def mat_inv(M, prec):
    det = mat_det(M)
    inv_det = det.inverse(prec)
    return (
        (M[1][1] * inv_det, (-M[0][1]) * inv_det),
        ((-M[1][0]) * inv_det, M[0][0] * inv_det),
    )


def mat_eq(A, B):
    return all(A[i][j] == B[i][j] for i in range(2) for j in range(2))


def identity_matrix(q):
    one = LaurentScalar.one(q)
    zero = LaurentScalar.zero(q)
    return ((one, zero), (zero, one))


def parse_matrix(text, q, prec=math.inf):
    """Parse "a,b;c,d" with scalar entries."""
    rows = text.strip().split(";")
    if len(rows) != 2:
        raise PreconditionError("matrix needs two rows")
    out = []
    for row in rows:
        entries = row.split(",")
        if len(entries) != 2:
            raise PreconditionError("matrix rows need two entries")
        out.append(tuple(parse_scalar(e, q, prec) for e in entries))
    return tuple(out)


def render_matrix(M):
    return ";".join(",".join(x.render() for x in row) for row in M)
