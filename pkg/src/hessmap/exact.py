"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_d).

Rationals are plain :class:`fractions.Fraction` values (integers are accepted
wherever a rational is).  :class:`Cyc` realises Q(zeta_d) as Q[t]/(Phi_d(t))
with dense coefficient vectors.
"""

from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

from . import univariate as up
from .errors import OrderMismatch

__all__ = [
    "Cyc",
    "as_rational",
    "canonical",
    "cyclotomic_polynomial",
    "euler_phi",
    "format_rational",
    "parse_rational",
    "scalar_from_json",
    "scalar_to_json",
]


def as_rational(x):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, Cyc):
        return x.to_rational()
    return Fraction(x)


def parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(x):
    return str(Fraction(x))


@lru_cache(maxsize=None)
def _cyclotomic(d):
    # Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = up.exact_div(num, list(_cyclotomic(e)))
    return tuple(int(c) for c in num)


def cyclotomic_polynomial(d):
    """Integer coefficients of Phi_d, lowest degree first."""
    if not isinstance(d, int) or d < 1:
        raise ValueError("cyclotomic order must be a positive integer")
    return list(_cyclotomic(d))


def euler_phi(d):
    return len(_cyclotomic(d)) - 1


def canonical(c):
    """Normal form of a scalar: Cyc with rational value demotes, integral Fractions become int."""
    if isinstance(c, Cyc):
        if not c.is_rational():
            return c
        c = c.coeffs[0]
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, _RationalABC):
        return canonical(Fraction(c))
    raise TypeError(f"unsupported scalar type {type(c).__name__}")


class Cyc:
    """An element of Q(zeta_d), stored as a residue modulo Phi_d."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        if order < 1:
            raise ValueError("order must be >= 1")
        phi = _cyclotomic(order)
        vec = up.trim([Fraction(c) for c in coeffs])
        if len(vec) >= len(phi):
            vec = up.rem(vec, list(phi))
        n = len(phi) - 1
        self.order = order
        self.coeffs = tuple(vec) + (Fraction(0),) * (n - len(vec))

    @classmethod
    def theta(cls, order, k=1):
        """The residue of t^k, i.e. a primitive order-th root of unity to the k."""
        return _theta_power(order, k % order)

    @classmethod
    def from_rational(cls, order, x):
        return cls(order, [Fraction(x)])

    # -- predicates -----------------------------------------------------
    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("cyclotomic number is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.order != self.order:
                raise OrderMismatch(f"Q(zeta_{self.order}) vs Q(zeta_{other.order})")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc(self.order, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyc(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyc(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc(self.order, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyc(self.order, up.mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        g, u, _ = up.ext_gcd(up.trim(list(self.coeffs)), list(_cyclotomic(self.order)))
        # Phi_d is irreducible, so the gcd with any nonzero residue is 1
        assert g == [1]
        return Cyc(self.order, u)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyc(self.order, [a / other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc(self.order, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyc):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"Cyc({self.order}, [{', '.join(format_rational(c) for c in self.coeffs)}])"

    def to_json(self):
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["order"]), [parse_rational(c) for c in obj["coeffs"]])


@lru_cache(maxsize=None)
def _theta_power(order, k):
    return Cyc(order, [0] * k + [1])


def scalar_to_json(c):
    if isinstance(c, Cyc):
        return c.to_json()
    return format_rational(c)


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return canonical(Cyc.from_json(obj))
    if isinstance(obj, (int, str)):
        return canonical(as_rational(obj))
    raise ValueError(f"bad scalar encoding: {obj!r}")
