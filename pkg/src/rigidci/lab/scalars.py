"""Exact scalars: rationals and the quadratic field Q(theta), theta**2 = -2.

``theta`` plays the role of ``i*sqrt(2)``.  Plain :class:`fractions.Fraction`
is used wherever no ``theta`` is needed; :class:`QTheta` interoperates with
ints and Fractions so that mixed expressions promote automatically.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

THETA_SQUARED = -2


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


class QTheta:
    """The element ``a + b*theta`` of Q(theta)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _frac(a)
        self.b = _frac(b)

    @staticmethod
    def coerce(x) -> "QTheta":
        if isinstance(x, QTheta):
            return x
        return QTheta(x, 0)

    def __add__(self, other):
        if not isinstance(other, (QTheta, int, Rational)):
            return NotImplemented
        o = QTheta.coerce(other)
        return QTheta(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QTheta(-self.a, -self.b)

    def __sub__(self, other):
        if not isinstance(other, (QTheta, int, Rational)):
            return NotImplemented
        o = QTheta.coerce(other)
        return QTheta(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return QTheta.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (QTheta, int, Rational)):
            return NotImplemented
        o = QTheta.coerce(other)
        return QTheta(
            self.a * o.a + THETA_SQUARED * self.b * o.b,
            self.a * o.b + self.b * o.a,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QTheta":
        """Galois conjugate ``a - b*theta``."""
        return QTheta(self.a, -self.b)

    def field_norm(self) -> Fraction:
        return self.a * self.a - THETA_SQUARED * self.b * self.b

    def inverse(self) -> "QTheta":
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("QTheta division by zero")
        return QTheta(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if not isinstance(other, (QTheta, int, Rational)):
            return NotImplemented
        return self * QTheta.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QTheta.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        if isinstance(other, QTheta):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        if self.b == 0:
            return f"QTheta({self.a})"
        return f"QTheta({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*theta"
        return f"{self.a}+{self.b}*theta"


THETA = QTheta(0, 1)
