"""The ring A = Z[1/3][w]/(1 + w + w^2) and its fraction field Q(w).

``w`` is a primitive cube root of unity; its inverse is the conjugate
``wbar = w^2 = -1 - w``.  Elements are stored as ``c0 + c1*w``.  ``EisElem``
has Z[1/3] coefficients and is the coefficient ring of everything built on
the base scheme; ``QOmega`` has arbitrary rational coefficients and is only
used where a genuine field is required (polynomial gcds, exact-field
classification inputs).

The key arithmetic fact used by ``is_unit``: 3 = -wbar*(1-w)^2, so after
inverting 3 the ramified prime 1-w becomes a unit and the unit group of A
consists exactly of the elements of norm +-3^k.
"""

from fractions import Fraction

from .errors import NotAUnit
from .rational3 import Rational3


class EisElem:
    __slots__ = ("c0", "c1")

    def __init__(self, c0, c1=0):
        if isinstance(c0, int):
            c0 = Rational3(c0)
        if isinstance(c1, int):
            c1 = Rational3(c1)
        self.c0 = c0
        self.c1 = c1

    # -- ring protocol --------------------------------------------------

    def zero(self):
        return EisElem(0, 0)

    def one(self):
        return EisElem(1, 0)

    def from_int(self, n):
        return EisElem(n, 0)

    def is_zero(self):
        return self.c0.is_zero() and self.c1.is_zero()

    def conj(self):
        """The ring involution w -> wbar = -1 - w."""
        return EisElem(self.c0 - self.c1, -self.c1)

    def norm(self):
        """norm(a + b*w) = a^2 - a*b + b^2, an element of Z[1/3]."""
        a, b = self.c0, self.c1
        return a * a - a * b + b * b

    def is_unit(self):
        if self.is_zero():
            return False
        return self.norm().is_unit()

    def inverse(self):
        n = self.norm()
        if not n.is_unit():
            raise NotAUnit(f"{self} is not a unit of A (norm {n})")
        ninv = n.inverse()
        c = self.conj()
        return EisElem(c.c0 * ninv, c.c1 * ninv)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, EisElem):
            return other
        if isinstance(other, (int, Rational3)):
            return EisElem(other * Rational3(1), Rational3(0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisElem(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return EisElem(-self.c0, -self.c1)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisElem(self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, b0, b1 = self.c0, self.c1, o.c0, o.c1
        # (a0 + a1 w)(b0 + b1 w) with w^2 = -1 - w
        cross = a1 * b1
        return EisElem(a0 * b0 - cross, a0 * b1 + a1 * b0 - cross)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        return hash((self.c0.num, self.c0.exp, self.c1.num, self.c1.exp))

    def __repr__(self):
        return f"EisElem({self.c0!r}, {self.c1!r})"

    def __str__(self):
        if self.c1.is_zero():
            return str(self.c0)
        if self.c0.is_zero():
            if self.c1 == Rational3(1):
                return "w"
            return f"({self.c1})*w"
        if self.c1 == Rational3(1):
            return f"{self.c0}+w"
        return f"{self.c0}+({self.c1})*w"


EIS_ZERO = EisElem(0, 0)
EIS_ONE = EisElem(1, 0)
OMEGA = EisElem(0, 1)
OMEGA_BAR = EisElem(-1, -1)


class QOmega:
    """Element of the field Q(w), stored as c0 + c1*w with Fraction parts."""

    __slots__ = ("c0", "c1")

    def __init__(self, c0=0, c1=0):
        self.c0 = Fraction(c0)
        self.c1 = Fraction(c1)

    @classmethod
    def from_eis(cls, e):
        return cls(
            Fraction(e.c0.num, 3 ** e.c0.exp), Fraction(e.c1.num, 3 ** e.c1.exp)
        )

    def to_eis(self):
        """Convert back to A; requires both denominators to be powers of 3."""
        parts = []
        for c in (self.c0, self.c1):
            d = c.denominator
            e = 0
            while d % 3 == 0:
                d //= 3
                e += 1
            if d != 1:
                return None
            parts.append(Rational3(c.numerator, e))
        return EisElem(parts[0], parts[1])

    def zero(self):
        return QOmega(0, 0)

    def one(self):
        return QOmega(1, 0)

    def from_int(self, n):
        return QOmega(n, 0)

    def is_zero(self):
        return self.c0 == 0 and self.c1 == 0

    def is_unit(self):
        return not self.is_zero()

    def conj(self):
        return QOmega(self.c0 - self.c1, -self.c1)

    def norm(self):
        a, b = self.c0, self.c1
        return a * a - a * b + b * b

    def inverse(self):
        if self.is_zero():
            raise NotAUnit("division by zero in Q(w)")
        n = self.norm()
        c = self.conj()
        return QOmega(c.c0 / n, c.c1 / n)

    def _coerce(self, other):
        if isinstance(other, QOmega):
            return other
        if isinstance(other, (int, Fraction)):
            return QOmega(other, 0)
        if isinstance(other, EisElem):
            return QOmega.from_eis(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QOmega(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return QOmega(-self.c0, -self.c1)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        cross = self.c1 * o.c1
        return QOmega(
            self.c0 * o.c0 - cross, self.c0 * o.c1 + self.c1 * o.c0 - cross
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = QOmega(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        return hash((self.c0, self.c1))

    def __repr__(self):
        return f"QOmega({self.c0}, {self.c1})"

    def __str__(self):
        if self.c1 == 0:
            return str(self.c0)
        if self.c0 == 0:
            return f"({self.c1})*w" if self.c1 != 1 else "w"
        if self.c1 == 1:
            return f"{self.c0}+w"
        return f"{self.c0}+({self.c1})*w"


QW_OMEGA = QOmega(0, 1)
