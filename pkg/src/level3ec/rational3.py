"""Arithmetic in Z[1/3]: rational numbers whose denominator is a power of 3.

A value is stored as ``num / 3**exp`` with ``exp >= 0``.  The representation
is canonical: when ``exp > 0`` the numerator is not divisible by 3, and zero
is always ``(0, 0)``.  Equality is therefore plain tuple equality.  All
integers are arbitrary precision and nothing here ever rounds.
"""

from .errors import NotAUnit


def _strip3(n):
    """Return (m, k) with n = m * 3**k and 3 not dividing m (m != 0)."""
    k = 0
    while n % 3 == 0:
        n //= 3
        k += 1
    return n, k


class Rational3:
    __slots__ = ("num", "exp")

    def __init__(self, num, exp=0):
        if exp < 0:
            raise ValueError("denominator exponent must be non-negative")
        if num == 0:
            exp = 0
        elif exp > 0:
            m, k = _strip3(num)
            drop = min(k, exp)
            num = m * 3 ** (k - drop)
            exp -= drop
        self.num = num
        self.exp = exp

    # -- ring protocol --------------------------------------------------

    def zero(self):
        return Rational3(0)

    def one(self):
        return Rational3(1)

    def from_int(self, n):
        return Rational3(n)

    def is_zero(self):
        return self.num == 0

    def is_unit(self):
        """Units of Z[1/3] are exactly +-3**k."""
        if self.num == 0:
            return False
        m, _ = _strip3(self.num)
        return m in (1, -1)

    def inverse(self):
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a unit of Z[1/3]")
        m, k = _strip3(self.num)
        # (m * 3**k / 3**exp)**-1 = m * 3**exp / 3**k
        return Rational3(m * 3 ** self.exp, k)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Rational3):
            return other
        if isinstance(other, int):
            return Rational3(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        e = max(self.exp, o.exp)
        return Rational3(
            self.num * 3 ** (e - self.exp) + o.num * 3 ** (e - o.exp), e
        )

    __radd__ = __add__

    def __neg__(self):
        return Rational3(-self.num, self.exp)

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
        # 3 never divides a canonical numerator, so no renormalisation
        # is needed unless one factor had exp == 0 and was divisible by 3.
        return Rational3(self.num * o.num, self.exp + o.exp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Rational3(self.num ** n, self.exp * n)

    def __bool__(self):
        return self.num != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.exp == o.exp

    def __hash__(self):
        return hash((self.num, self.exp))

    def __repr__(self):
        return f"Rational3({self.num}, {self.exp})"

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        if self.exp == 1:
            return f"{self.num}/3"
        return f"{self.num}/3^{self.exp}"


R3_ZERO = Rational3(0)
R3_ONE = Rational3(1)
