"""Small finite fields F_q, q = p^k with k <= 3.

Fields are explicit: an extension is F_p[t]/(m(t)) for a stored irreducible
monic polynomial m.  The canonical quadratic extension uses t^2 + t + 1
whenever p = 2 mod 3, so that the adjoined generator is itself a primitive
cube root of unity; for p = 1 mod 3 (where cube roots already exist) it
falls back to t^2 - n for the smallest non-residue n.  The canonical cubic
extension only exists for p = 2 (used for ordinary-fibre searches there).
"""

from functools import lru_cache

from .errors import NotAUnit


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FiniteField:
    __slots__ = ("p", "k", "modulus")

    def __init__(self, p, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        if modulus is None:
            modulus = (0, 1)  # the polynomial t, i.e. the prime field
        self.modulus = tuple(c % p for c in modulus)
        self.k = len(self.modulus) - 1
        if self.k < 1 or self.k > 3:
            raise ValueError("only extensions of degree <= 3 are supported")

    # -- canonical constructions -----------------------------------------

    @staticmethod
    @lru_cache(maxsize=None)
    def prime(p):
        return FiniteField(p)

    @staticmethod
    @lru_cache(maxsize=None)
    def quadratic(p):
        if p == 3:
            raise ValueError("3 is not invertible anywhere in this package")
        if p % 3 == 2:
            return FiniteField(p, (1, 1, 1))  # t^2 + t + 1, irreducible here
        n = next(
            a for a in range(2, p) if all(x * x % p != a for x in range(p))
        )
        return FiniteField(p, (-n % p, 0, 1))

    @staticmethod
    @lru_cache(maxsize=None)
    def cubic(p):
        if p != 2:
            raise ValueError("canonical cubic extension only provided for p=2")
        return FiniteField(2, (1, 1, 0, 1))  # t^3 + t + 1

    @property
    def q(self):
        return self.p ** self.k

    def zero(self):
        return FinElem(self, (0,) * self.k)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        return FinElem(self, (n % self.p,) + (0,) * (self.k - 1))

    def gen(self):
        """The adjoined generator t (equals 1 in the prime field)."""
        if self.k == 1:
            return self.one()
        return FinElem(self, (0, 1) + (0,) * (self.k - 2))

    def element(self, coeffs):
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) < self.k:
            coeffs += (0,) * (self.k - len(coeffs))
        return FinElem(self, coeffs[: self.k])

    def elements(self):
        """All q elements, in a fixed lexicographic order (by high coeffs)."""
        def rec(i):
            if i == 0:
                yield ()
                return
            for rest in rec(i - 1):
                for c in range(self.p):
                    yield rest + (c,)
        for coeffs in rec(self.k):
            yield FinElem(self, coeffs)

    def cube_roots_of_unity(self):
        return [x for x in self.elements() if x ** 3 == self.one()]

    def primitive_cube_roots(self):
        one = self.one()
        return [x for x in self.cube_roots_of_unity() if x != one]

    def omega(self):
        """A fixed primitive cube root of unity, if the field has one."""
        roots = self.primitive_cube_roots()
        return roots[0] if roots else None

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return self.p == other.p and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"F{self.p}"
        return f"F{self.q}"


class FinElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    # -- ring protocol ------------------------------------------------------

    def zero(self):
        return self.field.zero()

    def one(self):
        return self.field.one()

    def from_int(self, n):
        return self.field.from_int(n)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_unit(self):
        return not self.is_zero()

    def inverse(self):
        if self.is_zero():
            raise NotAUnit("division by zero in a finite field")
        return self ** (self.field.q - 2)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FinElem):
            if other.field != self.field:
                raise ValueError("mixed finite fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FinElem(
            self.field,
            tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FinElem(self.field, tuple(-a % p for a in self.coeffs))

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
        f = self.field
        p, k = f.p, f.k
        if k == 1:
            return FinElem(f, (self.coeffs[0] * o.coeffs[0] % p,))
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] += a * b
        # reduce modulo the monic modulus
        m = f.modulus
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * m[j]
            prod[i] = 0
        return FinElem(f, tuple(c % p for c in prod[:k]))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
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
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.coeffs))

    def __repr__(self):
        return f"FinElem({self.field!r}, {self.coeffs})"

    def __str__(self):
        if self.field.k == 1:
            return str(self.coeffs[0])
        names = {1: "w", 2: "w^2"}
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(names[i])
            else:
                parts.append(f"{c}*{names[i]}")
        return "+".join(parts) if parts else "0"
