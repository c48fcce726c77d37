"""Truncated power series over any coefficient ring.

Coefficients are stored densely as a tuple of exactly ``prec`` ring
elements; a series knows nothing past its precision.  Binary operations
truncate to the minimum precision of the operands.
"""

from .errors import NonUnitConstantTerm, NonzeroInnerConstant


class TruncSeries:
    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs, prec=None, zero=None):
        coeffs = list(coeffs)
        if zero is None:
            if not coeffs:
                raise ValueError("need a zero element for an empty series")
            zero = coeffs[0].zero()
        if prec is None:
            prec = len(coeffs)
        if len(coeffs) < prec:
            coeffs += [zero] * (prec - len(coeffs))
        self.coeffs = tuple(coeffs[:prec])
        self.prec = prec

    @classmethod
    def from_terms(cls, terms, prec, zero):
        """Series from a {exponent: coefficient} mapping."""
        coeffs = [zero] * prec
        for e, c in terms.items():
            if 0 <= e < prec:
                coeffs[e] = c
        return cls(coeffs, prec, zero)

    @classmethod
    def identity(cls, prec, one):
        """The series x."""
        return cls.from_terms({1: one}, prec, one.zero())

    # -- accessors ---------------------------------------------------------

    def coefficient(self, n):
        if n >= self.prec:
            raise IndexError(f"coefficient {n} beyond precision {self.prec}")
        return self.coeffs[n]

    __getitem__ = coefficient

    def support(self):
        return [n for n, c in enumerate(self.coeffs) if not c.is_zero()]

    def order(self):
        """Exponent of the lowest nonzero term, or None for 0 mod x^prec."""
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                return n
        return None

    def truncate(self, prec):
        return TruncSeries(self.coeffs[:prec], prec, self.coeffs[0].zero())

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def _zero(self):
        return self.coeffs[0].zero()

    def __add__(self, other):
        p = min(self.prec, other.prec)
        return TruncSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(p)], p
        )

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        p = min(self.prec, other.prec)
        return TruncSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(p)], p
        )

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.prec)
        p = min(self.prec, other.prec)
        zero = self._zero()
        out = [zero] * p
        for i, x in enumerate(self.coeffs[:p]):
            if x.is_zero():
                continue
            for j in range(p - i):
                y = other.coeffs[j]
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return TruncSeries(out, p)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = TruncSeries.from_terms({0: self._zero().one()}, self.prec, self._zero())
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        p = min(self.prec, other.prec)
        return self.coeffs[:p] == other.coeffs[:p]

    def __hash__(self):
        return hash((self.coeffs, self.prec))

    def invert(self):
        """Multiplicative inverse; needs a unit constant term."""
        c0 = self.coeffs[0]
        if not c0.is_unit():
            raise NonUnitConstantTerm(f"constant term {c0} is not a unit")
        inv0 = c0.inverse()
        out = [inv0]
        for n in range(1, self.prec):
            acc = self._zero()
            for k in range(1, n + 1):
                if not self.coeffs[k].is_zero():
                    acc = acc + self.coeffs[k] * out[n - k]
            out.append(-inv0 * acc)
        return TruncSeries(out, self.prec)

    def compose(self, inner):
        """self(inner); the inner series must have zero constant term."""
        if not inner.coeffs[0].is_zero():
            raise NonzeroInnerConstant("inner series has nonzero constant term")
        p = min(self.prec, inner.prec)
        zero = self._zero()
        acc = TruncSeries([zero], p, zero)
        for c in reversed(self.coeffs[:p]):
            acc = acc * inner.truncate(p)
            acc = TruncSeries(
                [acc.coeffs[0] + c] + list(acc.coeffs[1:]), p, zero
            )
        return acc

    def __repr__(self):
        terms = [
            f"({c})*x^{n}" for n, c in enumerate(self.coeffs) if not c.is_zero()
        ]
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(x^{self.prec})"
