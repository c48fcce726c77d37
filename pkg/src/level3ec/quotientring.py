"""Finite quotient rings F_p[e_1,...,e_m]/(e_1^c1, ..., e_m^cm).

These are the infinitesimal neighbourhoods needed for the cuspidal
degeneration: the only relations are nilpotency bounds on the variables, so
reduction is exponent truncation and every representative is fully reduced
by construction.  The ring F_3[w,nu]/((w-1)^2, (nu-1)^3) is presented here
with e_0 = w - 1 and e_1 = nu - 1.
"""

from .errors import NotAUnit


class NilpotentQuotientRing:
    __slots__ = ("p", "caps", "names")

    def __init__(self, p, caps, names=None):
        self.p = p
        self.caps = tuple(caps)
        self.names = tuple(names) if names else tuple(
            f"e{i}" for i in range(len(caps))
        )

    def zero(self):
        return QuotElem(self, {})

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        n %= self.p
        if n == 0:
            return self.zero()
        return QuotElem(self, {(0,) * len(self.caps): n})

    def gen(self, i):
        e = [0] * len(self.caps)
        e[i] = 1
        return QuotElem(self, {tuple(e): 1})

    def nilpotency_bound(self):
        # any product of this many positive-degree monomials dies
        return sum(c - 1 for c in self.caps) + 1

    def __eq__(self, other):
        if not isinstance(other, NilpotentQuotientRing):
            return NotImplemented
        return self.p == other.p and self.caps == other.caps

    def __hash__(self):
        return hash((self.p, self.caps))

    def __repr__(self):
        gens = ", ".join(
            f"{n}^{c}" for n, c in zip(self.names, self.caps)
        )
        return f"F{self.p}[{','.join(self.names)}]/({gens})"


class QuotElem:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        clean = {}
        for e, c in terms.items():
            if any(x >= cap for x, cap in zip(e, ring.caps)):
                continue
            c %= ring.p
            if c:
                clean[e] = c
        self.terms = clean

    # -- ring protocol -------------------------------------------------------

    def zero(self):
        return self.ring.zero()

    def one(self):
        return self.ring.one()

    def from_int(self, n):
        return self.ring.from_int(n)

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * len(self.ring.caps), 0)

    def is_unit(self):
        return self.constant_term() != 0

    def is_nilpotent(self):
        return self.constant_term() == 0

    def nilpotency_index(self):
        """Least k >= 1 with self^k = 0, or None if self is a unit."""
        if self.is_unit():
            return None
        acc = self
        k = 1
        while not acc.is_zero():
            acc = acc * self
            k += 1
        return k

    def inverse(self):
        c = self.constant_term()
        if c == 0:
            raise NotAUnit("not a unit: zero constant term")
        cinv = pow(c, -1, self.ring.p)
        # self = c(1 + n): invert the nilpotent part by a finite geometric sum
        n = self * cinv - self.one()
        acc = self.one()
        power = self.one()
        for _ in range(self.ring.nilpotency_bound()):
            power = power * (-n)
            if power.is_zero():
                break
            acc = acc + power
        return acc * cinv

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuotElem):
            if other.ring != self.ring:
                raise ValueError("mixed quotient rings")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return QuotElem(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return QuotElem(self.ring, {e: -c for e, c in self.terms.items()})

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
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return QuotElem(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one()
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
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            mono = "*".join(
                f"{self.ring.names[i]}^{k}" if k > 1 else self.ring.names[i]
                for i, k in enumerate(e)
                if k
            )
            c = self.terms[e]
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return "+".join(parts)


def cuspidal_ring():
    """F_3[w,nu]/((w-1)^2, (nu-1)^3), presented with eps = w-1, dlt = nu-1."""
    return NilpotentQuotientRing(3, (2, 3), names=("eps", "dlt"))


def cuspidal_omega(ring):
    """w = 1 + eps; the relation 1 + w + w^2 = (w-1)^2 mod 3 becomes eps^2 = 0."""
    return ring.one() + ring.gen(0)


def cuspidal_nu(ring):
    return ring.one() + ring.gen(1)
