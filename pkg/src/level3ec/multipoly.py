"""Sparse multivariate polynomials over any coefficient ring.

Terms live in a dict mapping exponent tuples to nonzero coefficients.
Arithmetic is exact; an optional total-degree bound turns the same class
into a truncated multivariate power series (used for formal group laws).
"""


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if not c.is_zero():
                    self.terms[e] = c

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i, one):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): one})

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def constant_term(self, zero):
        return self.terms.get((0,) * self.nvars, zero)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        p = MPoly(self.nvars)
        p.terms = out
        return p

    def __neg__(self):
        p = MPoly(self.nvars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def mul(self, other, trunc=None):
        out = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            if trunc is not None and d1 > trunc:
                continue
            for e2, c2 in other.terms.items():
                if trunc is not None and d1 + sum(e2) > trunc:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                if e in out:
                    s = out[e] + prod
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
                elif not prod.is_zero():
                    out[e] = prod
        p = MPoly(self.nvars)
        p.terms = out
        return p

    def __mul__(self, other):
        if isinstance(other, MPoly):
            return self.mul(other)
        p = MPoly(self.nvars)
        for e, c in self.terms.items():
            v = c * other
            if not v.is_zero():
                p.terms[e] = v
        return p

    __rmul__ = __mul__

    def pow(self, n, trunc=None):
        if not self.terms:
            if n == 0:
                raise ValueError("0**0 for a zero polynomial without a ring")
            return MPoly(self.nvars)
        one = next(iter(self.terms.values())).one()
        result = MPoly.const(self.nvars, one)
        base = self
        while n:
            if n & 1:
                result = result.mul(base, trunc)
            base = base.mul(base, trunc) if n > 1 else base
            n >>= 1
        return result

    def truncate(self, maxdeg):
        p = MPoly(self.nvars)
        p.terms = {e: c for e, c in self.terms.items() if sum(e) <= maxdeg}
        return p

    def substitute(self, images, trunc=None):
        """Evaluate at images (one MPoly per variable), optionally truncated."""
        nvars = images[0].nvars
        out = MPoly(nvars)
        powers = [{0: None} for _ in range(self.nvars)]  # lazily filled

        def power(i, k):
            cache = powers[i]
            if k in cache and cache[k] is not None:
                return cache[k]
            if k == 0:
                one = next(iter(images[i].terms.values())).one()
                p = MPoly.const(nvars, one)
            else:
                p = power(i, k - 1).mul(images[i], trunc)
            cache[k] = p
            return p

        for e, c in self.terms.items():
            term = None
            for i, k in enumerate(e):
                if k == 0:
                    continue
                term = power(i, k) if term is None else term.mul(power(i, k), trunc)
            if term is None:
                add = MPoly.const(nvars, c)
            else:
                add = term * c
            out = out + add
        if trunc is not None:
            out = out.truncate(trunc)
        return out

    def evaluate(self, values):
        """Evaluate at ring elements; returns a ring element."""
        zero = values[0].zero()
        acc = zero
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * values[i]
            acc = acc + term
        return acc

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        names = "xyzuv"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            mono = "*".join(
                f"{names[i]}^{k}" if k > 1 else names[i]
                for i, k in enumerate(e)
                if k
            )
            c = self.terms[e]
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def mpoly_invert_unit(p, trunc):
    """Inverse of an MPoly with unit constant term, as a series mod degree trunc."""
    nvars = p.nvars
    zero_exp = (0,) * nvars
    c0 = p.terms.get(zero_exp)
    if c0 is None or not c0.is_unit():
        raise ValueError("constant term is not a unit")
    inv0 = c0.inverse()
    one = c0.one()
    # p = c0 (1 + n)  =>  p^-1 = c0^-1 * sum (-n)^k
    n = (p * inv0 - MPoly.const(nvars, one)).truncate(trunc)
    acc = MPoly.const(nvars, one)
    power = MPoly.const(nvars, one)
    k = 0
    while not power.is_zero() and k < trunc:
        power = power.mul(-n, trunc)
        acc = acc + power
        k += 1
    return acc * inv0
