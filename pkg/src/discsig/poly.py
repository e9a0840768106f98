"""Sparse bivariate polynomials with exact coefficients.

Coefficients may be anything supporting ring arithmetic and truthiness
(``fractions.Fraction``, :class:`~discsig.scalars.GaussianRational`, ints);
zero coefficients are never stored.  Keys are exponent pairs (d1, d2).
"""

from __future__ import annotations


class Poly2:
    """Polynomial in two variables, represented as {(d1, d2): coefficient}."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (d1, d2), c in terms.items():
                if d1 < 0 or d2 < 0:
                    raise ValueError(f"negative exponent in {(d1, d2)}")
                if c:
                    clean[(d1, d2)] = c
        self._terms = clean

    @classmethod
    def constant(cls, c) -> "Poly2":
        return cls({(0, 0): c})

    @classmethod
    def variable(cls, axis: int, coeff=1) -> "Poly2":
        return cls({((1, 0) if axis == 0 else (0, 1)): coeff})

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, d1: int, d2: int):
        return self._terms.get((d1, d2), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(d1 + d2 for d1, d2 in self._terms)

    def __eq__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "Poly2(0)"
        bits = [f"({c})*z1^{d1}*z2^{d2}" for (d1, d2), c in self.items()]
        return "Poly2(" + " + ".join(bits) + ")"

    def __add__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        terms = dict(self._terms)
        for key, c in other._terms.items():
            s = terms.get(key, 0) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        out = Poly2.__new__(Poly2)
        out._terms = terms
        return out

    def __neg__(self):
        out = Poly2.__new__(Poly2)
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly2):
            return self.scale(other)
        out: dict = {}
        for (a1, a2), c1 in self._terms.items():
            for (b1, b2), c2 in other._terms.items():
                key = (a1 + b1, a2 + b2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        res = Poly2.__new__(Poly2)
        res._terms = out
        return res

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Poly2":
        if not c:
            return Poly2()
        out = Poly2.__new__(Poly2)
        out._terms = {k: c * v for k, v in self._terms.items()}
        return out

    def __pow__(self, n: int) -> "Poly2":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = Poly2.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self, axis: int) -> "Poly2":
        out: dict = {}
        for (d1, d2), c in self._terms.items():
            if axis == 0 and d1 > 0:
                out[(d1 - 1, d2)] = c * d1
            elif axis == 1 and d2 > 0:
                out[(d1, d2 - 1)] = c * d2
        return Poly2(out)

    def laplacian(self) -> "Poly2":
        return self.derivative(0).derivative(0) + self.derivative(1).derivative(1)

    def __call__(self, x, y):
        total = 0
        for (d1, d2), c in self._terms.items():
            total = total + c * x**d1 * y**d2
        return total


#: z1^2 + z2^2 - 1, the defining polynomial of the unit circle.
DISC_BOUNDARY = Poly2({(2, 0): 1, (0, 2): 1, (0, 0): -1})


def divmod_boundary(poly: Poly2) -> tuple[Poly2, Poly2]:
    """Exact division by z1^2 + z2^2 - 1.

    Reduces against the leading monomial z1^2 (lexicographic order), so the
    remainder contains no monomial with d1 >= 2; the remainder is zero iff
    the circle polynomial divides the input.
    """
    quotient: dict = {}
    rem = poly
    while True:
        cand = [(d1, d2) for (d1, d2) in rem._terms if d1 >= 2]
        if not cand:
            break
        d1, d2 = max(cand)
        c = rem._terms[(d1, d2)]
        quotient[(d1 - 2, d2)] = quotient.get((d1 - 2, d2), 0) + c
        rem = rem - Poly2({(d1 - 2, d2): c}) * DISC_BOUNDARY
    return Poly2(quotient), rem
