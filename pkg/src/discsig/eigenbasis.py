"""Rotation eigenbasis of R^2 and the associated grading of tensor words.

The quarter-turn rotation has complex eigenvectors
``v1 = (i, 1)`` and ``v2 = (-i, 1)`` with eigenvalues ``i`` and ``-i``.
In terms of the standard basis: ``e1 = -i(v1 - v2)/2``, ``e2 = (v1 + v2)/2``.
(Only the difference form is right for e1: ``v1 - v2 = (2i, 0)``, so
``-i(v1 - v2)/2 = (1, 0)``; a sum in its place would give ``-i(v1+v2)/2 =
(0, -i)``, which is not a real vector at all.)
A v-basis word with p letters "1" and q letters "2" is an eigenvector of the
slotwise rotation derivation with eigenvalue ``(p - q) i``; we call
``beta = p - q`` the word's grading index.  Since beta and the word length
always have the same parity, half of the (length, beta) slots are empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import I, ONE, GaussianRational
from .tensors import TensorSeries, _raw, substitute_letters

HALF = Fraction(1, 2)

# e1 -> -i/2 v1 + i/2 v2,  e2 -> 1/2 v1 + 1/2 v2
_E_TO_V = {
    "1": (("1", -I * HALF), ("2", I * HALF)),
    "2": (("1", GaussianRational(HALF)), ("2", GaussianRational(HALF))),
}
# v1 -> i e1 + e2,  v2 -> -i e1 + e2
_V_TO_E = {
    "1": (("1", I), ("2", ONE)),
    "2": (("1", -I), ("2", ONE)),
}

# Quarter-turn rotation in each basis: e1 -> e2, e2 -> -e1; diagonal on v-words.
QUARTER_TURN_E = ((0, -1), (1, 0))
QUARTER_TURN_V = ((I, 0), (0, -I))


def beta_index(word: str) -> int:
    """Grading index of a v-basis word: (# letters 1) - (# letters 2)."""
    ones = word.count("1")
    return 2 * ones - len(word)


def to_v_basis(series: TensorSeries) -> TensorSeries:
    if series.basis != "e":
        raise ValueError(f"expected e-basis series, got {series.basis!r}")
    return substitute_letters(series, _E_TO_V, "v")


def to_e_basis(series: TensorSeries) -> TensorSeries:
    if series.basis != "v":
        raise ValueError(f"expected v-basis series, got {series.basis!r}")
    return substitute_letters(series, _V_TO_E, "e")


def f_op(series: TensorSeries) -> TensorSeries:
    """The rotation derivation: quarter-turn applied in one slot at a time, summed.

    Diagonal on the eigenbasis (word w picks up the factor beta(w)*i), so a
    v-basis input is rescaled term by term; an e-basis input makes a round
    trip through the eigenbasis.
    """
    if series.basis == "e":
        return to_e_basis(f_op(to_v_basis(series)))
    terms = {}
    for word, c in series.items():
        b = beta_index(word)
        if b:
            terms[word] = c * (I * b)
    return _raw(series.level, "v", dict(terms))


def f_op_slotwise(series: TensorSeries) -> TensorSeries:
    """The same derivation by its defining slotwise formula (test oracle for f_op)."""
    matrix = QUARTER_TURN_E if series.basis == "e" else QUARTER_TURN_V
    col = {
        "1": (("1", GaussianRational.coerce(matrix[0][0])),
              ("2", GaussianRational.coerce(matrix[1][0]))),
        "2": (("1", GaussianRational.coerce(matrix[0][1])),
              ("2", GaussianRational.coerce(matrix[1][1]))),
    }
    terms: dict[str, GaussianRational] = {}
    for word, c in series.items():
        for slot in range(len(word)):
            for img_letter, img_coeff in col[word[slot]]:
                coeff = c * img_coeff
                if not coeff:
                    continue
                w = word[:slot] + img_letter + word[slot + 1:]
                terms[w] = terms.get(w, GaussianRational(0)) + coeff
    return TensorSeries(series.level, series.basis, terms)


@dataclass(frozen=True)
class EigenGradedSeries:
    """A tensor series split into its grading components (v-basis)."""

    level: int
    components: dict  # beta -> TensorSeries, zero components absent

    def component(self, beta: int) -> TensorSeries:
        return self.components.get(beta, TensorSeries.zero(self.level, "v"))

    def total(self) -> TensorSeries:
        out = TensorSeries.zero(self.level, "v")
        for part in self.components.values():
            out = out + part
        return out

    def to_json_list(self) -> list:
        return [
            {"beta": b, "series": self.components[b].to_json_dict()}
            for b in sorted(self.components)
        ]

    @staticmethod
    def from_json_list(level: int, items: list) -> "EigenGradedSeries":
        comps = {
            int(d["beta"]): TensorSeries.from_json_dict(d["series"]) for d in items
        }
        return EigenGradedSeries(level, comps)


def eigen_decompose(series: TensorSeries) -> EigenGradedSeries:
    """Partition a series by grading index; components sum back to the input."""
    if series.basis == "e":
        series = to_v_basis(series)
    buckets: dict[int, dict] = {}
    for word, c in series.items():
        buckets.setdefault(beta_index(word), {})[word] = c
    comps = {
        b: _raw(series.level, "v", terms) for b, terms in buckets.items()
    }
    return EigenGradedSeries(series.level, comps)


def eigen_project(series: TensorSeries, i: int, beta: int) -> TensorSeries:
    """Words of length exactly i with grading index beta (zero when out of range)."""
    if series.basis == "e":
        series = to_v_basis(series)
    if not 0 <= i <= series.level or abs(beta) > i or (i - beta) % 2:
        return TensorSeries.zero(series.level, "v")
    terms = {
        w: c
        for w, c in series.items()
        if len(w) == i and beta_index(w) == beta
    }
    return _raw(series.level, "v", terms)


def eigen_slices(series: TensorSeries) -> dict[tuple[int, int], TensorSeries]:
    """Group a v-basis series into its homogeneous (length, beta) pieces."""
    if series.basis != "v":
        raise ValueError("eigen_slices expects a v-basis series")
    buckets: dict[tuple[int, int], dict] = {}
    for word, c in series.items():
        buckets.setdefault((len(word), beta_index(word)), {})[word] = c
    return {
        key: _raw(series.level, "v", terms) for key, terms in buckets.items()
    }
