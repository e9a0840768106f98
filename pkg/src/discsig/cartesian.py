"""Cartesian form of the expected signature and its numeric evaluation.

The graded radial table turns into polynomials in the start point
z = (z1, z2): a component with radial power n and grading index beta
contributes its tensor times

    (z1^2 + z2^2)^((n - |beta|)/2) * (z1 + sign(beta) i z2)^|beta|,

because the rotation taking the horizontal axis to z acts on a grading-beta
component as multiplication by exp(i beta theta).  Summed over the table the
imaginary parts cancel exactly, leaving one real-rational polynomial per
tensor word and level.  That exact polynomial field is the canonical output
artifact; pointwise evaluation and numeric rotation are thin float layers on
top of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .eigenbasis import to_e_basis
from .poly import Poly2, divmod_boundary
from .scalars import I, ONE, GaussianRational, fraction_to_str
from .tensors import InternalConsistencyError, TensorSeries

#: numeric slack for "on or inside the closed disc" checks
_DISC_EPS = 1e-9


class CartesianField:
    """Per level, a polynomial in (z1, z2) with level-homogeneous tensor coefficients.

    Stored monomial-major: ``levels[i][(d1, d2)][word] = Fraction``.  Zero
    coefficients, empty monomials and empty levels are dropped on
    construction, so equality of fields is equality of these dicts.
    """

    __slots__ = ("level", "levels", "_dense_cache")

    def __init__(self, level: int, levels: dict):
        clean: dict[int, dict[tuple[int, int], dict[str, Fraction]]] = {}
        for i, monos in levels.items():
            if not 0 <= i <= level:
                raise ValueError(f"tensor level {i} outside [0, {level}]")
            mclean = {}
            for mono, words in monos.items():
                wclean = {w: Fraction(c) for w, c in words.items() if c}
                for w in wclean:
                    if len(w) != i:
                        raise ValueError(f"word {w!r} stored at level {i}")
                if wclean:
                    mclean[mono] = wclean
            if mclean:
                clean[i] = mclean
        self.level = level
        self.levels = clean
        self._dense_cache = {}

    def monomials(self, i: int) -> dict:
        return self.levels.get(i, {})

    def word_polynomial(self, i: int, word: str) -> Poly2:
        """The scalar polynomial multiplying one tensor word."""
        terms = {}
        for mono, words in self.monomials(i).items():
            c = words.get(word)
            if c:
                terms[mono] = c
        return Poly2(terms)

    def __eq__(self, other):
        if not isinstance(other, CartesianField):
            return NotImplemented
        return self.level == other.level and self.levels == other.levels

    # -- numerics ---------------------------------------------------------------

    def _dense(self, i: int, mono: tuple[int, int]) -> np.ndarray:
        key = (i, mono)
        cached = self._dense_cache.get(key)
        if cached is None:
            arr = np.zeros((2,) * i)
            for word, c in self.levels[i][mono].items():
                arr[tuple(int(ch) - 1 for ch in word)] = float(c)
            cached = self._dense_cache[key] = arr
        return cached

    def evaluate(self, z) -> "PointEvaluation":
        x, y = float(z[0]), float(z[1])
        if x * x + y * y > 1.0 + _DISC_EPS:
            raise ValueError(f"point {(x, y)} lies outside the closed unit disc")
        values = []
        for i in range(self.level + 1):
            acc = np.zeros((2,) * i)
            for (d1, d2) in self.monomials(i):
                acc = acc + (x**d1) * (y**d2) * self._dense(i, (d1, d2))
            values.append(acc)
        return PointEvaluation((x, y), values)

    # -- serialization ------------------------------------------------------------

    def to_json_list(self) -> list:
        out = []
        for i in range(self.level + 1):
            monos = self.monomials(i)
            out.append(
                {
                    "level": i,
                    "monomials": [
                        {
                            "d1": d1,
                            "d2": d2,
                            "tensor": [
                                {"word": w, "coeff": fraction_to_str(c)}
                                for w, c in sorted(monos[(d1, d2)].items())
                            ],
                        }
                        for (d1, d2) in sorted(monos)
                    ],
                }
            )
        return out

    @staticmethod
    def from_json_list(items: list) -> "CartesianField":
        levels: dict = {}
        top = 0
        for entry in items:
            i = int(entry["level"])
            top = max(top, i)
            monos = {}
            for m in entry["monomials"]:
                monos[(int(m["d1"]), int(m["d2"]))] = {
                    t["word"]: Fraction(t["coeff"]) for t in m["tensor"]
                }
            if monos:
                levels[i] = monos
        return CartesianField(top, levels)


@dataclass(frozen=True)
class PointEvaluation:
    """Float value of the field at one start point, one dense tensor per level."""

    z: tuple[float, float]
    values: list

    def to_json_dict(self) -> dict:
        levels = []
        for i, arr in enumerate(self.values):
            terms = []
            for flat in range(2**i):
                word = _index_word(flat, i)
                terms.append(
                    {"word": word, "value": float(np.asarray(arr).flat[flat])}
                )
            levels.append({"level": i, "terms": terms})
        return {"z": [self.z[0], self.z[1]], "levels": levels}


def _index_word(flat: int, length: int) -> str:
    return "".join(
        "12"[(flat >> (length - 1 - pos)) & 1] for pos in range(length)
    )


def cartesianize(radial_table: dict, level: int) -> CartesianField:
    """Expand a graded radial table into the exact Cartesian field.

    Raises :class:`InternalConsistencyError` if any imaginary part survives
    the sum over grading indices.
    """
    acc: dict[int, dict[tuple[int, int], dict[str, GaussianRational]]] = {}
    for (n, beta), series in radial_table.items():
        e_series = to_e_basis(series)
        half = (n - abs(beta)) // 2
        radius_sq = Poly2({(2, 0): ONE, (0, 2): ONE})
        if beta > 0:
            phase = Poly2({(1, 0): ONE, (0, 1): I})
        else:
            phase = Poly2({(1, 0): ONE, (0, 1): -I})
        factor = radius_sq**half * phase ** abs(beta)
        for word, c in e_series.items():
            target = acc.setdefault(len(word), {})
            for mono, pc in factor.items():
                words = target.setdefault(mono, {})
                s = words.get(word, GaussianRational(0)) + c * pc
                if s:
                    words[word] = s
                else:
                    words.pop(word, None)
    real: dict = {}
    for i, monos in acc.items():
        for mono, words in monos.items():
            for word, c in words.items():
                if not c.is_real():
                    raise InternalConsistencyError(
                        f"imaginary residue at level {i}, monomial {mono}, word {word!r}: {c!r}"
                    )
                real.setdefault(i, {}).setdefault(mono, {})[word] = c.re
    return CartesianField(level, real)


def field_from_word_polynomials(levels: dict, level: int) -> CartesianField:
    """Adapter from {level: {word: Poly2}} (word-major) to a CartesianField."""
    out: dict = {}
    for i, words in levels.items():
        for word, poly in words.items():
            for mono, c in poly.items():
                out.setdefault(i, {}).setdefault(mono, {})[word] = c
    return CartesianField(level, out)


def diff_fields(a: CartesianField, b: CartesianField) -> list:
    """Exact per-level, per-monomial, per-word differences; empty means equal."""
    if a.level != b.level:
        raise ValueError(f"field level mismatch: {a.level} vs {b.level}")
    diffs = []
    for i in range(a.level + 1):
        monos = sorted(set(a.monomials(i)) | set(b.monomials(i)))
        for mono in monos:
            wa = a.monomials(i).get(mono, {})
            wb = b.monomials(i).get(mono, {})
            for word in sorted(set(wa) | set(wb)):
                ca, cb = wa.get(word), wb.get(word)
                if ca != cb:
                    diffs.append(
                        {
                            "level": i,
                            "d1": mono[0],
                            "d2": mono[1],
                            "word": word,
                            "left": None if ca is None else fraction_to_str(ca),
                            "right": None if cb is None else fraction_to_str(cb),
                        }
                    )
    return diffs


def rotate(theta: float, values) -> list:
    """Apply the rotation by theta in every tensor slot of dense level arrays."""
    c, s = np.cos(theta), np.sin(theta)
    rot = np.array([[c, -s], [s, c]])
    out = []
    for arr in values:
        t = np.asarray(arr, dtype=float)
        for axis in range(t.ndim):
            t = np.moveaxis(np.tensordot(rot, t, axes=(1, axis)), 0, axis)
        out.append(t)
    return out


def rotate_series(theta: float, series: TensorSeries) -> list:
    """Numeric slotwise rotation of an exact real series, as dense levels."""
    if series.basis != "e":
        raise ValueError("rotation acts on standard-basis series")
    return rotate(theta, series.to_dense())


def boundary_defects(field: CartesianField) -> list:
    """Remainders of (level polynomial - boundary value) modulo z1^2 + z2^2 - 1.

    The boundary value is 1 for level 0 (empty word) and 0 above; every
    remainder must be the zero polynomial for a correct field.  Returns a
    list of (level, word, remainder) triples for nonzero remainders.
    """
    bad = []
    for i in range(field.level + 1):
        words = {""} if i == 0 else set()
        for mono_words in field.monomials(i).values():
            words.update(mono_words)
        for word in sorted(words):
            poly = field.word_polynomial(i, word)
            if i == 0:
                poly = poly - Poly2.constant(Fraction(1))
            _, rem = divmod_boundary(poly)
            if not rem.is_zero():
                bad.append((i, word, rem))
    return bad
