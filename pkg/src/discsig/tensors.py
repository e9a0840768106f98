"""Truncated free tensor series over R^2 with exact sparse coefficients.

A series is a finite map from basis words (strings over the alphabet "1","2",
empty word = level 0) to :class:`~discsig.scalars.GaussianRational`.  Words
longer than the truncation level are discarded eagerly by the concatenation
product, so every value is a well-defined finite object.  Each series carries
a basis tag: "e" for the standard basis of R^2, "v" for the rotation
eigenbasis (see :mod:`discsig.eigenbasis`).  Mixing tags in a binary
operation is a usage error.

All values are immutable after construction; operations are pure functions.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .scalars import ONE, ZERO, GaussianRational

_BASES = ("e", "v")
_LETTERS = ("1", "2")

Scalarish = GaussianRational | Fraction | int


class InternalConsistencyError(RuntimeError):
    """A structural invariant of the pipeline failed; signals a bug, not bad input."""


def _word_key(word: str) -> tuple[int, str]:
    return (len(word), word)


class TensorSeries:
    """Sparse element of the tensor algebra truncated at a fixed level."""

    __slots__ = ("level", "basis", "_terms")

    def __init__(self, level: int, basis: str, terms=None):
        if level < 0:
            raise ValueError(f"truncation level must be >= 0, got {level}")
        if basis not in _BASES:
            raise ValueError(f"basis must be one of {_BASES}, got {basis!r}")
        clean: dict[str, GaussianRational] = {}
        if terms:
            for word, coeff in terms.items():
                if len(word) > level:
                    raise ValueError(f"word {word!r} exceeds truncation level {level}")
                if any(ch not in _LETTERS for ch in word):
                    raise ValueError(f"invalid word {word!r}: letters must be 1 or 2")
                c = GaussianRational.coerce(coeff)
                if c:
                    clean[word] = c
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TensorSeries is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, level: int, basis: str) -> "TensorSeries":
        return cls(level, basis)

    @classmethod
    def one(cls, level: int, basis: str) -> "TensorSeries":
        return cls(level, basis, {"": ONE})

    @classmethod
    def monomial(cls, level: int, basis: str, word: str, coeff=1) -> "TensorSeries":
        return cls(level, basis, {word: GaussianRational.coerce(coeff)})

    # -- inspection -----------------------------------------------------------

    def coefficient(self, word: str) -> GaussianRational:
        return self._terms.get(word, ZERO)

    def items(self):
        """Terms in canonical order: by level, then lexicographic."""
        return sorted(self._terms.items(), key=lambda kv: _word_key(kv[0]))

    def words(self):
        return sorted(self._terms, key=_word_key)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int | None:
        """Length of the shortest word present, or None for the zero series."""
        if not self._terms:
            return None
        return min(len(w) for w in self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TensorSeries):
            return NotImplemented
        return (
            self.level == other.level
            and self.basis == other.basis
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.level, self.basis, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"TensorSeries({self.level}, {self.basis!r}, 0)"
        parts = []
        for word, c in self.items()[:6]:
            parts.append(f"({c.re}{'+' if c.im >= 0 else ''}{c.im}i)*{word or '1'}")
        tail = " + ..." if len(self._terms) > 6 else ""
        return f"TensorSeries({self.level}, {self.basis!r}, {' + '.join(parts)}{tail})"

    # -- linear structure -------------------------------------------------------

    def _check_compatible(self, other: "TensorSeries"):
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis!r} vs {other.basis!r}")
        if self.level != other.level:
            raise ValueError(f"truncation mismatch: {self.level} vs {other.level}")

    def __add__(self, other):
        if not isinstance(other, TensorSeries):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for word, c in other._terms.items():
            s = terms.get(word, ZERO) + c
            if s:
                terms[word] = s
            else:
                terms.pop(word, None)
        return _raw(self.level, self.basis, terms)

    def __sub__(self, other):
        if not isinstance(other, TensorSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return _raw(self.level, self.basis, {w: -c for w, c in self._terms.items()})

    def scale(self, scalar: Scalarish) -> "TensorSeries":
        c = GaussianRational.coerce(scalar)
        if not c:
            return TensorSeries.zero(self.level, self.basis)
        return _raw(self.level, self.basis, {w: c * v for w, v in self._terms.items()})

    # -- multiplicative structure ------------------------------------------------

    def tensor(self, other: "TensorSeries") -> "TensorSeries":
        """Concatenation product, truncated at the shared level."""
        self._check_compatible(other)
        cap = self.level
        out: dict[str, GaussianRational] = {}
        for w1, c1 in self._terms.items():
            room = cap - len(w1)
            if room < 0:
                continue
            for w2, c2 in other._terms.items():
                if len(w2) > room:
                    continue
                w = w1 + w2
                s = out.get(w, ZERO) + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return _raw(cap, self.basis, out)

    def __mul__(self, other):
        if isinstance(other, TensorSeries):
            return self.tensor(other)
        if isinstance(other, (GaussianRational, Fraction, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (GaussianRational, Fraction, int)):
            return self.scale(other)
        return NotImplemented

    def project(self, i: int) -> "TensorSeries":
        """Restriction to words of length exactly i (the level-i component)."""
        if not 0 <= i <= self.level:
            raise ValueError(f"level {i} outside [0, {self.level}]")
        return _raw(
            self.level, self.basis, {w: c for w, c in self._terms.items() if len(w) == i}
        )

    def geometric_inverse(self) -> "TensorSeries":
        """Inverse of a unital series via the truncated geometric series.

        Requires the level-0 coefficient to equal 1, so the series is 1 - s
        with s of strictly positive degree and the inverse is sum of s^k.
        """
        if self.coefficient("") != ONE:
            raise ValueError("geometric inverse requires level-0 coefficient 1")
        one = TensorSeries.one(self.level, self.basis)
        s = one - self
        inv = one
        for _ in range(self.level):
            inv = one + s.tensor(inv)
        return inv

    def apply_letter_map(self, matrix) -> "TensorSeries":
        """Extend a linear map of R^2 multiplicatively over each word.

        ``matrix`` is a 2x2 nested sequence (rows) of GaussianRational-coercible
        entries; letter j maps to column j.  The empty word is fixed.
        """
        a11 = GaussianRational.coerce(matrix[0][0])
        a12 = GaussianRational.coerce(matrix[0][1])
        a21 = GaussianRational.coerce(matrix[1][0])
        a22 = GaussianRational.coerce(matrix[1][1])
        images = {
            "1": (("1", a11), ("2", a21)),
            "2": (("1", a12), ("2", a22)),
        }
        return substitute_letters(self, images, self.basis)

    # -- numeric / serialization ---------------------------------------------------

    def to_dense(self) -> list[np.ndarray]:
        """Per-level dense float arrays (shape (2,)*i); requires real coefficients."""
        out = [np.zeros((2,) * i) for i in range(self.level + 1)]
        for word, c in self._terms.items():
            idx = tuple(int(ch) - 1 for ch in word)
            out[len(word)][idx] = float(c.real_fraction())
        return out

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "level": self.level,
            "terms": [
                {"word": w, **c.to_json_pair()} for w, c in self.items()
            ],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "TensorSeries":
        terms = {
            t["word"]: GaussianRational.from_json_pair(t) for t in d["terms"]
        }
        return TensorSeries(d["level"], d["basis"], terms)


def _raw(level: int, basis: str, terms: dict[str, GaussianRational]) -> TensorSeries:
    """Construct without re-validating; terms must already be canonical."""
    out = object.__new__(TensorSeries)
    object.__setattr__(out, "level", level)
    object.__setattr__(out, "basis", basis)
    object.__setattr__(out, "_terms", terms)
    return out


def substitute_letters(series: TensorSeries, images: dict, new_basis: str) -> TensorSeries:
    """Rewrite each word letter by letter.

    ``images[letter]`` is an iterable of (letter, coefficient) pairs giving the
    image of that letter as a level-1 element; words expand multiplicatively.
    """
    out: dict[str, GaussianRational] = {}
    for word, coeff in series._terms.items():
        expanded = {"": coeff}
        for letter in word:
            nxt: dict[str, GaussianRational] = {}
            for prefix, c in expanded.items():
                for img_letter, img_coeff in images[letter]:
                    w = prefix + img_letter
                    s = nxt.get(w, ZERO) + c * img_coeff
                    if s:
                        nxt[w] = s
                    else:
                        nxt.pop(w, None)
            expanded = nxt
        for w, c in expanded.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return _raw(series.level, new_basis, out)
