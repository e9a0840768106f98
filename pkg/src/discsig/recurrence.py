"""Closed-form recurrence for the radial expansion of the expected signature.

The expected signature of Brownian motion started at radius r on the
horizontal axis, stopped on leaving the unit disc, is a power series
``sum_n a_n r^n`` whose tensor coefficients ``a_n`` split by grading index
into components ``a_n^beta`` (nonzero only for ``|beta| <= n`` with
``n - beta`` even).  Rescaling by an explicit factorial weight turns the
three-term recurrence in (n, beta) into a constant-coefficient one whose
generating function is the inverse of a fixed quadratic series; the unknown
boundary row (the entries with ``n = |beta|``) comes from inverting
``I + S`` for a degree-raising operator S, which reduces to a finite
alternating Neumann sum at any truncation.

Everything here is exact.  Division by ``n^2 - beta^2`` never occurs (it
would be singular on the boundary row); the table is produced by the
generating-function route and the original recurrence is kept as a residual
check in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .eigenbasis import (
    EigenGradedSeries,
    eigen_decompose,
    eigen_slices,
    to_e_basis,
    to_v_basis,
)
from .scalars import I
from .tensors import InternalConsistencyError, TensorSeries

HALF = Fraction(1, 2)


def _filtered(level: int, terms: dict) -> TensorSeries:
    return TensorSeries(level, "v", {w: c for w, c in terms.items() if len(w) <= level})


class SeriesKernel:
    """Fixed tensor-series constants driving the closed-form recurrence.

    ``sym``      the symmetric invariant (v1 x v2 + v2 x v1)/2, which equals
                 e1 x e1 + e2 x e2 in the standard basis;
    ``unit``     1 - i(v1 + v2) - sym, the quadratic series whose geometric
                 inverse generates the recurrence;
    ``unit_inv`` its truncated inverse.

    The three prefactor series unit_inv x (sym [+ i v2 | + i v1]) are
    pre-sliced into homogeneous (length, beta) pieces, since the recurrence
    only ever consumes single slices.
    """

    def __init__(self, level: int):
        if level < 0:
            raise ValueError("level must be >= 0")
        self.level = level
        self.sym = _filtered(level, {"12": HALF, "21": HALF})
        self.unit = _filtered(
            level, {"": 1, "1": -I, "2": -I, "12": -HALF, "21": -HALF}
        )
        self.unit_inv = self.unit.geometric_inverse()
        v1 = _filtered(level, {"1": I})
        v2 = _filtered(level, {"2": I})
        self._pref_slices = {
            0: eigen_slices(self.unit_inv.tensor(self.sym)),
            1: eigen_slices(self.unit_inv.tensor(self.sym + v2)),
            -1: eigen_slices(self.unit_inv.tensor(self.sym + v1)),
        }
        self._inv_slices = eigen_slices(self.unit_inv)
        self._zero = TensorSeries.zero(level, "v")

    def prefactor_slices(self, sign: int) -> dict:
        return self._pref_slices[sign]

    def prefactor_slice(self, sign: int, length: int, beta: int) -> TensorSeries:
        return self._pref_slices[sign].get((length, beta), self._zero)

    def unit_inv_slice(self, length: int, beta: int) -> TensorSeries:
        return self._inv_slices.get((length, beta), self._zero)


def boundary_weight(n: int, beta: int) -> Fraction:
    """Weight of the (n, beta) term inside the boundary operator.

    Defined for ``n >= |beta|`` with ``n - beta`` even:
    ``(-1)^((n-|beta|)/2) |beta|! 2^|beta| / ((n-beta)/2)! ((n+beta)/2)! 2^n``.
    """
    ab = abs(beta)
    if n < ab or (n - beta) % 2:
        raise ValueError(f"weight undefined for n={n}, beta={beta}")
    sign = -1 if ((n - ab) // 2) % 2 else 1
    return Fraction(
        sign * factorial(ab) * 2**ab,
        factorial((n - beta) // 2) * factorial((n + beta) // 2) * 2**n,
    )


def radial_weight(n: int, beta: int) -> Fraction:
    """Factorial rescaling linking the raw table to the radial coefficients.

    ``a_n^beta = (-1)^((n-beta)/2) / ((n-beta)/2)! ((n+beta)/2)! / 2^n  *  raw_n^beta``.
    """
    if n < abs(beta) or (n - beta) % 2:
        raise ValueError(f"weight undefined for n={n}, beta={beta}")
    sign = -1 if ((n - beta) // 2) % 2 else 1
    return Fraction(sign, factorial((n - beta) // 2) * factorial((n + beta) // 2) * 2**n)


def boundary_operator(series: TensorSeries, kernel: SeriesKernel) -> TensorSeries:
    """The degree-raising map S whose alternating Neumann sum solves the boundary row.

    For each grading component of the input (index k) and each homogeneous
    slice of the matching prefactor (length j, index gamma), the term
    contributes with weight ``boundary_weight(j + |k|, gamma + k)``.  Every
    prefactor slice has positive length, so the output's minimum degree
    strictly exceeds the input's; iterating from the unit series therefore
    reaches zero after at most level+1 applications.
    """
    if series.basis == "e":
        series = to_v_basis(series)
    level = kernel.level
    out = TensorSeries.zero(level, "v")
    for k, comp in eigen_decompose(series).components.items():
        low = comp.min_degree()
        sign = (k > 0) - (k < 0)
        for (length, gamma), piece in kernel.prefactor_slices(sign).items():
            if length + low > level:
                continue
            w = boundary_weight(length + abs(k), gamma + k)
            out = out + piece.tensor(comp).scale(w)
    return out


def boundary_coefficients(kernel: SeriesKernel) -> EigenGradedSeries:
    """Boundary row of the table, graded by index: the components of
    ``sum_l (-1)^l S^l(1)`` truncated at the kernel level."""
    one = TensorSeries.one(kernel.level, "v")
    total = one
    power = one
    sign = 1
    for _ in range(kernel.level + 1):
        power = boundary_operator(power, kernel)
        if power.is_zero():
            break
        sign = -sign
        total = total + power.scale(sign)
    if not power.is_zero():
        raise InternalConsistencyError(
            "alternating boundary series did not terminate; the boundary "
            "operator must raise minimum degree by at least one"
        )
    return eigen_decompose(total)


def raw_coefficient_table(
    kernel: SeriesKernel, boundary: EigenGradedSeries
) -> dict[tuple[int, int], TensorSeries]:
    """Full table of unscaled coefficients, keyed by (n, beta).

    Entry (n, beta) is the boundary element when ``n = |beta|`` plus, for each
    index k, the (length n - |k|, index beta - k) prefactor slice tensored
    with boundary component k.  Entries with ``n < |beta|`` or ``n - beta``
    odd vanish and are not stored.
    """
    level = kernel.level
    table: dict[tuple[int, int], TensorSeries] = {}
    for n in range(level + 1):
        for beta in range(-n, n + 1):
            if (n - beta) % 2:
                continue
            acc = TensorSeries.zero(level, "v")
            if n == abs(beta) and beta in boundary.components:
                acc = acc + boundary.components[beta]
            for k in range(-n, n + 1):
                comp = boundary.components.get(k)
                if comp is None:
                    continue
                piece = kernel.prefactor_slice((k > 0) - (k < 0), n - abs(k), beta - k)
                if piece.is_zero():
                    continue
                acc = acc + piece.tensor(comp)
            if not acc.is_zero():
                table[(n, beta)] = acc
    return table


def radial_coefficient_table(
    raw: dict[tuple[int, int], TensorSeries]
) -> dict[tuple[int, int], TensorSeries]:
    """Apply the factorial rescaling to the raw table."""
    out = {}
    for (n, beta), series in raw.items():
        scaled = series.scale(radial_weight(n, beta))
        if not scaled.is_zero():
            out[(n, beta)] = scaled
    return out


def assemble_radial_series(
    table: dict[tuple[int, int], TensorSeries], level: int
) -> dict[int, TensorSeries]:
    """Sum the graded table over beta into the radial coefficients a_n.

    Verifies two structural facts before returning: each a_n is supported on
    tensor levels >= n, and the coefficients sum to the unit series (the
    value of the expansion at radius 1).  Failure of either indicates an
    upstream bug, not bad input.
    """
    coeffs: dict[int, TensorSeries] = {}
    for (n, _), series in table.items():
        coeffs[n] = coeffs.get(n, TensorSeries.zero(level, "v")) + series
    coeffs = {n: s for n, s in coeffs.items() if not s.is_zero()}
    for n, s in coeffs.items():
        if s.min_degree() < n:
            raise InternalConsistencyError(
                f"radial coefficient {n} has support below tensor level {n}"
            )
    total = TensorSeries.zero(level, "v")
    for s in coeffs.values():
        total = total + s
    if total != TensorSeries.one(level, "v"):
        raise InternalConsistencyError("radial coefficients do not sum to 1 at r=1")
    return coeffs


def leading_coefficient(n: int, kernel: SeriesKernel) -> TensorSeries:
    """Coefficient of r^n in the level-n tensor component, in closed form.

    Equals 1 for n = 0 and 0 for n = 1; for n >= 2 it is
    ``2^-n sum_{m=1}^{n-1} (-1)^m / (m! (n-m)!)`` times the (length n-2,
    index n-2m) slice of the inverted kernel series, tensored with the
    symmetric invariant.  Returned in the standard basis.
    """
    if not 0 <= n <= kernel.level:
        raise ValueError(f"n={n} outside [0, {kernel.level}]")
    if n == 0:
        return TensorSeries.one(kernel.level, "e")
    if n == 1:
        return TensorSeries.zero(kernel.level, "e")
    acc = TensorSeries.zero(kernel.level, "v")
    for m in range(1, n):
        piece = kernel.unit_inv_slice(n - 2, n - 2 * m)
        if piece.is_zero():
            continue
        sign = -1 if m % 2 else 1
        acc = acc + piece.scale(Fraction(sign, factorial(m) * factorial(n - m)))
    return to_e_basis(acc.tensor(kernel.sym).scale(Fraction(1, 2**n)))


@dataclass(frozen=True)
class PipelineResult:
    """Everything the closed-form route produces at one truncation level."""

    level: int
    kernel: SeriesKernel
    boundary: EigenGradedSeries
    raw_table: dict
    radial_table: dict
    radial_series: dict

    def radial_coefficient(self, n: int) -> TensorSeries:
        return self.radial_series.get(n, TensorSeries.zero(self.level, "v"))

    def radial_coefficient_e(self, n: int) -> TensorSeries:
        return to_e_basis(self.radial_coefficient(n))


def run_pipeline(level: int) -> PipelineResult:
    """Compute boundary row, coefficient tables and radial series at one level."""
    kernel = SeriesKernel(level)
    boundary = boundary_coefficients(kernel)
    raw = raw_coefficient_table(kernel, boundary)
    radial = radial_coefficient_table(raw)
    series = assemble_radial_series(radial, level)
    return PipelineResult(level, kernel, boundary, raw, radial, series)
