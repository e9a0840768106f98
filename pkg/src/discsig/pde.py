"""Brute-force oracle: solve the expected-signature PDE hierarchy directly.

The expected signature as a function of the start point satisfies, level by
level, Poisson problems on the unit disc:

    lap(u_n) = -(e1 x e1 + e2 x e2) x u_{n-2} - 2 sum_i e_i x d(u_{n-1})/dz_i

with u_0 = 1, u_1 = 0 and zero boundary data for every level >= 1.  Each
tensor component is a polynomial, so every solve is finite-dimensional: with
the ansatz u = (z1^2 + z2^2 - 1) q, matching coefficients gives a square
linear system over the rationals, solved here by fraction-free (Bareiss)
elimination.  The solver is not trusted: the Laplacian residual of every
solution is checked exactly.

This route never touches the eigenbasis recurrence, which makes exact
agreement of the two pipelines a meaningful end-to-end check.  Every
word-component solve is independent of its siblings at the same level; the
implementation is pure and single-threaded.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .poly import DISC_BOUNDARY, Poly2
from .tensors import InternalConsistencyError


def _monomials_up_to(degree: int) -> list[tuple[int, int]]:
    return [
        (d1, d - d1) for d in range(degree + 1) for d1 in range(d, -1, -1)
    ]


def _bareiss_solve(matrix: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Solve an integer square system exactly by fraction-free elimination."""
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    prev = 1
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if a[r][k]), None)
        if pivot_row is None:
            raise InternalConsistencyError("singular system in disc Poisson solve")
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        s = Fraction(a[k][n])
        for j in range(k + 1, n):
            s -= a[k][j] * x[j]
        x[k] = s / a[k][k]
    return x


def poisson_solve_disc(g: Poly2) -> Poly2:
    """The unique polynomial u with lap(u) = g on the disc and u = 0 on the circle.

    Writes u = (z1^2 + z2^2 - 1) q with deg q = deg g and solves the exact
    linear system for q's coefficients.  The result is verified against the
    Laplacian before returning.
    """
    if g.is_zero():
        return Poly2()
    m = g.degree()
    monos = _monomials_up_to(m)
    index = {mono: j for j, mono in enumerate(monos)}
    size = len(monos)

    # Column j holds the coefficients of lap((z1^2 + z2^2 - 1) * mono_j).
    columns = []
    for d1, d2 in monos:
        image = (DISC_BOUNDARY * Poly2({(d1, d2): Fraction(1)})).laplacian()
        col = [Fraction(0)] * size
        for key, c in image.items():
            col[index[key]] = c
        columns.append(col)

    rows = [[columns[j][i] for j in range(size)] for i in range(size)]
    rhs = [Fraction(g.coefficient(d1, d2)) for d1, d2 in monos]

    int_rows, int_rhs = [], []
    for row, b in zip(rows, rhs):
        denom = 1
        for c in row + [b]:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        int_rows.append([int(c * denom) for c in row])
        int_rhs.append(int(b * denom))

    coeffs = _bareiss_solve(int_rows, int_rhs)
    q = Poly2({mono: c for mono, c in zip(monos, coeffs)})
    u = DISC_BOUNDARY * q
    if u.laplacian() != g:
        raise InternalConsistencyError("disc Poisson solve residual is nonzero")
    return u


def pde_hierarchy(depth: int) -> dict[int, dict[str, Poly2]]:
    """Solve the hierarchy level by level, one Poisson problem per tensor word.

    Returns {level: {word: polynomial}} with zero polynomials omitted.  The
    right-hand side for word w at level n couples the trailing subwords:
    a diagonal first pair pulls in u_{n-2} and the leading letter selects the
    derivative direction applied to u_{n-1}.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    levels: dict[int, dict[str, Poly2]] = {0: {"": Poly2.constant(Fraction(1))}}
    if depth >= 1:
        levels[1] = {}
    for n in range(2, depth + 1):
        prev = levels[n - 1]
        prev2 = levels[n - 2]
        out: dict[str, Poly2] = {}
        for w in _words(n):
            rhs = Poly2()
            if w[0] == w[1]:
                tail = prev2.get(w[2:])
                if tail is not None:
                    rhs = rhs - tail
            head = prev.get(w[1:])
            if head is not None:
                rhs = rhs - head.derivative(int(w[0]) - 1).scale(Fraction(2))
            if not rhs.is_zero():
                out[w] = poisson_solve_disc(rhs)
        levels[n] = out
    return levels


def _words(length: int):
    if length == 0:
        yield ""
        return
    for w in _words(length - 1):
        yield w + "1"
        yield w + "2"
