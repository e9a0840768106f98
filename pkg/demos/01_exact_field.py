#!/usr/bin/env python3
"""Compute the exact expected-signature field and poke at it.

The expected signature of planar Brownian motion started at z, stopped on
first exit from the unit disc, is one polynomial in z per tensor word.  This
script builds those polynomials exactly (rational coefficients), prints the
low levels, and evaluates the field at a few points.
"""

from fractions import Fraction

from discsig import cartesianize, run_pipeline

LEVEL = 4

print(f"building the exact field at truncation level {LEVEL} ...")
data = run_pipeline(LEVEL)
field = cartesianize(data.radial_table, LEVEL)

print("\nLevel 0 (must be the constant 1):")
print("  ", field.monomials(0))

print("\nLevel 1 (must vanish identically: optional stopping):")
print("  ", field.monomials(1) or "zero")

print("\nLevel 2, word by word:")
for word in ("11", "12", "21", "22"):
    poly = field.word_polynomial(2, word)
    print(f"   E[word {word}] = {dict(poly.items()) or 0}")
print("   i.e. (1 - z1^2 - z2^2)/4 on the diagonal words: a quarter of the")
print("   expected exit time, which is (1 - |z|^2)/2.")

print("\nDegree-4 block of level 4 (the top-degree part), word 1111:")
poly = field.word_polynomial(4, "1111")
top = {m: c for m, c in poly.items() if m[0] + m[1] == 4}
print("  ", top)

print("\nEvaluating at z = (0.5, 0):")
ev = field.evaluate((0.5, 0.0))
print("   level 2:\n", ev.values[2])

print("\nEvaluating on the boundary (must be 1, 0, 0, ...):")
ev = field.evaluate((0.6, 0.8))
for i, arr in enumerate(ev.values):
    print(f"   level {i}: max |entry| = {abs(arr).max():.2e}")

print("\nRadial expansion along the horizontal axis (levels as r-polynomials):")
for n in sorted(data.radial_series):
    series = data.radial_coefficient_e(n)
    head = series.project(min(LEVEL, max(n, 2)))
    c = head.coefficient("11").re if not head.is_zero() else Fraction(0)
    print(f"   coefficient of r^{n}: word 11 at its lowest level -> {c}")
