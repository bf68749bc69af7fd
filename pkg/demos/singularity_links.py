#!/usr/bin/env python3
"""Invariants of the exotic-sphere link family and friends.

The polynomials u^{6k-1} + v^3 + z0^2 + z1^2 + z2^2 cut out homotopy
7-spheres for k = 1..28.  This script reads off their Milnor numbers,
weighted-projective data, spectra, and intersection lattices.
"""

from exotic_invariants import (
    BrieskornPham,
    a_lattice,
    canonical_type,
    milnor_family,
    milnor_lattice,
    milnor_number_and_basis,
    spectrum,
    weights_and_degree,
)

print("First few members of the link family")
print("------------------------------------")
for k in (1, 2, 3):
    bp = milnor_family(k)
    mu, _ = milnor_number_and_basis(bp)
    ell, weights = weights_and_degree(bp)
    kind, gorenstein = canonical_type(bp)
    print(
        f"k = {k}: exponents {bp}, mu = {mu:3d}, degree {ell:3d}, "
        f"weights {weights}, {kind.value}, gorenstein {gorenstein}"
    )

print()
print("Spectrum of the k = 1 member")
print("----------------------------")
sp = spectrum(milnor_family(1))
print("values:", " ".join(str(v) for v in sp.values))
print("least element:", sp.minimum, "(equals the sum of reciprocal exponents)")
print("greater than 1, so the quotient orbifold is Fano")

print()
print("The canonical-type trichotomy")
print("-----------------------------")
for exps in [(5, 3, 2, 2, 2), (3, 3, 3), (7, 3, 2)]:
    bp = BrieskornPham(exps)
    kind, gorenstein = canonical_type(bp)
    print(f"{bp}: {kind.value:12s} gorenstein parameter {gorenstein}")

print()
print("Intersection lattices in the distinguished basis")
print("------------------------------------------------")
print("a single exponent a gives the rank a-1 chain lattice:")
print("  exponent 4 ->", milnor_lattice(BrieskornPham.of(4)).gram.to_lists())
print("  chain gram  ->", a_lattice(3).to_lists())
print()
two = BrieskornPham.of(3, 3)
lat = milnor_lattice(two)
print(f"exponents {two}: index tuples {lat.index_set}")
for row in lat.gram.to_lists():
    print("   ", row)
