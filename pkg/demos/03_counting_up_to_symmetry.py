"""Counting colorings of a cycle up to symmetry: necklace counting.

Two proper colorings that differ by a rotation (or also a reflection)
of the cycle can be considered the same necklace.  Averaging the
chromatic polynomials of all quotient graphs over the symmetry group
yields a polynomial whose value at k is the number of distinct
necklaces with k colors; this script prints those polynomials and a
small necklace census.
"""

from orbichrom import (
    automorphism_group,
    cycle_graph,
    orbital_by_definition,
    orbital_full_closed,
    orbital_rotation_closed,
    rotation_group,
)
from orbichrom.cli import format_poly


print("colorings of the n-cycle up to rotation:")
for n in range(1, 9):
    p = orbital_rotation_closed(n)
    print(f"  n={n}:  {format_poly(p, ascii_only=True)}")

print()
print("also allowing reflections (flip the necklace over):")
for n in range(1, 9):
    p = orbital_full_closed(n)
    print(f"  n={n}:  {format_poly(p, ascii_only=True)}")

print()
print("necklace census for 3 colors:")
print(f"{'n':>3} {'up to rotation':>15} {'up to rotation+flip':>20}")
for n in range(1, 11):
    a = orbital_rotation_closed(n)(3)
    b = orbital_full_closed(n)(3)
    print(f"{n:>3} {str(a):>15} {str(b):>20}")

print()
n = 6
closed = orbital_full_closed(n)
averaged = orbital_by_definition(cycle_graph(n), automorphism_group(n))
print(f"closed form and group averaging agree for n={n}: {closed == averaged}")
averaged_rot = orbital_by_definition(cycle_graph(n), rotation_group(n))
print(f"same for the rotation group: {orbital_rotation_closed(n) == averaged_rot}")
