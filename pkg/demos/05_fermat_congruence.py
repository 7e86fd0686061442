"""A combinatorial route to Fermat's little theorem.

For prime p, the number of p-bead necklaces (colorings of the p-cycle
up to rotation, k colors) is

    (1/p) ((k-1)^p + (p-1)(k-1)) - k + 1  ... once simplified,

and a count of anything is a non-negative integer.  Divisibility does
the rest: p must divide (k-1)^p - (k-1), which is the little theorem
in the variable k-1.  The fermat_check routine verifies both sides,
the congruence by modular arithmetic and the integrality by exact
rational evaluation.
"""

from orbichrom import cycle_graph, fermat_check, is_prime, orbital_rotation_closed
from orbichrom.oracle import count_coloring_orbits
from orbichrom.permgroup import rotation_group

p = 7
poly = orbital_rotation_closed(p)
print(f"necklace polynomial for p={p} beads:")
print(f"  values at k=1..6: {[int(poly(k)) for k in range(1, 7)]}")
print(f"  brute-force orbit counts: "
      f"{[count_coloring_orbits(cycle_graph(p), rotation_group(p), k) for k in range(1, 7)]}")

print()
print("residues (k-1)^p - (k-1) mod p, all must be 0:")
for k in range(1, 11):
    print(f"  k={k:>2}: {((k - 1) ** p - (k - 1)) % p}")

print()
print("fermat_check over the primes below 32, 50 color counts each:")
for q in range(2, 32):
    if is_prime(q):
        print(f"  p={q:>2}: {'ok' if fermat_check(q, 50) else 'FAILED'}")

print()
print("composites are rejected with a factor as a witness:")
try:
    fermat_check(21, 5)
except ValueError as exc:
    print(f"  {exc}")
