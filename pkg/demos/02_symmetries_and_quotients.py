"""Symmetries of the n-cycle and the quotient graphs they induce.

Every symmetry of the n-cycle is either a rotation r_m: v -> v+m or a
reflection.  Gluing together the vertices that a symmetry permutes in a
common cycle produces a quotient graph, and those quotients have a
strikingly regular structure:

  rotations   -> a cycle of length gcd(n, m), except that gcd = 2
                 collapses to a single edge (a path of length 1)
  reflections -> paths, picking up a loop at an end for each fixed
                 "axis" that runs through an edge midpoint
"""

from orbichrom import (
    automorphism_group,
    classify_shape,
    cycle_graph,
    quotient_graph,
    reflection_s,
    reflection_s_prime,
    rotation,
)


def describe(shape) -> str:
    if shape.kind == "cycle":
        return f"cycle of length {shape.length}"
    loops = sum(shape.end_loops)
    tail = "" if not loops else f" with {loops} end loop{'s' if loops > 1 else ''}"
    return f"path of length {shape.length}{tail}"


n = 12
g = cycle_graph(n)
print(f"the {n}-cycle has {automorphism_group(n).order()} symmetries")
print()

print("rotations:")
for m in range(n):
    shape = classify_shape(quotient_graph(g, rotation(n, m)))
    print(f"  r_{m:<2}  cycles of the permutation: {len(rotation(n, m).cycles()):>2}"
          f"   quotient: {describe(shape)}")

print()
print("vertex-axis reflections (axis through vertices):")
for m in range(n // 2):
    shape = classify_shape(quotient_graph(g, reflection_s(n, m)))
    print(f"  s_{m:<2}  quotient: {describe(shape)}")

print()
print("edge-axis reflections (axis through edge midpoints):")
for m in range(n // 2):
    shape = classify_shape(quotient_graph(g, reflection_s_prime(n, m)))
    print(f"  s'_{m:<2} quotient: {describe(shape)}")

print()
m = 5
print(f"odd cycles behave differently: every reflection of the {m}-cycle")
print("fixes exactly one vertex, so each quotient is a path with one end loop:")
for k in range(m):
    shape = classify_shape(quotient_graph(cycle_graph(m), reflection_s(m, k)))
    print(f"  s_{k}  quotient: {describe(shape)}")
