"""Chromatic polynomials of small multigraphs, computed exactly.

The chromatic polynomial P(x) of a graph counts its proper colorings:
P(k) is the number of ways to color the vertices with k colors so that
every edge sees two different colors.  Parallel edges impose the same
constraint twice, so they never change the polynomial; a loop makes the
constraint unsatisfiable and forces the zero polynomial.
"""

from orbichrom import Multigraph, chromatic_polynomial, cycle_graph, path_graph
from orbichrom.cli import format_poly


def show(label: str, g: Multigraph) -> None:
    p = chromatic_polynomial(g)
    values = ", ".join(f"P({k})={p(k)}" for k in range(1, 5))
    print(f"{label:<28} {format_poly(p, ascii_only=True)}")
    print(f"{'':<28} {values}")


print("== trees ==")
show("single vertex", Multigraph(1))
show("one edge", Multigraph(2, [(0, 1)]))
show("path on 4 vertices", path_graph(4))
show("star with 3 leaves", Multigraph(4, [(0, 1), (0, 2), (0, 3)]))

print()
print("== cycles ==")
for n in (3, 4, 5):
    show(f"cycle of length {n}", cycle_graph(n))

print()
print("== multigraph features ==")
show("double edge", Multigraph(2, [(0, 1), (0, 1)]))
show("triangle plus chord copy", Multigraph(3, [(0, 1), (0, 1), (0, 2), (1, 2)]))
show("loop kills everything", Multigraph(2, [(0, 1), (1, 1)]))

print()
print("A doubled edge gives the same polynomial as a single one, and any")
print("loop collapses the polynomial to 0: no coloring can work.")
