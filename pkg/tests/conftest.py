"""Shared hypothesis strategies for small random multigraphs."""

from hypothesis import strategies as st

from orbichrom.multigraph import Multigraph


def multigraphs(max_vertices: int = 6, max_edges: int = 10, allow_loops: bool = True):
    """Strategy producing small multigraphs with parallels (and loops)."""

    def build(n: int):
        vertex = st.integers(min_value=0, max_value=n - 1)
        if allow_loops:
            edge = st.tuples(vertex, vertex)
        else:
            edge = st.tuples(vertex, vertex).filter(lambda e: e[0] != e[1])
        return st.lists(edge, min_size=0, max_size=max_edges).map(
            lambda es: Multigraph(n, es)
        )

    return st.integers(min_value=1, max_value=max_vertices).flatmap(build)
