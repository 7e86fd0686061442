"""Chromatic and orbital chromatic polynomials, exactly.

The chromatic polynomial is computed by the classical deletion plus
contraction recursion over exact integer coefficients.  The orbital
chromatic polynomial of a graph relative to a group of its automorphisms
averages, over the group, the chromatic polynomials of the quotient
graphs obtained by collapsing each cycle of an element's disjoint cycle
decomposition; at positive integer arguments it counts proper colorings
up to symmetry.

For cycle graphs the module also provides the closed forms: the familiar
(x-1)^n + (-1)^n (x-1) for the plain chromatic polynomial, and
totient-weighted divisor sums for the orbital versions under the
rotation group and the full (dihedral) symmetry group.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .multigraph import (
    Multigraph,
    contract_edge,
    contract_partition,
    delete_edge,
    simplify,
)
from .numtheory import divisors, is_prime, smallest_prime_factor, totient
from .permgroup import Permutation, PermGroup, is_automorphism
from .rationalpoly import RationalPoly, x_minus_one_pow

__all__ = [
    "chromatic_polynomial",
    "cycle_chromatic_closed",
    "path_chromatic_closed",
    "quotient_graph",
    "orbital_by_definition",
    "orbital_rotation_closed",
    "orbital_full_closed",
    "cycle_index_rotation_at",
    "fermat_check",
]

_X = RationalPoly([0, 1])


def chromatic_polynomial(g: Multigraph) -> RationalPoly:
    """Chromatic polynomial of a multigraph by deletion-contraction.

    Any loop kills the polynomial; parallel edges are collapsed at every
    step since they impose the same constraint as a single edge.  The
    recursion branches on the lexicographically smallest edge, which
    makes the computation deterministic (the result is provably
    order-independent, and the tests also check that).
    """
    return _chromatic_with_chooser(g, _smallest_edge)


def _smallest_edge(g: Multigraph) -> tuple[int, int]:
    return g.edges[0]


def _chromatic_with_chooser(
    g: Multigraph, choose_edge: Callable[[Multigraph], tuple[int, int]]
) -> RationalPoly:
    # The cache lives for one top-level call; repeated labeled subgraphs
    # dominate the recursion on path- and cycle-like inputs.
    cache: dict[Multigraph, RationalPoly] = {}

    def recurse(h: Multigraph) -> RationalPoly:
        if h.has_loop():
            return RationalPoly.zero()
        h = simplify(h)
        found = cache.get(h)
        if found is not None:
            return found
        if not h.edges:
            result = _X ** h.n
        else:
            e = choose_edge(h)
            result = recurse(delete_edge(h, e)) - recurse(contract_edge(h, e))
        cache[h] = result
        return result

    return recurse(g)


def cycle_chromatic_closed(n: int) -> RationalPoly:
    """(x-1)^n + (-1)^n (x-1): the cycle's chromatic polynomial."""
    if n < 1:
        raise ValueError(f"cycle length must be >= 1, got {n}")
    sign = -1 if n % 2 else 1
    return x_minus_one_pow(n) + sign * x_minus_one_pow(1)


def path_chromatic_closed(k_vertices: int) -> RationalPoly:
    """x (x-1)^(k-1): the chromatic polynomial of a path on k vertices."""
    if k_vertices < 1:
        raise ValueError(f"path needs at least one vertex, got {k_vertices}")
    return _X * x_minus_one_pow(k_vertices - 1)


def quotient_graph(g: Multigraph, perm: Permutation) -> Multigraph:
    """Collapse each cycle of perm to one vertex, then drop parallel edges.

    perm is any permutation of the vertices, automorphism or not; loops
    created by the collapse survive (one per vertex).
    """
    if perm.degree != g.n:
        raise ValueError(
            f"permutation degree {perm.degree} does not match vertex count {g.n}"
        )
    return simplify(contract_partition(g, perm.cycles()))


def orbital_by_definition(g: Multigraph, group: PermGroup) -> RationalPoly:
    """Average of the quotient chromatic polynomials over a group.

    At a positive integer x the result counts equivalence classes of
    proper x-colorings of g, where two colorings are equivalent when one
    is the other composed with a group element.  Requires every element
    to be an automorphism of g; anything else would make the average
    meaningless, so it is rejected rather than computed.
    """
    if group.degree != g.n:
        raise ValueError(
            f"group degree {group.degree} does not match vertex count {g.n}"
        )
    for perm in group:
        if not is_automorphism(g, perm):
            raise ValueError(f"{perm!r} is not an automorphism of {g!r}")
    total = RationalPoly.zero()
    for perm in group:
        total = total + chromatic_polynomial(quotient_graph(g, perm))
    return total * Fraction(1, group.order())


def _totient_weighted_sum(n: int) -> RationalPoly:
    """Sum over divisors d of n of totient(n/d) * (x-1)^d."""
    total = RationalPoly.zero()
    for d in divisors(n):
        total = total + totient(n // d) * x_minus_one_pow(d)
    return total


def orbital_rotation_closed(n: int) -> RationalPoly:
    """Orbital chromatic polynomial of the n-cycle under rotations.

    (1/n) * sum_{d | n} totient(n/d) (x-1)^d, with an extra -(x-1) when
    n is odd.
    """
    if n < 1:
        raise ValueError(f"cycle length must be >= 1, got {n}")
    result = _totient_weighted_sum(n) * Fraction(1, n)
    if n % 2:
        result = result - x_minus_one_pow(1)
    return result


def orbital_full_closed(n: int) -> RationalPoly:
    """Orbital chromatic polynomial of the n-cycle under its full symmetry group.

    Odd n:  (1/2n) * sum_{d | n} totient(n/d) (x-1)^d - x/2 + 1/2.
    Even n: (1/2n) * sum_{d | n} totient(n/d) (x-1)^d + (1/4) x (x-1)^(n/2).
    """
    if n < 1:
        raise ValueError(f"cycle length must be >= 1, got {n}")
    result = _totient_weighted_sum(n) * Fraction(1, 2 * n)
    if n % 2:
        result = result - Fraction(1, 2) * x_minus_one_pow(1)
    else:
        result = result + Fraction(1, 4) * _X * x_minus_one_pow(n // 2)
    return result


def cycle_index_rotation_at(n: int, x: RationalPoly) -> RationalPoly:
    """Cycle index of the rotation group with every variable set to x.

    Equals (1/n) * sum_{d | n} totient(n/d) x^d; substituting x-1 turns
    it into the even-n rotation orbital polynomial, which is what ties
    the closed forms to classical pattern counting.
    """
    if n < 1:
        raise ValueError(f"cycle index needs n >= 1, got {n}")
    total = RationalPoly.zero()
    for d in divisors(n):
        total = total + totient(n // d) * (x ** d)
    return total * Fraction(1, n)


def fermat_check(p: int, lambda_max: int) -> bool:
    """Check (k-1)^p = k-1 (mod p) for k = 0..lambda_max, two ways.

    The direct route verifies the congruence by modular arithmetic.  The
    structural route evaluates the rotation orbital polynomial of the
    p-cycle, (1/p)((k-1)^p + (p-1)(k-1)) - k + 1, and confirms it lands
    on a non-negative integer; because the polynomial counts orbits,
    its integrality forces the congruence.  Both routes must pass.
    """
    if not is_prime(p):
        if p >= 2:
            f = smallest_prime_factor(p)
            raise ValueError(f"{p} is not prime: {p} = {f} * {p // f}")
        raise ValueError(f"{p} is not prime")
    if lambda_max < 1:
        raise ValueError(f"lambda_max must be >= 1, got {lambda_max}")
    op = orbital_rotation_closed(p)
    for k in range(lambda_max + 1):
        if ((k - 1) ** p - (k - 1)) % p != 0:
            return False
        value = op(k)
        if value.denominator != 1 or value < 0:
            return False
    return True
