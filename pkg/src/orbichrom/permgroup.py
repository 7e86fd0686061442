"""Permutations of {0,...,n-1} and the symmetry groups of cycle graphs.

Groups are stored as explicit element lists: every group here has at
most 2n elements and the orbit-averaging definition iterates over all of
them anyway.  Construction verifies the group axioms outright, which is
cheap at this scale and catches constructor mistakes immediately.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .multigraph import Multigraph

__all__ = [
    "Permutation",
    "PermGroup",
    "rotation",
    "reflection_s",
    "reflection_s_prime",
    "rotation_group",
    "automorphism_group",
    "trivial_group",
    "is_automorphism",
]


class Permutation:
    """A bijection of 0..n-1, stored as its image list."""

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"{list(images)!r} is not a bijection of 0..{len(imgs) - 1}")
        self._images = imgs

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, v: int) -> int:
        return self._images[v]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(v) = self(other(v))."""
        if self.degree != other.degree:
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation([self._images[other._images[v]] for v in range(self.degree)])

    __mul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for v, w in enumerate(self._images):
            inv[w] = v
        return Permutation(inv)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycle decomposition, fixed points included.

        Each cycle starts at its minimum element and cycles are sorted
        by those minima, so downstream vertex relabelings are stable.
        """
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            v = self._images[start]
            while v != start:
                cyc.append(v)
                seen[v] = True
                v = self._images[v]
            out.append(tuple(cyc))
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)!r})"

    # One-line interchange form: the image list separated by spaces.

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        try:
            images = [int(tok) for tok in text.split()]
        except ValueError:
            raise ValueError(f"permutation text must be whitespace-separated integers: {text!r}") from None
        return cls(images)

    def to_text(self) -> str:
        return " ".join(str(v) for v in self._images)


class PermGroup:
    """An explicitly listed permutation group on a common ground set."""

    def __init__(self, elements: Iterable[Permutation]):
        elems = tuple(elements)
        if not elems:
            raise ValueError("a permutation group needs at least the identity")
        degree = elems[0].degree
        if any(g.degree != degree for g in elems):
            raise ValueError("all group elements must share one degree")
        index = set(elems)
        if len(index) != len(elems):
            raise ValueError("group elements must be distinct")
        if Permutation.identity(degree) not in index:
            raise ValueError("group does not contain the identity")
        for g in elems:
            if g.inverse() not in index:
                raise ValueError(f"group is missing the inverse of {g!r}")
            for h in elems:
                if g * h not in index:
                    raise ValueError(f"group is not closed: {g!r} * {h!r} escapes")
        self._elements = elems
        self._degree = degree

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return self._elements

    def order(self) -> int:
        return len(self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in set(self._elements)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self._degree}, order={len(self._elements)})"


def rotation(n: int, m: int) -> Permutation:
    """v -> (v + m) mod n."""
    _check_shift(n, m)
    return Permutation([(v + m) % n for v in range(n)])


def reflection_s(n: int, m: int) -> Permutation:
    """v -> (2m - v) mod n, the mirror fixing vertex m."""
    _check_shift(n, m)
    return Permutation([(2 * m - v) % n for v in range(n)])


def reflection_s_prime(n: int, m: int) -> Permutation:
    """v -> (2m + 1 - v) mod n, the mirror through edge midpoints (even n)."""
    if n < 1 or n % 2:
        raise ValueError(f"edge reflections exist only for even n >= 2, got n={n}")
    if not 0 <= m < n // 2:
        raise ValueError(f"edge reflection index must satisfy 0 <= m < n/2, got m={m}")
    return Permutation([(2 * m + 1 - v) % n for v in range(n)])


def _check_shift(n: int, m: int) -> None:
    if n < 1:
        raise ValueError(f"degree must be >= 1, got n={n}")
    if not 0 <= m < n:
        raise ValueError(f"index must satisfy 0 <= m < n, got m={m}")


def rotation_group(n: int) -> PermGroup:
    """The n rotations of the n-cycle."""
    if n < 1:
        raise ValueError(f"rotation_group needs n >= 1, got {n}")
    return PermGroup([rotation(n, m) for m in range(n)])


def automorphism_group(n: int) -> PermGroup:
    """The full symmetry group of the n-cycle.

    For n = 1 and n = 2 this is just the rotations.  For n >= 3 it is
    the dihedral group of order 2n: all rotations plus, for odd n, the
    vertex-fixing reflections s_0..s_{n-1}, or, for even n, the
    vertex-fixing reflections s_0..s_{n/2-1} together with the
    edge-midpoint reflections s'_0..s'_{n/2-1}.
    """
    if n < 1:
        raise ValueError(f"automorphism_group needs n >= 1, got {n}")
    elems = [rotation(n, m) for m in range(n)]
    if n >= 3:
        if n % 2:
            elems += [reflection_s(n, m) for m in range(n)]
        else:
            elems += [reflection_s(n, m) for m in range(n // 2)]
            elems += [reflection_s_prime(n, m) for m in range(n // 2)]
    return PermGroup(elems)


def trivial_group(n: int) -> PermGroup:
    if n < 1:
        raise ValueError(f"trivial_group needs n >= 1, got {n}")
    return PermGroup([Permutation.identity(n)])


def is_automorphism(g: Multigraph, perm: Permutation) -> bool:
    """True when perm maps the edge multiset of g onto itself."""
    if perm.degree != g.n:
        raise ValueError(
            f"permutation degree {perm.degree} does not match vertex count {g.n}"
        )
    mapped = Counter(
        (perm(u), perm(v)) if perm(u) <= perm(v) else (perm(v), perm(u))
        for u, v in g.edges
    )
    return mapped == Counter(g.edges)
