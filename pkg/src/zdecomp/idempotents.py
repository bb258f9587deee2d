"""Primitive idempotents of a finite commutative algebra ``Z[x]/I``.

The spectrum of ``Z[x]/I`` splits into connected components, and each
component carries exactly one primitive idempotent.  Components are read off
a primary decomposition with primes; the idempotents then come from the
Chinese remainder theorem applied to the intersections of the clusters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .polyring import Ideal, Poly, one_representation
from .primdec import (
    GENERIC,
    DecompositionResult,
    PrimaryComponent,
    PrimdecError,
    intersect_all,
    primary_decomposition_with_primes,
)

__all__ = [
    "ComponentCluster",
    "IdempotentSet",
    "connected_components",
    "primitive_idempotents",
]


@dataclass(frozen=True)
class ComponentCluster:
    """Indices of the primary components lying over one connected component."""

    members: tuple


@dataclass(frozen=True, eq=False)
class IdempotentSet:
    """Representatives ``q_1..q_v`` of the primitive idempotents of ``Z[x]/I``."""

    elements: tuple
    modulus: Ideal
    clusters: tuple = ()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def check_axioms(self) -> bool:
        """Squares, pairwise products and the sum, all checked modulo ``I``."""
        I = self.modulus
        es = self.elements
        ring = I.ring
        if any(I.contains(e) for e in es):
            return False
        for i, e in enumerate(es):
            if not I.contains(e * e - e):
                return False
            for f in es[i + 1:]:
                if not I.contains(e * f):
                    return False
        if not es:
            return I.is_one()
        return I.contains(sum(es, ring(0)) - 1)

    def matches(self, expected: Sequence) -> bool:
        """Whether the residue classes agree with ``expected`` up to order."""
        I = self.modulus
        ring = I.ring
        rest = [ring(e) if not isinstance(e, Poly) else e for e in expected]
        if len(rest) != len(self.elements):
            return False
        for e in self.elements:
            hit = next((k for k, f in enumerate(rest) if I.contains(e - f)), None)
            if hit is None:
                return False
            rest.pop(hit)
        return True


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def connected_components(components) -> list[ComponentCluster]:
    """Group primary components by the connected component of the spectrum.

    Generic components seed the clusters, maximal components whose prime
    contains a generic prime are attached to it, generic clusters are merged
    while their primes are not comaximal, and the leftover maximal components
    become singletons.  The merge is done with union-find over the full
    comaximality graph, which reaches the same fixed point as a pairwise loop.

    Args:
        components: a ``DecompositionResult`` or a sequence of
            ``PrimaryComponent`` objects, each carrying its prime.

    Returns:
        Clusters ordered by their smallest member index.
    """
    comps: list[PrimaryComponent] = list(components)
    if any(c.prime is None for c in comps):
        raise PrimdecError("connected_components needs the prime of every component")
    generic = [i for i, c in enumerate(comps) if c.height_class == GENERIC]
    maximal = [i for i, c in enumerate(comps) if c.height_class != GENERIC]
    uf = _UnionFind(len(comps))
    for i in generic:
        for j in maximal:
            if comps[i].prime.issubset(comps[j].prime):
                uf.union(i, j)
    for a, i in enumerate(generic):
        for j in generic[a + 1:]:
            if uf.find(i) != uf.find(j) and not (comps[i].prime + comps[j].prime).is_one():
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(len(comps)):
        groups.setdefault(uf.find(i), []).append(i)
    return sorted((ComponentCluster(tuple(g)) for g in groups.values()),
                  key=lambda c: c.members[0])


def primitive_idempotents(I: Ideal, seed: int = 0) -> IdempotentSet:
    """The primitive idempotents of ``Z[x]/I``, as normal forms modulo ``I``.

    For every cluster ``C_i`` let ``J_i`` be the intersection of its primary
    ideals.  Writing ``1 = p_i + q_i`` with ``p_i`` in ``J_i`` and ``q_i`` in
    the intersection of the other ``J_j`` gives the idempotent ``q_i``.
    """
    result: DecompositionResult = primary_decomposition_with_primes(I, seed)
    ring = I.ring
    clusters = connected_components(result)
    if not clusters:
        return IdempotentSet((), I, ())
    if len(clusters) == 1:
        return IdempotentSet((ring(1),), I, tuple(clusters))
    Js = [intersect_all([result[k].primary for k in c.members], ring) for c in clusters]
    elements = []
    for i, Ji in enumerate(Js):
        others = intersect_all(Js[:i] + Js[i + 1:], ring)
        _, q = one_representation(Ji, others)
        elements.append(I.normal_form(q))
    return IdempotentSet(tuple(elements), I, tuple(clusters))
