"""Direct decompositions driven by the primitive idempotents of the scalar ring.

A primitive idempotent ``e`` of the maximal ring of scalars, written as a
polynomial in the scalar generators, is turned into a pair of endomorphisms
``(E, E')`` by substituting the generator matrices.  For a bilinear map the
factor groups are the images ``E N1`` and ``E' N2``.  For an algebra the pair
fixes the diagonal image of ``R``, so every ``(E b_j, E' c_j)`` has a
preimage ``r_j`` in ``R`` and the residues of the ``r_j`` span one factor of
``R/Ann(R)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactlin import (
    FpAbelianGroup,
    Vector,
    hermite_basis,
    identity,
    lattice_contains,
    lattice_equal,
    lattice_intersect,
    solve_particular,
    transpose,
)
from .idempotents import IdempotentSet, primitive_idempotents
from .polyring import Poly
from .scalars import (
    BilinearMap,
    EndoPair,
    ScalarsError,
    ZAlgebra,
    annihilators,
    max_scalars_algebra,
    max_scalars_bilinear,
    quotient_presentation,
    r_squared_lattice,
    scalar_presentation,
)

__all__ = [
    "BilinearFactor",
    "AlgebraFactor",
    "DecompositionReport",
    "evaluate_idempotent",
    "decompose_bilinear",
    "decompose_algebra",
    "certify_indecomposable",
    "verify_decomposition",
    "factor_lattice",
]


@dataclass(frozen=True)
class BilinearFactor:
    """One factor ``f_i : e_i N1 x e_i N2 -> M_i`` of a bilinear map."""

    n1_gens: tuple
    n2_gens: tuple
    m_gens: tuple
    idempotent_index: int


@dataclass(frozen=True)
class AlgebraFactor:
    """Generators (in ``R^+`` coordinates) of one factor of ``R/Ann(R)``."""

    generators: tuple
    idempotent_index: int


@dataclass(frozen=True, eq=False)
class DecompositionReport:
    """Factors of ``R/Ann(R)`` with the data used to produce them."""

    factors: tuple
    indecomposable_certified: bool
    ann_basis: tuple
    idempotents: Optional[IdempotentSet] = None


def evaluate_idempotent(e: Poly, gens: Sequence[EndoPair]) -> EndoPair:
    """Substitute the pairs ``gens`` for the variables of ``e``.

    The constant term ``c`` contributes ``c`` times the identity.  The
    result is reduced row by row to canonical representatives.
    """
    if e.ring.nvars != len(gens):
        raise ValueError(f"polynomial has {e.ring.nvars} variables but {len(gens)} pairs were given")
    if not gens:
        raise ValueError("at least one generator pair is needed")
    N1, N2 = gens[0].N1, gens[0].N2
    one = EndoPair.identity(N1, N2)
    total = EndoPair.zero(N1, N2)
    powers: dict[tuple[int, int], EndoPair] = {}

    def power(i, k):
        if k == 0:
            return one
        key = (i, k)
        if key not in powers:
            powers[key] = (power(i, k - 1) * gens[i]).reduced()
        return powers[key]

    for exp, c in e.sorted_terms():
        term = one
        for i, k in enumerate(exp):
            if k:
                term = term * power(i, k)
        total = total + term.scale(int(c))
    return total.reduced()


def _prune(vectors: Sequence[Sequence[int]], N: FpAbelianGroup) -> list[Vector]:
    """A short generating set of ``span(vectors)`` modulo the relations of ``N``.

    Hermite rows are kept greedily while they enlarge the span of the rows
    already kept plus the relations.
    """
    n = N.ngens
    H = hermite_basis([list(v) for v in vectors] + [list(r) for r in N.relations], n)
    kept: list[Vector] = []
    span = hermite_basis(N.relations, n)
    for h in H:
        if not lattice_contains(span, h, hermite=True):
            kept.append(list(h))
            span = hermite_basis(span + [list(h)], n)
    return kept


def decompose_bilinear(f: BilinearMap, seed: int = 0) -> list[BilinearFactor]:
    """Canonical decomposition of a full non-degenerate bilinear map.

    Returns:
        One factor per primitive idempotent of the maximal ring of scalars,
        in the order of the idempotents.
    """
    pairs = max_scalars_bilinear(f)
    ring = scalar_presentation(pairs)
    idems = primitive_idempotents(ring.presentation, seed)
    out = []
    for idx, e in enumerate(idems):
        E = evaluate_idempotent(e, ring.generators)
        n1 = _prune(E.first, f.N1)
        n2 = _prune(E.second, f.N2)
        m = _prune([f.value(x, y) for x in n1 for y in n2] or [[0] * f.M.ngens], f.M)
        out.append(BilinearFactor(tuple(map(tuple, n1)), tuple(map(tuple, n2)),
                                  tuple(map(tuple, m)), idx))
    return out


def _diagonal_preimage(t1: Sequence[int], t2: Sequence[int], L1: list[Vector], L2: list[Vector]) -> Vector:
    """Some ``g`` with ``g = t1`` modulo ``L1`` and ``g = t2`` modulo ``L2``."""
    n = len(t1)
    diff = [b - a for a, b in zip(t1, t2)]
    cols = [list(v) for v in L1] + [[-c for c in v] for v in L2]
    if not cols:
        if any(diff):
            raise ScalarsError("idempotent does not fix the diagonal image")
        return list(t1)
    sol = solve_particular(transpose(cols, n), diff, len(cols))
    if sol is None:
        raise ScalarsError("idempotent does not fix the diagonal image")
    g = list(t1)
    for a, v in zip(sol, L1):
        if a:
            g = [x + a * y for x, y in zip(g, v)]
    return g


def decompose_algebra(R: ZAlgebra, seed: int = 0) -> DecompositionReport:
    """Direct decomposition of ``R/Ann(R)`` induced by the scalar ring.

    Each factor is reported by representatives in ``R^+`` whose residues
    generate it.  The decomposition is not lifted to ``R`` itself.
    """
    n = R.n
    left, right, both = annihilators(R)
    scal = max_scalars_algebra(R)
    idems = primitive_idempotents(scal.presentation, seed)
    Q = quotient_presentation(R, both)
    factors = []
    for idx, e in enumerate(idems):
        E = evaluate_idempotent(e, scal.generators)
        gens = [_diagonal_preimage(E.first[j], E.second[j], left, right) for j in range(n)]
        factors.append(AlgebraFactor(tuple(map(tuple, _prune(gens, Q))), idx))
    return DecompositionReport(tuple(factors), certify_indecomposable(R),
                               tuple(map(tuple, _ann_lattice(R))), idems)


def _ann_lattice(R: ZAlgebra) -> list[Vector]:
    """Two-sided annihilator plus the relations (they differ only for lenient data)."""
    _, _, both = annihilators(R)
    return hermite_basis(both + [list(r) for r in R.group.relations], R.n)


def certify_indecomposable(R: ZAlgebra) -> bool:
    """Sufficient test that the factors of :func:`decompose_algebra` are indecomposable.

    True when the left and right annihilators agree and ``R^2`` meets the
    annihilator only in the relation lattice.
    """
    n = R.n
    left, right, both = annihilators(R)
    if not lattice_equal(left, right, n):
        return False
    meet = lattice_intersect([r_squared_lattice(R), both], n)
    return all(R.group.is_zero(v) for v in meet)


def factor_lattice(gens: Sequence[Sequence[int]], ann: Sequence[Sequence[int]], n: int) -> list[Vector]:
    """Hermite basis of ``span(gens) + Ann`` in ``Z^n``."""
    return hermite_basis([list(g) for g in gens] + [list(a) for a in ann], n)


def verify_decomposition(R: ZAlgebra, report) -> bool:
    """Check that the factors form a direct product decomposition of ``R/Ann(R)``.

    Args:
        R: the algebra.
        report: a :class:`DecompositionReport` or a list of generator lists.

    Returns:
        True when the factors span ``R^+`` modulo ``Ann(R)``, meet pairwise in
        ``Ann(R)``, are closed under multiplication and multiply to zero
        across factors, all modulo ``Ann(R)``.
    """
    n = R.n
    ann = _ann_lattice(R)
    if isinstance(report, DecompositionReport):
        factor_gens = [f.generators for f in report.factors]
    else:
        factor_gens = [list(f) for f in report]
    lats = [factor_lattice(g, ann, n) for g in factor_gens]
    ann_h = hermite_basis(ann, n)

    def in_ann(v):
        return lattice_contains(ann_h, v, hermite=True)

    whole = hermite_basis([v for L in lats for v in L], n)
    if not lattice_equal(whole, identity(n), n):
        return False
    for i in range(len(lats)):
        for j in range(i + 1, len(lats)):
            if not all(in_ann(v) for v in lattice_intersect([lats[i], lats[j]], n)):
                return False
    for i, gi in enumerate(factor_gens):
        for j, gj in enumerate(factor_gens):
            for x in gi:
                for y in gj:
                    p = R.multiply(x, y)
                    if i == j:
                        if not lattice_contains(lats[i], p, hermite=True):
                            return False
                    elif not in_ann(p):
                        return False
    return True
