"""Maximal rings of scalars of bilinear maps and of finite Z-algebras.

Endomorphisms of a finitely presented group ``N`` with generators
``a_1, ..., a_n`` are integer matrices ``D`` read row-wise: ``phi(a_i) =
sum_j D[i][j] a_j``.  With this convention the image of an element with
coordinate row vector ``x`` is ``x D`` and the composite ``phi o psi`` has
matrix ``D_psi D_phi``.

A pair ``(phi_1, phi_2)`` acting on ``N1 x N2`` is flattened into the
coordinate vector made of the rows of ``D_1`` followed by the rows of ``D_2``.
All subsets computed here (symmetric pairs, their centre, the scalar ring)
are lattices in that coordinate space, and each is obtained from the
previous one by imposing one more homogeneous system over a finitely
presented group.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .exactlin import (
    FpAbelianGroup,
    Matrix,
    Vector,
    element_normal_form,
    hermite_basis,
    identity,
    lattice_contains,
    lattice_intersect,
    matmul,
    solve_system_over_group,
)
from .polyring import Ideal, Poly, PolyRing

__all__ = [
    "ScalarsError",
    "DegenerateMapError",
    "BilinearMap",
    "ZAlgebra",
    "EndoPair",
    "ScalarRing",
    "endo_solution_space",
    "scalar_lattice",
    "max_scalars_bilinear",
    "scalar_presentation",
    "annihilators",
    "quotient_presentation",
    "r_squared_presentation",
    "r_squared_lattice",
    "max_scalars_algebra",
]


class ScalarsError(ValueError):
    """Raised on malformed input or a violated precondition."""


class DegenerateMapError(ScalarsError):
    """The bilinear map pairs a nonzero element to zero against everything."""


def _vec_add(x, y, c=1):
    return [a + c * b for a, b in zip(x, y)]


def _combine(vectors: Sequence[Sequence[int]], coeffs: Sequence[int], dim: int) -> Vector:
    out = [0] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return out


# ---------------------------------------------------------------------------
# input types


@dataclass(frozen=True)
class BilinearMap:
    """A bilinear map ``f: N1 x N2 -> M`` given on generators.

    ``structure[i][j]`` is the coordinate vector of ``f(a_i, a'_j)`` in the
    generators of ``M``.  Well-definedness is checked on construction: every
    relation of ``N1`` (resp. ``N2``) must pair to zero in ``M``.
    """

    N1: FpAbelianGroup
    N2: FpAbelianGroup
    M: FpAbelianGroup
    structure: tuple
    check: bool = field(default=True, compare=False)

    def __post_init__(self):
        s = tuple(tuple(tuple(v) for v in row) for row in self.structure)
        object.__setattr__(self, "structure", s)
        n1, n2, m = self.N1.ngens, self.N2.ngens, self.M.ngens
        if len(s) != n1 or any(len(row) != n2 for row in s):
            raise ScalarsError("structure tensor does not match generator counts")
        if any(len(v) != m for row in s for v in row):
            raise ScalarsError("structure vectors must have one entry per generator of M")
        if self.check:
            bad = self.ill_defined()
            if bad:
                raise ScalarsError(f"bilinear map is not well defined: {bad[0]}")

    def ill_defined(self) -> list[str]:
        """Descriptions of relations that do not pair to zero."""
        out = []
        for r in self.N1.relations:
            for j in range(self.N2.ngens):
                if not self.M.is_zero(self.value(r, _unit(self.N2.ngens, j))):
                    out.append(f"f(rel {list(r)}, a'_{j + 1}) != 0")
        for r in self.N2.relations:
            for i in range(self.N1.ngens):
                if not self.M.is_zero(self.value(_unit(self.N1.ngens, i), r)):
                    out.append(f"f(a_{i + 1}, rel {list(r)}) != 0")
        return out

    def value(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        """``f(x, y)`` as an unreduced coordinate vector in ``M``."""
        out = [0] * self.M.ngens
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.structure[i]
            for j, yj in enumerate(y):
                if yj:
                    c = xi * yj
                    for k, s in enumerate(row[j]):
                        if s:
                            out[k] += c * s
        return out


def _unit(n: int, i: int) -> Vector:
    v = [0] * n
    v[i] = 1
    return v


@dataclass(frozen=True)
class ZAlgebra:
    """A finite Z-algebra: a finitely presented group with structure constants.

    ``structure[i][j]`` is the coordinate vector of ``a_i a_j``.  No
    associativity, commutativity or identity is assumed.  By default the
    multiplication must respect the relations; ``strict=False`` downgrades a
    violation to a warning so that published data with this defect can still
    be run literally.
    """

    group: FpAbelianGroup
    structure: tuple
    strict: bool = field(default=True, compare=False)

    def __post_init__(self):
        s = tuple(tuple(tuple(v) for v in row) for row in self.structure)
        object.__setattr__(self, "structure", s)
        n = self.group.ngens
        if len(s) != n or any(len(row) != n for row in s) or any(len(v) != n for row in s for v in row):
            raise ScalarsError("structure tensor must be n x n x n")
        bad = self.ill_defined()
        if bad:
            msg = f"multiplication is not well defined modulo the relations: {bad[0]}"
            if self.strict:
                raise ScalarsError(msg)
            warnings.warn(msg, stacklevel=2)

    @property
    def n(self) -> int:
        return self.group.ngens

    @classmethod
    def from_products(cls, group: FpAbelianGroup, products: dict, strict: bool = True) -> "ZAlgebra":
        """Build from a sparse ``{(i, j): vector}`` table (0-based, missing = 0)."""
        n = group.ngens
        s = [[list(products.get((i, j), [0] * n)) for j in range(n)] for i in range(n)]
        return cls(group, s, strict=strict)

    def ill_defined(self) -> list[str]:
        out = []
        n = self.n
        for r in self.group.relations:
            for j in range(n):
                e = _unit(n, j)
                if not self.group.is_zero(self.multiply(r, e)):
                    out.append(f"rel {list(r)} * a_{j + 1} != 0")
                if not self.group.is_zero(self.multiply(e, r)):
                    out.append(f"a_{j + 1} * rel {list(r)} != 0")
        return out

    def multiply(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        """Product of two elements, as an unreduced coordinate vector."""
        out = [0] * self.n
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.structure[i]
            for j, yj in enumerate(y):
                if yj:
                    c = xi * yj
                    for k, s in enumerate(row[j]):
                        if s:
                            out[k] += c * s
        return out

    def is_commutative(self) -> bool:
        n = self.n
        return all(self.group.equal(self.structure[i][j], self.structure[j][i])
                   for i in range(n) for j in range(i + 1, n))


# ---------------------------------------------------------------------------
# endomorphism pairs


@dataclass(frozen=True, eq=False)
class EndoPair:
    """A pair of endomorphisms of ``N1`` and ``N2`` given by row-convention matrices."""

    first: tuple
    second: tuple
    N1: FpAbelianGroup
    N2: FpAbelianGroup

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(tuple(r) for r in self.first))
        object.__setattr__(self, "second", tuple(tuple(r) for r in self.second))

    @classmethod
    def from_vector(cls, v: Sequence[int], N1: FpAbelianGroup, N2: FpAbelianGroup) -> "EndoPair":
        n1, n2 = N1.ngens, N2.ngens
        A = [list(v[i * n1:(i + 1) * n1]) for i in range(n1)]
        off = n1 * n1
        B = [list(v[off + i * n2:off + (i + 1) * n2]) for i in range(n2)]
        return cls(A, B, N1, N2)

    @classmethod
    def identity(cls, N1, N2) -> "EndoPair":
        return cls(identity(N1.ngens), identity(N2.ngens), N1, N2)

    @classmethod
    def zero(cls, N1, N2) -> "EndoPair":
        return cls([[0] * N1.ngens for _ in range(N1.ngens)],
                   [[0] * N2.ngens for _ in range(N2.ngens)], N1, N2)

    @property
    def D(self) -> Matrix:
        """The block-diagonal matrix acting on the concatenated generators."""
        n1, n2 = self.N1.ngens, self.N2.ngens
        out = [[0] * (n1 + n2) for _ in range(n1 + n2)]
        for i in range(n1):
            out[i][:n1] = self.first[i]
        for i in range(n2):
            out[n1 + i][n1:] = self.second[i]
        return out

    def vector(self) -> Vector:
        return [a for r in self.first for a in r] + [a for r in self.second for a in r]

    def apply_first(self, x: Sequence[int]) -> Vector:
        return _combine(self.first, x, self.N1.ngens)

    def apply_second(self, x: Sequence[int]) -> Vector:
        return _combine(self.second, x, self.N2.ngens)

    def __add__(self, other: "EndoPair") -> "EndoPair":
        return EndoPair([_vec_add(a, b) for a, b in zip(self.first, other.first)],
                        [_vec_add(a, b) for a, b in zip(self.second, other.second)], self.N1, self.N2)

    def __sub__(self, other: "EndoPair") -> "EndoPair":
        return self + other.scale(-1)

    def scale(self, c: int) -> "EndoPair":
        return EndoPair([[c * a for a in r] for r in self.first],
                        [[c * a for a in r] for r in self.second], self.N1, self.N2)

    def __mul__(self, other: "EndoPair") -> "EndoPair":
        """Composite ``self o other`` (apply ``other`` first)."""
        return EndoPair(matmul([list(r) for r in other.first], [list(r) for r in self.first]),
                        matmul([list(r) for r in other.second], [list(r) for r in self.second]),
                        self.N1, self.N2)

    def is_zero(self) -> bool:
        return (all(self.N1.is_zero(r) for r in self.first)
                and all(self.N2.is_zero(r) for r in self.second))

    def __eq__(self, other) -> bool:
        if not isinstance(other, EndoPair):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def reduced(self) -> "EndoPair":
        """Same pair with every image replaced by its canonical representative."""
        return EndoPair([element_normal_form(self.N1, r) for r in self.first],
                        [element_normal_form(self.N2, r) for r in self.second], self.N1, self.N2)

    def __repr__(self) -> str:
        return f"EndoPair(first={[list(r) for r in self.first]}, second={[list(r) for r in self.second]})"


# ---------------------------------------------------------------------------
# lattices of endomorphism pairs


def _restrict(basis: list[Vector], dim: int, systems) -> list[Vector]:
    """Sublattice of ``span(basis)`` satisfying the given systems.

    ``systems`` is an iterable of ``(group, equations)`` where each equation
    maps an unknown index (a coordinate of the ambient space) to its
    coefficient vector in ``group``.  The systems are pulled back to the
    coefficients of ``basis`` and solved there, which keeps the unknown count
    equal to the current rank.
    """
    for G, equations in systems:
        if not basis:
            return []
        pulled = []
        for eq in equations:
            new: dict[int, Vector] = {}
            for k, b in enumerate(basis):
                acc = None
                for i, v in eq.items():
                    c = b[i]
                    if c:
                        if acc is None:
                            acc = [c * a for a in v]
                        else:
                            for t, a in enumerate(v):
                                if a:
                                    acc[t] += c * a
                if acc is not None and any(acc):
                    new[k] = acc
            if new:
                pulled.append(new)
        if not pulled:
            continue
        sols = solve_system_over_group(G, pulled, len(basis))
        basis = hermite_basis([_combine(basis, s, dim) for s in sols], dim)
    return basis


def endo_solution_space(N1: FpAbelianGroup, N2: FpAbelianGroup) -> list[Vector]:
    """Basis of the coordinate lattice of ``End(N1) x End(N2)``.

    A matrix defines an endomorphism iff every relation of the group, applied
    to the images of the generators, vanishes.  The pair is flattened as
    described in the module docstring.
    """
    n1, n2 = N1.ngens, N2.ngens
    dim = n1 * n1 + n2 * n2
    eqs1 = []
    for r in N1.relations:
        eq = {}
        for i, ri in enumerate(r):
            if ri:
                for j in range(n1):
                    eq[i * n1 + j] = [ri if t == j else 0 for t in range(n1)]
        eqs1.append(eq)
    off = n1 * n1
    eqs2 = []
    for r in N2.relations:
        eq = {}
        for i, ri in enumerate(r):
            if ri:
                for j in range(n2):
                    eq[off + i * n2 + j] = [ri if t == j else 0 for t in range(n2)]
        eqs2.append(eq)
    basis = [_unit(dim, k) for k in range(dim)]
    # blocks are independent, so each system only touches its own unknowns
    return _restrict(basis, dim, [(N1, eqs1), (N2, eqs2)])


def _check_nondegenerate(f: BilinearMap) -> None:
    n1, n2 = f.N1.ngens, f.N2.ngens
    left = solve_system_over_group(
        f.M, [{i: list(f.structure[i][j]) for i in range(n1)} for j in range(n2)], n1)
    for x in left:
        if not f.N1.is_zero(x):
            raise DegenerateMapError(f"nonzero element {x} of N1 pairs to zero with N2")
    right = solve_system_over_group(
        f.M, [{j: list(f.structure[i][j]) for j in range(n2)} for i in range(n1)], n2)
    for y in right:
        if not f.N2.is_zero(y):
            raise DegenerateMapError(f"nonzero element {y} of N2 pairs to zero with N1")


def _symmetric_equations(f: BilinearMap) -> list[dict]:
    # f(phi_1 a_k, a'_l) - f(a_k, phi_2 a'_l) = 0
    n1, n2 = f.N1.ngens, f.N2.ngens
    off = n1 * n1
    eqs = []
    for k in range(n1):
        for l in range(n2):
            eq: dict[int, Vector] = {}
            for i in range(n1):
                eq[k * n1 + i] = list(f.structure[i][l])
            for j in range(n2):
                eq[off + l * n2 + j] = [-a for a in f.structure[k][j]]
            eqs.append(eq)
    return eqs


def _central_equations(f: BilinearMap, sym: list[Vector]) -> list[dict]:
    # f(phi_1 a_k, psi_2 a'_l) - f(psi_1 a_k, phi_2 a'_l) = 0 for psi in sym
    n1, n2 = f.N1.ngens, f.N2.ngens
    off = n1 * n1
    eqs = []
    for delta in sym:
        psi = EndoPair.from_vector(delta, f.N1, f.N2)
        for k in range(n1):
            psi1k = psi.first[k]
            for l in range(n2):
                psi2l = psi.second[l]
                eq: dict[int, Vector] = {}
                for i in range(n1):
                    v = f.value(_unit(n1, i), psi2l)
                    if any(v):
                        eq[k * n1 + i] = v
                for j in range(n2):
                    v = f.value(psi1k, _unit(n2, j))
                    if any(v):
                        eq[off + l * n2 + j] = [-a for a in v]
                if eq:
                    eqs.append(eq)
    return eqs


def _action_equations(f: BilinearMap) -> list[dict]:
    # sum_ij z_ij f(a_i, a'_j) = 0  must imply  sum_ij z_ij f(phi_1 a_i, a'_j) = 0
    n1, n2 = f.N1.ngens, f.N2.ngens
    eq0 = {i * n2 + j: list(f.structure[i][j]) for i in range(n1) for j in range(n2)}
    zs = solve_system_over_group(f.M, [eq0], n1 * n2)
    eqs = []
    for z in zs:
        eq: dict[int, Vector] = {}
        for i in range(n1):
            for l in range(n1):
                acc = [0] * f.M.ngens
                for j in range(n2):
                    c = z[i * n2 + j]
                    if c:
                        acc = _vec_add(acc, f.structure[l][j], c)
                if any(acc):
                    eq[i * n1 + l] = acc
        if eq:
            eqs.append(eq)
    return eqs


def scalar_lattice(f: BilinearMap, check_degenerate: bool = True) -> list[Vector]:
    """Full coordinate lattice of the maximal ring of scalars of ``f``.

    The lattice contains every coordinate vector representing the zero pair;
    :func:`max_scalars_bilinear` extracts a small generating set from it.
    """
    if check_degenerate:
        _check_nondegenerate(f)
    n1, n2 = f.N1.ngens, f.N2.ngens
    dim = n1 * n1 + n2 * n2
    L = endo_solution_space(f.N1, f.N2)
    sym = _restrict(L, dim, [(f.M, _symmetric_equations(f))])
    cen = _restrict(sym, dim, [(f.M, _central_equations(f, sym))])
    return _restrict(cen, dim, [(f.M, _action_equations(f))])


def _select_generators(S: list[Vector], N1: FpAbelianGroup, N2: FpAbelianGroup) -> list[Vector]:
    """Greedy generators of ``S`` modulo the pairs acting as zero.

    Every row of a matrix is first replaced by its canonical representative,
    which clears the coordinates of generators that the relations express
    through earlier ones.  On the remaining coordinates the Hermite basis of
    ``S`` plus the zero pairs is scanned in pivot order, and a row is kept only
    when it is not already in the span of the zero pairs and the rows kept so
    far.  On diagonal examples this yields block projections.
    """
    n1, n2 = N1.ngens, N2.ngens
    dim = n1 * n1 + n2 * n2
    blocks = [(0, n1, N1), (n1 * n1, n2, N2)]
    keep_cols = []
    zero = []
    for off, n, N in blocks:
        rels = N._reduced_relations
        pivots = [max(j for j, a in enumerate(r) if a) for r in rels]
        unit = {c for c, r in zip(pivots, rels) if r[c] == 1}
        for i in range(n):
            keep_cols += [off + i * n + j for j in range(n) if j not in unit]
            for c, r in zip(pivots, rels):
                if r[c] != 1:
                    v = [0] * dim
                    v[off + i * n:off + (i + 1) * n] = r
                    zero.append(v)

    def canon(v):
        e = EndoPair.from_vector(v, N1, N2).reduced()
        return e.vector()

    def shrink(v):
        return [v[c] for c in keep_cols]

    def expand(w):
        v = [0] * dim
        for c, a in zip(keep_cols, w):
            v[c] = a
        return v

    k = len(keep_cols)
    zero_k = [shrink(z) for z in zero]
    span = hermite_basis(zero_k, k) if zero_k else []
    kept = []
    for row in hermite_basis([shrink(canon(v)) for v in S] + zero_k, k):
        if span and lattice_contains(span, row, hermite=True):
            continue
        kept.append(expand(row))
        span = hermite_basis(span + [row], k)
    return kept


def max_scalars_bilinear(f: BilinearMap) -> list[EndoPair]:
    """Z-module generators of the maximal ring of scalars of ``f``.

    ``f`` must be full and non-degenerate; degeneracy is detected and raised
    as :class:`DegenerateMapError`.
    """
    n1, n2 = f.N1.ngens, f.N2.ngens
    dim = n1 * n1 + n2 * n2
    S = scalar_lattice(f)
    gens = _select_generators(S, f.N1, f.N2)
    return [EndoPair.from_vector(v, f.N1, f.N2).reduced() for v in gens]


# ---------------------------------------------------------------------------
# presentation


@dataclass(frozen=True, eq=False)
class ScalarRing:
    """A ring of scalars with its Z-algebra presentation.

    ``presentation`` is the ideal generated by ``sum v_k y_k - 1``, the
    linear relations ``sum_k u_lk y_k`` and the rewriting rules
    ``y_i y_j - sum_k t_ijk y_k``.
    """

    generators: tuple
    presentation: Ideal
    unit_combination: tuple
    relation_rows: tuple
    structure: tuple

    @property
    def ring(self) -> PolyRing:
        return self.presentation.ring

    @property
    def rank(self) -> int:
        return len(self.generators)


def _pair_equations(N1, N2, gens: Sequence[EndoPair], target: Optional[EndoPair]):
    """Systems for ``sum_i x_i gens_i (+ x_r target) = 0`` on every generator."""
    r = len(gens)
    sys1, sys2 = [], []
    for k in range(N1.ngens):
        eq = {i: list(g.first[k]) for i, g in enumerate(gens) if any(g.first[k])}
        if target is not None and any(target.first[k]):
            eq[r] = [-a for a in target.first[k]]
        if eq:
            sys1.append(eq)
    for k in range(N2.ngens):
        eq = {i: list(g.second[k]) for i, g in enumerate(gens) if any(g.second[k])}
        if target is not None and any(target.second[k]):
            eq[r] = [-a for a in target.second[k]]
        if eq:
            sys2.append(eq)
    return sys1, sys2


def _relations_between(gens: Sequence[EndoPair]) -> list[Vector]:
    N1, N2 = gens[0].N1, gens[0].N2
    r = len(gens)
    sys1, sys2 = _pair_equations(N1, N2, gens, None)
    basis = [_unit(r, k) for k in range(r)]
    return _restrict(basis, r, [(N1, sys1), (N2, sys2)])


def _express(gens: Sequence[EndoPair], target: EndoPair, relations: list[Vector]) -> Optional[Vector]:
    """Integer coefficients writing ``target`` in terms of ``gens``, reduced modulo ``relations``."""
    N1, N2 = gens[0].N1, gens[0].N2
    r = len(gens)
    sys1, sys2 = _pair_equations(N1, N2, gens, target)
    basis = [_unit(r + 1, k) for k in range(r + 1)]
    sols = _restrict(basis, r + 1, [(N1, sys1), (N2, sys2)])
    # Hermite basis: at most one row has a nonzero last coordinate pivot...
    # find the lattice element with last coordinate 1
    lasts = [s[r] for s in sols]
    g, coeffs = _gcd_combination(lasts)
    if g != 1:
        return None
    x = _combine(sols, coeffs, r + 1)[:r]
    return _reduce_mod(x, relations)


def _gcd_combination(values: Sequence[int]) -> tuple[int, list[int]]:
    g, coeffs = 0, [0] * len(values)
    for i, v in enumerate(values):
        if not v:
            continue
        if g == 0:
            g, coeffs[i] = abs(v), (1 if v > 0 else -1)
            continue
        a, b = g, v
        x0, x1, y0, y1 = 1, 0, 0, 1
        while b:
            q = a // b
            a, b = b, a - q * b
            x0, x1 = x1, x0 - q * x1
            y0, y1 = y1, y0 - q * y1
        if a < 0:
            a, x0, y0 = -a, -x0, -y0
        coeffs = [c * x0 for c in coeffs]
        coeffs[i] = y0
        g = a
    return g, coeffs


def _reduce_mod(x: Vector, lattice: list[Vector]) -> Vector:
    """Reduce ``x`` against a Hermite basis, pivot entries into a balanced range."""
    y = list(x)
    for row in lattice:
        c = next(i for i, a in enumerate(row) if a)
        p = row[c]
        q = y[c] // p
        if 2 * (y[c] - q * p) > p:
            q += 1
        if q:
            y = [a - q * b for a, b in zip(y, row)]
    return y


def scalar_presentation(gens: Sequence[EndoPair], names: Optional[Sequence[str]] = None) -> ScalarRing:
    """Z-algebra presentation of the ring spanned by ``gens``.

    Args:
        gens: Z-module generators of a commutative unitary ring of endomorphism
            pairs (the output of :func:`max_scalars_bilinear` or
            :func:`max_scalars_algebra`).
        names: variable names, ``y1, ..., yr`` by default.

    Raises:
        ScalarsError: if the identity is not in the span, or a product of two
            generators leaves it.
    """
    if not gens:
        raise ScalarsError("need at least one generator")
    r = len(gens)
    N1, N2 = gens[0].N1, gens[0].N2
    names = list(names) if names else [f"y{i + 1}" for i in range(r)]
    P = PolyRing(names)
    rel = _relations_between(gens)
    v = _express(gens, EndoPair.identity(N1, N2), rel)
    if v is None:
        raise ScalarsError("the identity is not an integer combination of the generators")
    t = {}
    for i in range(r):
        for j in range(i, r):
            c = _express(gens, gens[i] * gens[j], rel)
            if c is None:
                raise ScalarsError(f"product of generators {i + 1} and {j + 1} leaves their span")
            t[i, j] = t[j, i] = c
    y = P.gens
    polys = [sum((c * y[k] for k, c in enumerate(v) if c), P(0)) - 1]
    for u in rel:
        polys.append(sum((c * y[k] for k, c in enumerate(u) if c), P(0)))
    for i in range(r):
        for j in range(i, r):
            polys.append(y[i] * y[j] - sum((c * y[k] for k, c in enumerate(t[i, j]) if c), P(0)))
    structure = tuple(tuple(tuple(t[i, j]) for j in range(r)) for i in range(r))
    return ScalarRing(tuple(gens), Ideal(P, polys), tuple(v), tuple(tuple(u) for u in rel), structure)


# ---------------------------------------------------------------------------
# algebras


def annihilators(R: ZAlgebra) -> tuple[list[Vector], list[Vector], list[Vector]]:
    """Hermite bases of the left, right and two-sided annihilators of ``R``.

    Each is a sublattice of ``Z^n`` containing the relation lattice.
    """
    n = R.n
    left_eqs = [{k: list(R.structure[k][i]) for k in range(n)} for i in range(n)]
    right_eqs = [{k: list(R.structure[i][k]) for k in range(n)} for i in range(n)]
    left = solve_system_over_group(R.group, left_eqs, n)
    right = solve_system_over_group(R.group, right_eqs, n)
    both = solve_system_over_group(R.group, left_eqs + right_eqs, n)
    return left, right, both


def quotient_presentation(R: ZAlgebra, sub: Sequence[Sequence[int]]) -> FpAbelianGroup:
    """Presentation of ``R^+ / sub``: original relations plus the basis of ``sub``."""
    sub = [list(v) for v in sub]
    if R.strict:
        # a lenient algebra may have annihilators that miss some relations
        H = hermite_basis(sub, R.n)
        for r in R.group.relations:
            if not lattice_contains(H, r, hermite=True):
                raise ScalarsError("sublattice does not contain the relations")
    return R.group.quotient(sub)


def r_squared_presentation(R: ZAlgebra) -> tuple[FpAbelianGroup, list[Vector]]:
    """Presentation of ``R^2`` on the products ``a_i a_j``.

    Returns:
        ``(M, inclusion)`` where ``M`` has one generator per ordered pair
        ``(i, j)`` (row-major) and ``inclusion[i * n + j]`` is the image of
        that generator in ``R^+``.
    """
    n = R.n
    inclusion = [list(R.structure[i][j]) for i in range(n) for j in range(n)]
    kernel = solve_system_over_group(R.group, [dict(enumerate(inclusion))], n * n)
    return FpAbelianGroup(n * n, tuple(tuple(k) for k in kernel)), inclusion


def r_squared_lattice(R: ZAlgebra) -> list[Vector]:
    """Hermite basis of the preimage of ``R^2`` in ``Z^n`` (relations included)."""
    n = R.n
    vecs = [list(R.structure[i][j]) for i in range(n) for j in range(n)]
    return hermite_basis(vecs + [list(r) for r in R.group.relations], n)


def _product_equations(R: ZAlgebra, n_off: int):
    """Module-homomorphism condition on ``R^2`` projected to one quotient.

    The action on ``a_i a_j`` is ``(phi_1 a_i) a_j``; its image must equal
    ``phi`` applied to the image of ``a_i a_j`` in the chosen quotient, whose
    block of unknowns starts at ``n_off``.
    """
    n = R.n
    s = R.structure
    eqs = []
    for i in range(n):
        for j in range(n):
            eq: dict[int, Vector] = {}
            for l in range(n):
                v = s[l][j]
                if any(v):
                    idx = i * n + l
                    eq[idx] = _vec_add(eq.get(idx, [0] * n), v)
            for k in range(n):
                c = s[i][j][k]
                if c:
                    for l in range(n):
                        idx = n_off + k * n + l
                        acc = eq.get(idx, [0] * n)
                        acc[l] -= c
                        eq[idx] = acc
            eq = {k: v for k, v in eq.items() if any(v)}
            if eq:
                eqs.append(eq)
    return eqs


def _diagonal_lattice(N1: FpAbelianGroup, N2: FpAbelianGroup) -> list[Vector]:
    """Pairs mapping the diagonal image of ``R`` into itself.

    For each generator ``a_i`` the pair of images must be ``(g, g)`` for some
    ``g`` in ``Z^n`` (one ``g`` per generator).  The row-wise condition is
    solved in the joint space of ``(row of D_1, row of D_2, g)`` and projected
    onto the matrix coordinates.
    """
    n = N1.ngens
    G = FpAbelianGroup(2 * n, tuple(tuple(r) + (0,) * n for r in N1.relations)
                       + tuple((0,) * n + tuple(r) for r in N2.relations))
    eqs = []
    for j in range(n):
        # x_j b_j - g_j b_j = 0 in N1 and x'_j c_j - g_j c_j = 0 in N2
        eqs.append({j: _unit(2 * n, j), 2 * n + j: [-1 if t in (j, n + j) else 0 for t in range(2 * n)],
                    n + j: _unit(2 * n, n + j)})
    row_sols = solve_system_over_group(G, eqs, 3 * n)
    proj = hermite_basis([s[:2 * n] for s in row_sols], 2 * n)
    dim = 2 * n * n
    out = []
    for i in range(n):
        for p in proj:
            v = [0] * dim
            v[i * n:(i + 1) * n] = p[:n]
            v[n * n + i * n:n * n + (i + 1) * n] = p[n:]
            out.append(v)
    return out


def max_scalars_algebra(R: ZAlgebra) -> ScalarRing:
    """Maximal ring of scalars of a finite Z-algebra, with its presentation.

    The ring acts on ``R^+/Ann_l x R^+/Ann_r``.  It is the part of the scalar
    ring of the product map ``f_R`` that commutes with the maps from ``R^2``
    to both quotients and leaves the diagonal image of ``R`` invariant.
    """
    n = R.n
    left, right, _ = annihilators(R)
    N1 = quotient_presentation(R, left)
    N2 = quotient_presentation(R, right)
    # equations with values in R^2 are checked in R^+, which contains it
    f = BilinearMap(N1, N2, R.group, R.structure, check=R.strict)
    dim = 2 * n * n
    S = scalar_lattice(f, check_degenerate=False)
    S = _restrict(S, dim, [(N1, _product_equations(R, 0)),
                           (N2, _product_equations(R, n * n))])
    S = lattice_intersect([S, _diagonal_lattice(N1, N2)], dim)
    gens = _select_generators(S, N1, N2)
    pairs = [EndoPair.from_vector(v, N1, N2).reduced() for v in gens]
    return scalar_presentation(pairs)

