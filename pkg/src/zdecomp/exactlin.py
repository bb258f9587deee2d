"""Exact linear algebra over the integers and over finitely presented abelian groups.

Matrices are plain lists of rows of Python integers, vectors are lists of
integers.  Nothing here ever touches floating point, and every routine is a pure
function of its inputs.

The central primitive is :func:`solve_congruences`, which computes a basis of
the lattice ``{x in Z^p : a_i . x = 0 mod d_i}`` for a list of rows ``a_i`` with
moduli ``d_i`` (``d_i = 0`` meaning an exact equation).  Homogeneous systems
over a finitely presented abelian group ``N`` reduce to this form through the
Smith normal form of the relation matrix of ``N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

Vector = list[int]
Matrix = list[list[int]]

__all__ = [
    "SmithDecomposition",
    "FpAbelianGroup",
    "identity",
    "matmul",
    "matvec",
    "transpose",
    "smith_normal_form",
    "hermite_basis",
    "kernel_basis",
    "solve_particular",
    "solve_congruences",
    "solve_over_group",
    "solve_system_over_group",
    "lattice_intersect",
    "lattice_contains",
    "lattice_equal",
    "element_normal_form",
    "unimodular",
]


# ---------------------------------------------------------------------------
# small helpers


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    """Product of integer matrices; shapes ``m x k`` and ``k x n``."""
    if not A:
        return []
    k = len(A[0])
    if k == 0:
        ncols = len(B[0]) if B else 0
        return [[0] * ncols for _ in A]
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Matrix, x: Sequence[int]) -> Vector:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _det(A: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """Result of :func:`smith_normal_form`: ``L * A * R == D``.

    ``L`` and ``R`` are unimodular, ``D`` is diagonal with non-negative
    entries ``d_1 | d_2 | ... | d_s`` followed by zeros.
    """

    D: Matrix
    L: Matrix
    R: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(A: Matrix, ncols: Optional[int] = None) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    Pivoting always picks the entry of smallest absolute value in the active
    block and reduces its row and column by rounded quotients, which keeps
    entry growth modest on the matrices met in practice.

    Args:
        A: integer matrix given as a list of rows.
        ncols: number of columns, needed only when ``A`` has no rows.

    Returns:
        A :class:`SmithDecomposition` ``(D, L, R)`` with ``L A R = D``.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    D = [list(row) for row in A]
    L = identity(m)
    R = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row[dst] -= q * row[src]
        D[dst] = [a - q * b for a, b in zip(D[dst], D[src])]
        L[dst] = [a - q * b for a, b in zip(L[dst], L[src])]

    def add_col(dst, src, q):  # col[dst] -= q * col[src]
        for row in D:
            row[dst] -= q * row[src]
        for row in R:
            row[dst] -= q * row[src]

    t = 0
    while t < min(m, n):
        # smallest nonzero entry of the active block
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                v = D[i][t]
                if v:
                    q = _round_div(v, p)
                    add_row(i, t, q)
                    if D[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                v = D[t][j]
                if v:
                    q = _round_div(v, p)
                    add_col(j, t, q)
                    if D[t][j]:
                        dirty = True
            if dirty:
                # a remainder survived: move the smallest one to the pivot
                best = (abs(p), t, t)
                for i in range(t + 1, m):
                    if D[i][t] and abs(D[i][t]) < best[0]:
                        best = (abs(D[i][t]), i, t)
                for j in range(t + 1, n):
                    if D[t][j] and abs(D[t][j]) < best[0]:
                        best = (abs(D[t][j]), t, j)
                _, bi, bj = best
                if bi != t:
                    swap_rows(t, bi)
                if bj != t:
                    swap_cols(t, bj)
                continue
            # row and column cleared; enforce divisibility of the rest
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, -1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            L[t] = [-a for a in L[t]]
        t += 1
    return SmithDecomposition(D, L, R)


def _round_div(a: int, b: int) -> int:
    """Nearest-integer quotient ``a / b`` (ties towards minus infinity)."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1 if (r > 0) == (b > 0) else -1
    return q


# ---------------------------------------------------------------------------
# Hermite bases and lattice membership


def hermite_basis(vectors: Iterable[Sequence[int]], dim: Optional[int] = None,
                  reverse: bool = False) -> list[Vector]:
    """Row Hermite normal form of the lattice spanned by ``vectors``.

    Zero rows are discarded.  Pivots are positive and entries above a pivot
    are reduced into ``[0, pivot)``.  With ``reverse=True`` the pivot of each
    row is its *last* nonzero coordinate and rows are ordered by decreasing
    pivot column; this is the convention used for canonical representatives
    in :func:`element_normal_form`.
    """
    rows = [list(v) for v in vectors]
    if dim is None:
        dim = len(rows[0]) if rows else 0
    rows = [r for r in rows if any(r)]
    if reverse:
        rows = [r[::-1] for r in rows]
    basis: list[Vector] = []
    pivots: list[int] = []
    col = 0
    while rows and col < dim:
        active = [r for r in rows if r[col]]
        if not active:
            col += 1
            continue
        rest = [r for r in rows if not r[col]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            p = piv[col]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // p
                r2 = [a - q * b for a, b in zip(r, piv)]
                if r2[col]:
                    nxt.append(r2)
                elif any(r2):
                    rest.append(r2)
            active = nxt
        piv = active[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        basis.append(piv)
        pivots.append(col)
        rows = rest
        col += 1
    # reduce above pivots
    for k in range(len(basis)):
        c, p = pivots[k], basis[k][pivots[k]]
        for i in range(k):
            q = basis[i][c] // p
            if q:
                basis[i] = [a - q * b for a, b in zip(basis[i], basis[k])]
    if reverse:
        basis = [r[::-1] for r in basis]
    return basis


def _pivot(row: Sequence[int]) -> int:
    for i, a in enumerate(row):
        if a:
            return i
    return -1


def lattice_contains(basis: Sequence[Sequence[int]], x: Sequence[int],
                     hermite: bool = False) -> bool:
    """Whether ``x`` lies in the integer span of ``basis``."""
    H = list(basis) if hermite else hermite_basis(basis, len(x))
    y = list(x)
    for row in H:
        c = _pivot(row)
        if y[c] % row[c]:
            return False
        q = y[c] // row[c]
        if q:
            y = [a - q * b for a, b in zip(y, row)]
    return not any(y)


def lattice_equal(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], dim: int) -> bool:
    return hermite_basis(A, dim) == hermite_basis(B, dim)


# ---------------------------------------------------------------------------
# congruence systems


def solve_congruences(rows: Sequence[tuple[Sequence[int], int]], p: int) -> list[Vector]:
    """Basis of ``{x in Z^p : a . x = 0 (mod d) for every (a, d) in rows}``.

    A modulus ``d = 0`` requests exact equality.  The solution lattice is
    refined one row at a time: the current basis columns are combined by
    Euclidean column operations until the row functional is concentrated in a
    single column, which is then dropped (exact rows) or traded for the slack
    generator ``d`` (congruences).

    Returns:
        The Hermite basis of the solution lattice.
    """
    cols: list[Vector] = [[1 if i == j else 0 for i in range(p)] for j in range(p)]
    for a, d in rows:
        nz = [(i, c) for i, c in enumerate(a) if c]
        if not nz or not cols:
            continue
        d = abs(d)
        w = [sum(c * col[i] for i, c in nz) for col in cols]
        if d:
            w = [v % d for v in w]
            if not any(w):
                continue
        elif not any(w):
            continue
        cols, w = _eliminate(cols, w, d, p)
        if len(cols) > 1 and max((abs(v) for col in cols for v in col), default=0) > (1 << 40):
            cols = [list(r) for r in hermite_basis(cols, p)]
    return hermite_basis(cols, p)


def _eliminate(cols: list[Vector], w: list[int], d: int, p: int):
    """Kill the functional ``w`` on ``cols`` (modulo ``d`` when ``d > 0``)."""
    cols = [c[:] for c in cols]
    w = w[:]
    if d:
        cols.append([0] * p)
        w.append(d)
    while True:
        live = [j for j, v in enumerate(w) if v]
        if len(live) <= 1:
            break
        j0 = min(live, key=lambda j: abs(w[j]))
        piv, pc = w[j0], cols[j0]
        for j in live:
            if j == j0:
                continue
            q = _round_div(w[j], piv)
            if q:
                w[j] -= q * piv
                cols[j] = [a - q * b for a, b in zip(cols[j], pc)]
    live = [j for j, v in enumerate(w) if v]
    if live:
        j = live[0]
        del cols[j]
    return cols, w


def kernel_basis(A: Matrix, ncols: Optional[int] = None) -> list[Vector]:
    """A Z-basis of ``{x : A x = 0}`` in Hermite form (empty if injective)."""
    n = len(A[0]) if A else (ncols or 0)
    return solve_congruences([(row, 0) for row in A], n)


def solve_particular(A: Matrix, b: Sequence[int], ncols: Optional[int] = None) -> Optional[Vector]:
    """Some integer ``x`` with ``A x = b``, or ``None`` when there is none."""
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    if m == 0:
        return [0] * n
    snf = smith_normal_form(A, n)
    c = matvec(snf.L, b)
    y = [0] * n
    for i in range(m):
        d = snf.D[i][i] if i < n else 0
        if d == 0:
            if c[i]:
                return None
        else:
            if c[i] % d:
                return None
            y[i] = c[i] // d
    return matvec(snf.R, y)


# ---------------------------------------------------------------------------
# finitely presented abelian groups


@dataclass(frozen=True)
class FpAbelianGroup:
    """The group ``Z^ngens / <relations>``.

    Relations are stored as a list of integer vectors of length ``ngens``;
    viewed as a matrix, each relation is one column.
    """

    ngens: int
    relations: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rels = tuple(tuple(int(a) for a in r) for r in self.relations)
        for r in rels:
            if len(r) != self.ngens:
                raise ValueError(f"relation {r} has length {len(r)}, expected {self.ngens}")
        object.__setattr__(self, "relations", rels)

    @classmethod
    def free(cls, n: int) -> "FpAbelianGroup":
        return cls(n, ())

    @classmethod
    def cyclic(cls, *orders: int) -> "FpAbelianGroup":
        """Direct sum of cyclic groups ``Z/o_1 + ... + Z/o_k`` (``0`` meaning ``Z``)."""
        n = len(orders)
        rels = [tuple(o if i == j else 0 for j in range(n)) for i, o in enumerate(orders) if o != 0]
        return cls(n, tuple(rels))

    @property
    def relation_matrix(self) -> Matrix:
        """Relations as columns of an ``ngens x nrels`` matrix."""
        if not self.relations:
            return [[] for _ in range(self.ngens)]
        return transpose([list(r) for r in self.relations])

    @cached_property
    def _snf(self) -> SmithDecomposition:
        return smith_normal_form(self.relation_matrix, len(self.relations))

    @cached_property
    def coordinates(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        """Functionals ``(row, modulus)`` that detect the zero element.

        ``x`` is zero in the group iff ``row . x = 0 mod modulus`` for every
        pair; a modulus of ``0`` stands for an exact equation.  Rows attached
        to unit invariant factors are omitted.
        """
        snf = self._snf
        diag = snf.diagonal
        out = []
        for i in range(self.ngens):
            d = diag[i] if i < len(diag) else 0
            if d != 1:
                out.append((tuple(snf.L[i]), d))
        return tuple(out)

    @property
    def invariants(self) -> list[int]:
        """Invariant factors, ``0`` for each free summand, units omitted."""
        return [d for _, d in self.coordinates]

    @cached_property
    def _reduced_relations(self) -> list[Vector]:
        return hermite_basis(self.relations, self.ngens, reverse=True)

    def order(self) -> int:
        """Group order, or ``0`` if infinite."""
        out = 1
        for d in self.invariants:
            if d == 0:
                return 0
            out *= d
        return out

    def is_zero(self, x: Sequence[int]) -> bool:
        self._check(x)
        for row, d in self.coordinates:
            v = _dot(row, x)
            if (v % d if d else v):
                return False
        return True

    def equal(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return self.is_zero([a - b for a, b in zip(x, y)])

    def normal_form(self, x: Sequence[int]) -> Vector:
        return element_normal_form(self, x)

    def quotient(self, extra: Iterable[Sequence[int]]) -> "FpAbelianGroup":
        """Same generators with ``extra`` appended to the relations."""
        rels = list(self.relations) + [tuple(v) for v in extra if any(v)]
        return FpAbelianGroup(self.ngens, tuple(rels))

    def _check(self, x: Sequence[int]) -> None:
        if len(x) != self.ngens:
            raise ValueError(f"element has {len(x)} coordinates, group has {self.ngens} generators")

    def __repr__(self) -> str:
        inv = self.invariants
        if not inv:
            return f"FpAbelianGroup(ngens={self.ngens}, trivial)"
        desc = " + ".join("Z" if d == 0 else f"Z/{d}" for d in inv)
        return f"FpAbelianGroup(ngens={self.ngens}, {desc})"


def element_normal_form(N: FpAbelianGroup, x: Sequence[int]) -> Vector:
    """Canonical representative of the class of ``x`` in ``N``.

    Later generators are eliminated in favour of earlier ones wherever the
    relations allow it, and each pivot coordinate is reduced into
    ``[0, pivot)``.
    """
    N._check(x)
    y = list(x)
    for row in N._reduced_relations:  # decreasing pivot column
        c = max(i for i, a in enumerate(row) if a)
        q = y[c] // row[c]
        if q:
            y = [a - q * b for a, b in zip(y, row)]
    return y


def solve_system_over_group(N: FpAbelianGroup, equations: Iterable[dict[int, Sequence[int]]],
                            p: int) -> list[Vector]:
    """Solutions ``x in Z^p`` of ``sum_i x_i v_{e,i} = 0`` in ``N`` for all equations ``e``.

    Each equation is a sparse mapping from unknown index to the coordinate
    vector of its coefficient in ``N``.  Adjoining one slack variable per
    relation and projecting away (the textbook construction) is equivalent to
    imposing the congruences given by the Smith coordinates of ``N``, which is
    what is done here.
    """
    coords = N.coordinates
    rows = []
    for eq in equations:
        if not eq:
            continue
        for func, d in coords:
            nzf = [(k, c) for k, c in enumerate(func) if c]
            a = [0] * p
            hit = False
            for i, v in eq.items():
                s = sum(c * v[k] for k, c in nzf)
                if d:
                    s %= d
                if s:
                    a[i] = s
                    hit = True
            if hit:
                rows.append((a, d))
    # exact rows first: they shrink the basis fastest
    rows.sort(key=lambda r: (r[1] != 0, r[1]))
    return solve_congruences(rows, p)


def solve_over_group(N: FpAbelianGroup, v: Sequence[Sequence[int]]) -> list[Vector]:
    """Basis of ``{s in Z^p : s_1 v_1 + ... + s_p v_p = 0 in N}``."""
    for x in v:
        N._check(x)
    return solve_system_over_group(N, [dict(enumerate(v))], len(v))


def lattice_intersect(bases: Sequence[Sequence[Sequence[int]]], dim: Optional[int] = None) -> list[Vector]:
    """Hermite basis of the intersection of the lattices spanned by each basis."""
    if not bases:
        raise ValueError("need at least one lattice")
    if dim is None:
        for B in bases:
            if B:
                dim = len(B[0])
                break
        else:
            return []
    for B in bases:
        for v in B:
            if len(v) != dim:
                raise ValueError("dimension mismatch in lattice_intersect")
    current = hermite_basis(bases[0], dim)
    for B in bases[1:]:
        H = hermite_basis(B, dim)
        if not current or not H:
            return []
        current = _intersect_two(current, H, dim)
    return current


def _intersect_two(A: list[Vector], B: list[Vector], dim: int) -> list[Vector]:
    # x = A^T a = B^T b  <=>  [A^T | -B^T] (a, b) = 0
    k = len(A)
    rows = []
    for c in range(dim):
        rows.append(([A[i][c] for i in range(k)] + [-B[j][c] for j in range(len(B))], 0))
    K = solve_congruences(rows, k + len(B))
    out = []
    for sol in K:
        a = sol[:k]
        out.append([sum(a[i] * A[i][c] for i in range(k)) for c in range(dim)])
    return hermite_basis(out, dim)


def unimodular(M: Matrix) -> bool:
    """Whether a square integer matrix has determinant +-1."""
    return abs(_det(M)) == 1
