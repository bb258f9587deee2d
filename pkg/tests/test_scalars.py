import itertools

import pytest

from zdecomp.exactlin import FpAbelianGroup, hermite_basis, identity, lattice_equal
from zdecomp.polyring import Ideal
from zdecomp.scalars import (
    BilinearMap,
    DegenerateMapError,
    EndoPair,
    ZAlgebra,
    annihilators,
    endo_solution_space,
    max_scalars_algebra,
    max_scalars_bilinear,
    quotient_presentation,
    r_squared_lattice,
    r_squared_presentation,
    scalar_presentation,
)


def same_mod_relations(R, A, B):
    rels = [list(r) for r in R.group.relations]
    return lattice_equal(hermite_basis(list(A) + rels, R.n), hermite_basis(list(B) + rels, R.n), R.n)


def integers_ring():
    return ZAlgebra.from_products(FpAbelianGroup.free(1), {(0, 0): [1]})


def test_endo_solution_space_free():
    assert lattice_equal(endo_solution_space(FpAbelianGroup.free(1), FpAbelianGroup.free(1)),
                         identity(2), 2)
    assert lattice_equal(endo_solution_space(FpAbelianGroup.cyclic(2), FpAbelianGroup.free(1)),
                         identity(2), 2)


def test_endo_solution_space_brute_force():
    # endomorphisms of Z/2 + Z/4 in row convention: phi(a_i) = sum_j D[i][j] a_j
    N = FpAbelianGroup.cyclic(2, 4)
    Z = FpAbelianGroup.free(0)
    basis = hermite_basis(endo_solution_space(N, Z), 4)
    from zdecomp.exactlin import lattice_contains
    for d in itertools.product(range(4), repeat=4):
        D = [list(d[:2]), list(d[2:])]
        # 2 a_1 = 0 must map to 0 and 4 a_2 = 0 as well
        ok = N.is_zero([2 * D[0][0], 2 * D[0][1]]) and N.is_zero([4 * D[1][0], 4 * D[1][1]])
        assert lattice_contains(basis, list(d), hermite=True) == ok
    assert not lattice_contains(basis, [0, 1, 0, 0], hermite=True)
    assert lattice_contains(basis, [0, 2, 0, 0], hermite=True)


def test_multiplication_map_scalars():
    Z = FpAbelianGroup.free(1)
    f = BilinearMap(Z, Z, Z, [[[1]]])
    gens = max_scalars_bilinear(f)
    S = scalar_presentation(gens)
    assert S.presentation == Ideal(S.ring, ["y1 - 1"])


def test_degenerate_map_rejected():
    Z2 = FpAbelianGroup.free(2)
    Z = FpAbelianGroup.free(1)
    with pytest.raises(DegenerateMapError):
        max_scalars_bilinear(BilinearMap(Z2, Z, Z, [[[1]], [[0]]]))


def test_endo_pair_algebra():
    N = FpAbelianGroup.cyclic(6)
    a = EndoPair([[2]], [[3]], N, N)
    b = EndoPair([[5]], [[5]], N, N)
    assert (a * b).reduced() == EndoPair([[4]], [[3]], N, N)
    assert (a + b).reduced() == EndoPair([[1]], [[2]], N, N)
    assert EndoPair.identity(N, N).D == identity(2)


def test_example_6_5_scalars(ex65):
    S = max_scalars_algebra(ex65)
    assert S.rank == 2
    assert S.presentation == Ideal(S.ring, ["6", "3*y2", "y1 + y2 - 1", "y2^2 - y2"])
    firsts = sorted(tuple(g.first[i][i] for i in range(5)) for g in S.generators)
    assert firsts == [(0, 0, 1, 0, 0), (1, 1, 0, 0, 0)]


def test_example_6_5_annihilators(ex65):
    left, right, both = annihilators(ex65)
    expected = [[0, 0, 0, 0, 1], [0, 0, 0, 3, 0]]
    for L in (left, right, both):
        assert same_mod_relations(ex65, L, expected)


def test_example_6_5_quotient(ex65):
    _, _, both = annihilators(ex65)
    Q = quotient_presentation(ex65, both)
    assert [d for d in Q.invariants if d != 1] == [3, 3, 6]
    assert quotient_presentation(ex65, ex65.group.relations).invariants == ex65.group.invariants
    assert all(d == 1 for d in quotient_presentation(ex65, identity(5)).invariants)


def test_example_6_10(ex610):
    _, _, both = annihilators(ex610)
    assert same_mod_relations(ex610, both, [[1, -1, 0, 0, 0, 0]])
    S = max_scalars_algebra(ex610)
    assert S.presentation == Ideal(S.ring, ["y1^2 - y1", "y1*y2", "y2^2 - y2", "y1 + y2 - 1"])


def test_example_6_9_r_squared(ex69):
    assert lattice_equal(r_squared_lattice(ex69), [[0, 0, 0, 0, 1]], 5)
    M, incl = r_squared_presentation(ex69)
    assert M.invariants == [0]


def test_example_6_11(ex611):
    assert lattice_equal(r_squared_lattice(ex611), [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 2, 0]], 5)
    S = max_scalars_algebra(ex611)
    assert S.presentation == Ideal(S.ring, ["y1^2 - y1", "y1*y2", "y2^2 - y2", "y1 + y2 - 1"])


def test_integers_as_algebra():
    S = max_scalars_algebra(integers_ring())
    assert S.presentation == Ideal(S.ring, ["y1 - 1"])


def test_zero_multiplication():
    R = ZAlgebra.from_products(FpAbelianGroup.cyclic(0, 3), {})
    assert lattice_equal(annihilators(R)[2], identity(2), 2)
    M, _ = r_squared_presentation(R)
    assert M.order() == 1


def test_ill_defined_structure_constants():
    # 2 a_1 = 0 but 2 (a_1 a_2) = 2 a_2 is nonzero in Z
    G = FpAbelianGroup.cyclic(2, 0)
    with pytest.raises(ValueError):
        ZAlgebra.from_products(G, {(0, 1): [0, 1]})
    with pytest.warns(UserWarning):
        R = ZAlgebra.from_products(G, {(0, 1): [0, 1]}, strict=False)
    assert R.ill_defined()
