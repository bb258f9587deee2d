import pytest

from zdecomp.decompose import (
    certify_indecomposable,
    decompose_algebra,
    decompose_bilinear,
    evaluate_idempotent,
    verify_decomposition,
)
from zdecomp.exactlin import FpAbelianGroup, hermite_basis, lattice_equal
from zdecomp.polyring import PolyRing
from zdecomp.scalars import BilinearMap, EndoPair, max_scalars_algebra


def same_factor(R, ann, got, expected):
    rows = [list(a) for a in ann]
    return lattice_equal(hermite_basis([list(g) for g in got] + rows, R.n),
                         hermite_basis([list(g) for g in expected] + rows, R.n), R.n)


def match_factors(R, report, expected):
    got = [f.generators for f in report.factors]
    if len(got) != len(expected):
        return False
    rest = list(expected)
    for g in got:
        hit = next((k for k, e in enumerate(rest) if same_factor(R, report.ann_basis, g, e)), None)
        if hit is None:
            return False
        rest.pop(hit)
    return True


def unit(n, i, c=1):
    v = [0] * n
    v[i] = c
    return v


def test_evaluate_identity_and_generator():
    N = FpAbelianGroup.cyclic(4, 0)
    phi = EndoPair([[1, 0], [0, 2]], [[3, 0], [0, 1]], N, N)
    R1 = PolyRing(["y1"])
    assert evaluate_idempotent(R1(1), [phi]) == EndoPair.identity(N, N)
    assert evaluate_idempotent(R1.parse("y1"), [phi]) == phi
    assert evaluate_idempotent(R1.parse("y1^2 - y1"), [phi]) == (phi * phi - phi).reduced()
    with pytest.raises(ValueError):
        evaluate_idempotent(PolyRing(["a", "b"]).parse("a"), [phi])


def test_evaluate_example_6_10(ex610):
    S = max_scalars_algebra(ex610)
    E = evaluate_idempotent(S.ring.parse("y2"), S.generators)
    assert [E.first[i][i] for i in range(6)] == [0, 0, 0, 0, 1, 1]


def test_bilinear_multiplication():
    Z = FpAbelianGroup.free(1)
    assert len(decompose_bilinear(BilinearMap(Z, Z, Z, [[[1]]]))) == 1


def test_bilinear_diagonal():
    Z2 = FpAbelianGroup.free(2)
    f = BilinearMap(Z2, Z2, Z2, [[[1, 0], [0, 0]], [[0, 0], [0, 1]]])
    factors = decompose_bilinear(f)
    assert len(factors) == 2
    assert sorted(f.n1_gens for f in factors) == [((0, 1),), ((1, 0),)]


def test_example_6_5(ex65):
    rep = decompose_algebra(ex65)
    assert match_factors(ex65, rep, [[unit(5, 1, 3)], [unit(5, 2)], [unit(5, 0), unit(5, 1, 4)]])
    assert rep.idempotents.matches(["3", "y2", "2*y2 + 4"])


def test_example_6_10(ex610):
    rep = decompose_algebra(ex610)
    assert match_factors(ex610, rep, [[unit(6, i) for i in range(4)], [unit(6, 4), unit(6, 5)]])
    assert verify_decomposition(ex610, rep)


def test_example_6_11(ex611):
    rep = decompose_algebra(ex611)
    assert match_factors(ex611, rep, [[unit(5, 0), unit(5, 1)], [unit(5, 2)]])
    assert verify_decomposition(ex611, rep)
    assert not rep.indecomposable_certified
    assert not certify_indecomposable(ex611)


def test_example_6_9(ex69):
    rep = decompose_algebra(ex69)
    assert len(rep.factors) == 1
    assert not certify_indecomposable(ex69)
    hand = [[unit(5, 0), unit(5, 1)], [unit(5, 2), unit(5, 3)]]
    assert verify_decomposition(ex69, hand)


def test_verify_rejects_bad_split(ex610):
    assert not verify_decomposition(ex610, [[unit(6, 0), unit(6, 4)], [unit(6, 2), unit(6, 3), unit(6, 5)]])
    assert not verify_decomposition(ex610, [[unit(6, 0)], [unit(6, 4)]])


def test_certify_integers():
    from zdecomp.scalars import ZAlgebra
    R = ZAlgebra.from_products(FpAbelianGroup.free(1), {(0, 0): [1]})
    assert certify_indecomposable(R)
    rep = decompose_algebra(R)
    assert len(rep.factors) == 1 and rep.indecomposable_certified
