import random
from fractions import Fraction

import pytest

from oracles import random_poly
from zdecomp import fixture_path
from zdecomp.docformat import read_document
from zdecomp.polyring import (
    GF,
    QQ,
    ZZ,
    Ideal,
    PolyRing,
    PolySyntaxError,
    coefficient_map,
    contract_to_Z,
    elim_constant,
    field_groebner,
    ideal_intersect,
    ideal_quotient,
    is_strong_groebner,
    lift_from_Fp,
    normal_form,
    one_representation,
    saturate,
    strong_groebner,
)

Zx = PolyRing(["x"])
Zxyz = PolyRing(["x", "y", "z"])


def ideal(ring, *gens):
    return Ideal(ring, list(gens))


def test_parse_and_print():
    R = PolyRing(["y1", "y2"])
    f = R.parse("y1^2 - y1 + 3*y2*y1")
    assert str(f) == str(R.parse(" y1 ^ 2+3 * y1*y2 -y1 "))
    assert R.parse(str(f)) == f
    with pytest.raises(PolySyntaxError):
        R.parse("y1 +* 2")
    with pytest.raises(PolySyntaxError):
        R.parse("y3")


def test_arithmetic():
    x, y, z = Zxyz.gens
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x - x).is_zero()
    assert (3 * x).LC() == 3


def test_strong_groebner_examples():
    assert ideal(Zx, "x", 2) == Ideal.from_basis(Zx, strong_groebner(ideal(Zx, "x", 2)))
    assert sorted(str(g) for g in strong_groebner(ideal(Zx, "x", 2))) == ["2", "x"]
    assert [str(g) for g in strong_groebner(ideal(Zx, "2*x", "3*x"))] == ["x"]


def test_example_4_5_is_strong():
    doc = read_document(fixture_path("example_4_5.ideal"))
    I = doc.ideal()
    assert is_strong_groebner(list(I.gens))
    assert str(normal_form(I.ring.parse("2*x"), list(I.gens))) == "y"


def test_normal_form_examples():
    I = ideal(Zx, "x")
    assert normal_form(Zx(1), I.gb()) == Zx(1)
    assert I.normal_form("x^3 + 2*x").is_zero()


def test_field_groebner_examples():
    Qx = PolyRing(["x"], domain=QQ)
    assert [str(g) for g in field_groebner(ideal(Qx, "x^2", "x"))] == ["x"]
    Qxy = PolyRing(["x", "y"], domain=QQ)
    assert sorted(str(g) for g in field_groebner(ideal(Qxy, "x + y", "x - y"))) == ["x", "y"]
    F2 = PolyRing(["x"], domain=GF(2))
    assert [str(g) for g in field_groebner(ideal(F2, "x^2 + 1"))] == ["x^2 + 1"]
    with pytest.raises(ValueError):
        field_groebner(ideal(Zx, "x"))


def test_intersect_examples():
    assert ideal_intersect(ideal(Zx, 2), ideal(Zx, 3)) == ideal(Zx, 6)
    R = PolyRing(["x", "y"])
    assert ideal_intersect(ideal(R, "x"), ideal(R, "y")) == ideal(R, "x*y")
    assert ideal_intersect(ideal(Zx, 2, "x"), ideal(Zx, 3, "x")) == ideal(Zx, 6, "x")


def test_quotient_and_saturation_examples():
    I = ideal(Zx, "2*x")
    assert ideal_quotient(I, ideal(Zx, 2)) == ideal(Zx, "x")
    assert ideal_quotient(ideal(Zx, 4, "2*x"), ideal(Zx, 2)) == ideal(Zx, 2, "x")
    assert ideal_quotient(I, ideal(Zx, 1)) == I
    assert saturate(I, ideal(Zx, 2)) == ideal(Zx, "x")
    assert saturate(ideal(Zx, "4*x", "x^2"), ideal(Zx, 2)) == ideal(Zx, "x")
    assert saturate(I, ideal(Zx, 1)) == I


def test_one_representation_examples():
    for I, J in [(ideal(Zx, 2), ideal(Zx, 3)), (ideal(Zx, "x"), ideal(Zx, "x - 1")),
                 (ideal(Zx, 1), ideal(Zx, "x^2 + 7"))]:
        p, q = one_representation(I, J)
        assert I.contains(p) and J.contains(q) and p + q == Zx(1)
    with pytest.raises(ValueError):
        one_representation(ideal(Zx, 2), ideal(Zx, 4))


def test_coefficient_map_examples():
    R = PolyRing(["x", "y"])
    I = ideal(R, "2*x - y")
    J = coefficient_map(I, GF(2))
    assert [str(g) for g in J.gb()] == ["y"]
    Q = coefficient_map(I, QQ)
    assert Q.contains(Q.ring.parse("x") - Q.ring.parse("y") * Fraction(1, 2))
    assert coefficient_map(ideal(R, 6), 3).gb() == []


def test_contract_to_Z_examples():
    Qx = PolyRing(["x"], domain=QQ)
    x = Qx.gen(0)
    assert contract_to_Z(Ideal(Qx, [x * Fraction(1, 2)])) == ideal(Zx, "x")
    assert contract_to_Z(Ideal(Qx, [x + Fraction(1, 2)])) == ideal(Zx, "2*x + 1")
    assert contract_to_Z(Ideal(Qx, [x * x - Fraction(1, 4)])) == ideal(Zx, "4*x^2 - 1")


def test_lift_from_Fp_examples():
    F2 = PolyRing(["x"], domain=GF(2))
    assert lift_from_Fp(ideal(F2, "x + 1")) == ideal(Zx, 2, "x + 1")
    F3 = PolyRing(["x"], domain=GF(3))
    assert lift_from_Fp(Ideal(F3, [])) == ideal(Zx, 3)
    F5 = PolyRing(["x"], domain=GF(5))
    assert lift_from_Fp(ideal(F5, "x - 2"), 5) == ideal(Zx, 5, "x + 3")


def test_elim_constant_examples():
    assert elim_constant(ideal(Zx, 6, "x")) == 6
    assert elim_constant(ideal(Zx, "x")) == 0
    assert elim_constant(ideal(Zx, 4, 6)) == 2


def lt_divides(g, f):
    return all(a <= b for a, b in zip(g.LT(), f.LT())) and f.LC() % g.LC() == 0


def test_strong_divisibility_random():
    rng = random.Random(21)
    for _ in range(80):
        gens = [random_poly(rng, Zxyz) for _ in range(rng.randint(1, 3))]
        gens = [g for g in gens if g]
        if not gens:
            continue
        I = Ideal(Zxyz, gens)
        G = I.gb()
        assert is_strong_groebner(G)
        for _ in range(5):
            f = sum((random_poly(rng, Zxyz) * g for g in gens), Zxyz(0))
            if f:
                assert I.contains(f)
                assert any(lt_divides(g, f) for g in G)


def test_domain_objects():
    assert ZZ != QQ and GF(5) == GF(5)
    with pytest.raises(ValueError):
        GF(4)
