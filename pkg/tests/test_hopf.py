"""Axiom verification, dual/tensor/opposite constructions, the double."""

import pytest
from fractions import Fraction

import hopfbx as hb
from hopfbx.coeff import Coeff
from hopfbx.hopf import NotMonomial
from conftest import dual_group_algebra, group_algebra

ONE = Coeff.one()


def one_dim_hopf():
    return hb.HopfData(
        "Q", 1, ("e",),
        {(0, 0, 0): ONE}, {(0, 0, 0): ONE}, {0: ONE}, {0: ONE}, {(0, 0): ONE},
    )


def test_one_dim_algebra_passes():
    report = hb.verify_axioms(one_dim_hopf())
    assert report.ok
    assert report.summary() == "all 10 axioms pass"


def test_c2_group_algebra_passes():
    h = group_algebra(hb.catalog_group("C2"))
    assert hb.verify_axioms(h).ok


def test_broken_antipode_has_witness():
    h = group_algebra(hb.catalog_group("C2"))
    broken = hb.HopfData("Q", 2, h.basis, h.mult, h.comult, h.unit, h.counit, {})
    report = hb.verify_axioms(broken)
    assert not report.ok
    failed = dict(report.failures())
    assert "antipode_left" in failed and "antipode_right" in failed
    assert failed["antipode_left"] is not None


def test_dual_is_involution(all_factorizations):
    for name, f in all_factorizations[:40]:
        h = hb.build_bicrossproduct(f)
        assert hb.dual(hb.dual(h)) == h


def test_dual_of_group_algebra_is_function_algebra():
    for name in ("C3", "S3", "D4"):
        g = hb.catalog_group(name)
        assert hb.dual(group_algebra(g)) == dual_group_algebra(g)


def test_dual_preserves_axioms():
    h = group_algebra(hb.catalog_group("S3"))
    assert hb.verify_axioms(hb.dual(h)).ok


def test_tensor_unit_object():
    h = group_algebra(hb.catalog_group("C3"))
    assert hb.tensor(one_dim_hopf(), h) == h


def test_tensor_dims_multiply():
    h1 = group_algebra(hb.catalog_group("C2"))
    h2 = dual_group_algebra(hb.catalog_group("C3"))
    t = hb.tensor(h1, h2)
    assert t.dim == 6
    assert hb.verify_axioms(t).ok


def test_opposite_of_commutative_is_identity():
    h = group_algebra(hb.catalog_group("C4"))
    assert hb.opposite(h) == h
    assert hb.coopposite(dual_group_algebra(hb.catalog_group("C4"))) == dual_group_algebra(
        hb.catalog_group("C4")
    )


def test_opposite_coopposite_stay_hopf():
    s3 = hb.catalog_group("S3")
    f = hb.make_factorization(s3, (0, 2), (0, 3, 4))
    h = hb.build_bicrossproduct(f)
    assert hb.verify_axioms(hb.opposite(h)).ok
    assert hb.verify_axioms(hb.coopposite(h)).ok


def test_inverse_antipode_identity_and_permutation():
    h = group_algebra(hb.catalog_group("C2xC2"))  # S = id on an elementary group
    assert hb.inverse_antipode(h) == h.antipode
    c3 = group_algebra(hb.catalog_group("C3"))  # S is the swap of the two generators
    inv = hb.inverse_antipode(c3)
    for (i, j), c in inv.items():
        assert c3.antipode[(j, i)] == c


def test_inverse_antipode_scaled_permutation():
    h = group_algebra(hb.catalog_group("C2"))
    scaled = hb.rescale_basis(h, [ONE, Coeff.from_rational(5)])
    inv = hb.inverse_antipode(scaled)
    assert inv == scaled.antipode  # S(x) = x kept scale 1 under diagonal rescale
    tweaked = dict(scaled.antipode)
    tweaked[(1, 1)] = Coeff.from_rational(3)
    h2 = hb.HopfData("Q", 2, h.basis, scaled.mult, scaled.comult,
                     scaled.unit, scaled.counit, tweaked)
    inv2 = hb.inverse_antipode(h2)
    assert inv2[(1, 1)] == Coeff.from_rational(Fraction(1, 3))


def test_inverse_antipode_rejects_non_monomial():
    h = group_algebra(hb.catalog_group("C2"))
    bad = dict(h.antipode)
    bad[(1, 0)] = ONE  # second entry in row 1
    h2 = hb.HopfData("Q", 2, h.basis, h.mult, h.comult, h.unit, h.counit, bad)
    with pytest.raises(NotMonomial):
        hb.inverse_antipode(h2)
    collapsed = {(0, 0): ONE, (1, 0): ONE}  # two rows hit one column
    h3 = hb.HopfData("Q", 2, h.basis, h.mult, h.comult, h.unit, h.counit, collapsed)
    with pytest.raises(NotMonomial):
        hb.inverse_antipode(h3)


def test_s3_model_antipode_is_self_inverse_permutation():
    s3 = hb.catalog_group("S3")
    f = hb.make_factorization(s3, (0, 2), (0, 3, 4))
    h = hb.build_bicrossproduct(f)
    inv = hb.inverse_antipode(h)
    assert inv == h.antipode  # g -> g^-1 is an involution


def test_double_dims_square():
    h = group_algebra(hb.catalog_group("C2"))
    d = hb.drinfeld_double(h)
    assert d.dim == 4
    assert hb.verify_axioms(d).ok


def test_double_of_one_dim():
    d = hb.drinfeld_double(one_dim_hopf())
    assert d.dim == 1
    assert hb.verify_axioms(d).ok


def test_double_of_group_algebra_is_positively_based_hopf():
    s3 = hb.catalog_group("S3")
    d = hb.drinfeld_double(group_algebra(s3))
    assert d.dim == 36
    assert hb.verify_axioms(d).ok
    # quantum double of a group: conjugation-graded product
    res = hb.classify(d)
    assert res.factorization.group.order == 36


def test_positivity_closure(all_factorizations):
    # every construction keeps strictly positive stored coefficients
    for name, f in all_factorizations[:20]:
        h = hb.build_bicrossproduct(f)
        for h2 in (hb.dual(h), hb.opposite(h), hb.coopposite(h)):
            for c in list(h2.mult.values()) + list(h2.comult.values()):
                assert not c.is_zero()


def test_rescale_round_trip():
    h = group_algebra(hb.catalog_group("S3"))
    scales = [Coeff.from_rational(Fraction(k + 1, 3)) for k in range(6)]
    back = [c.inverse() for c in scales]
    assert hb.rescale_basis(hb.rescale_basis(h, scales), back) == h


def test_permute_round_trip():
    h = dual_group_algebra(hb.catalog_group("S3"))
    perm = [2, 0, 1, 4, 5, 3]
    inv = [perm.index(i) for i in range(6)]
    assert hb.permute_basis(hb.permute_basis(h, perm), inv) == h
