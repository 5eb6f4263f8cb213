"""Coefficient semirings: factored positives, rational semiring, Boolean B."""

import random
from fractions import Fraction

import pytest

from hopfbx.coeff import (
    B_ONE,
    B_ZERO,
    Bool,
    Coeff,
    FactoredPositive,
    FormalAdditionError,
    FormalPowerError,
    coeff_from_json,
    coeff_to_json,
    fp_from_rational,
    fp_mul,
    fp_pow,
    fp_to_rational,
    semiring_add,
    semiring_mul,
)


def test_factorization_examples():
    assert fp_from_rational(1).exponents() == {}
    assert fp_from_rational(12).exponents() == {2: 2, 3: 1}
    assert fp_from_rational(Fraction(9, 4)).exponents() == {2: -2, 3: 2}


def test_from_rational_rejects_nonpositive():
    with pytest.raises(ValueError):
        fp_from_rational(0)
    with pytest.raises(ValueError):
        fp_from_rational(Fraction(-3, 2))


def test_to_rational_inverts_from_rational():
    rng = random.Random(1)
    for _ in range(200):
        q = Fraction(rng.randint(1, 500), rng.randint(1, 500))
        assert fp_to_rational(fp_from_rational(q)) == q


def test_mul_and_pow():
    two = fp_from_rational(2)
    assert fp_mul(two, two.inv()).exponents() == {}
    assert fp_pow(fp_from_rational(36), Fraction(1, 2)) == fp_from_rational(6)
    root3 = fp_pow(fp_from_rational(3), Fraction(1, 2))
    assert root3.exponents() == {3: Fraction(1, 2)}
    assert not root3.is_rational()
    with pytest.raises(FormalPowerError):
        root3.to_fraction()


def test_pow_round_trip():
    rng = random.Random(2)
    for _ in range(50):
        a = fp_from_rational(Fraction(rng.randint(1, 99), rng.randint(1, 99)))
        q = Fraction(rng.randint(1, 7), rng.randint(1, 7))
        assert fp_pow(fp_pow(a, q), 1 / q) == a


def test_boolean_table():
    assert B_ONE + B_ONE == B_ONE
    assert B_ONE + B_ZERO == B_ONE
    assert B_ZERO + B_ZERO == B_ZERO
    assert B_ONE * B_ONE == B_ONE
    assert B_ONE * B_ZERO == B_ZERO


def test_rational_semiring_examples():
    half = Coeff.from_rational(Fraction(1, 2))
    third = Coeff.from_rational(Fraction(1, 3))
    assert (half + third).to_fraction() == Fraction(5, 6)
    assert Coeff.zero() * half == Coeff.zero()
    assert Coeff.zero() + half == half


def _random_coeff(rng):
    if rng.random() < 0.15:
        return Coeff.zero()
    return Coeff.from_rational(Fraction(rng.randint(1, 30), rng.randint(1, 30)))


def _random_bool(rng):
    return B_ONE if rng.random() < 0.5 else B_ZERO


@pytest.mark.parametrize("sampler,zero,one", [
    (_random_coeff, Coeff.zero(), Coeff.one()),
    (_random_bool, B_ZERO, B_ONE),
])
def test_semiring_laws(sampler, zero, one):
    rng = random.Random(3)
    for _ in range(100):
        a, b, c = sampler(rng), sampler(rng), sampler(rng)
        assert semiring_add(semiring_add(a, b), c) == semiring_add(a, semiring_add(b, c))
        assert semiring_add(a, b) == semiring_add(b, a)
        assert semiring_mul(semiring_mul(a, b), c) == semiring_mul(a, semiring_mul(b, c))
        assert semiring_mul(a, semiring_add(b, c)) == semiring_add(
            semiring_mul(a, b), semiring_mul(a, c)
        )
        assert semiring_add(zero, a) == a
        assert semiring_mul(one, a) == a
        assert semiring_mul(zero, a) == zero


def test_boolean_idempotent_addition():
    for a in (B_ZERO, B_ONE):
        assert a + a == a


def test_formal_addition_refused():
    root3 = Coeff(fp_pow(fp_from_rational(3), Fraction(1, 2)))
    with pytest.raises(FormalAdditionError):
        root3 + root3
    with pytest.raises(FormalAdditionError):
        root3 + Coeff.one()
    # multiplication of formal powers stays exact
    assert root3 * root3 == Coeff.from_rational(3)


def test_equality_is_on_exponent_vectors():
    a = fp_pow(fp_from_rational(4), Fraction(1, 2))
    assert a == fp_from_rational(2)
    assert hash(a) == hash(fp_from_rational(2))


def test_coeff_json_round_trip():
    for value in ("3", "9/4", "1/17"):
        c = coeff_from_json(value, "Q")
        assert coeff_to_json(c) == value
    formal = {"factors": {"3": "1/2"}}
    c = coeff_from_json(formal, "Q")
    assert coeff_to_json(c) == formal
    assert coeff_from_json("1", "B") == B_ONE
    with pytest.raises(ValueError):
        coeff_from_json("2", "B")
    with pytest.raises(ValueError):
        coeff_from_json("-1", "Q")
    with pytest.raises(ValueError):
        coeff_from_json({"bogus": 1}, "Q")


def test_bool_rejects_other_values():
    with pytest.raises(ValueError):
        Bool(2)
