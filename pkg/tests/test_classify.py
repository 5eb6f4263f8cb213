"""The recovery pipeline: round trips, rescaling, and the error taxonomy."""

import random
from fractions import Fraction

import pytest

import hopfbx as hb
from hopfbx.classify import (
    ClassifyError,
    extract_negative_group,
    extract_positive_group,
    compute_projections,
    derive_actions,
    normalize_unit,
    solve_rescaling,
)
from hopfbx.coeff import B_ONE, Coeff
from hopfbx.groups import subgroup_as_group
from conftest import dual_group_algebra, group_algebra

ONE = Coeff.one()


def s3_model():
    s3 = hb.catalog_group("S3")
    f = hb.make_factorization(s3, (0, 2), (0, 3, 4))
    return f, hb.build_bicrossproduct(f)


def replace(h, **kw):
    parts = dict(
        mult=h.mult, comult=h.comult, unit=h.unit, counit=h.counit,
        antipode=h.antipode,
    )
    parts.update(kw)
    return hb.HopfData(h.semiring, h.dim, h.basis, parts["mult"], parts["comult"],
                       parts["unit"], parts["counit"], parts["antipode"])


def test_round_trip_standard_model():
    f, h = s3_model()
    res = hb.classify(h)
    assert all(t.is_one() for t in res.tau)
    assert all(c == ONE for c in res.normalization)
    assert hb.factorizations_isomorphic(res.factorization, f) is not None
    # the bijection realizes the input exactly as the rebuilt model
    model = hb.build_bicrossproduct(res.factorization)
    assert hb.permute_basis(h, list(res.basis_to_group)) == model
    # d-elements land in G+, e-elements in G-
    f2 = res.factorization
    for i in h.unit:
        assert res.basis_to_group[i] in set(f2.gplus)
    for i in h.counit:
        assert res.basis_to_group[i] in set(f2.gminus)


def test_normalize_unit_rescales_doubled_identity():
    # C2 group algebra written on the basis {2*1, x}
    h = hb.HopfData(
        "Q", 2, ("2e", "x"),
        {(0, 0, 0): Coeff.from_rational(2), (0, 1, 1): Coeff.from_rational(2),
         (1, 0, 1): Coeff.from_rational(2), (1, 1, 0): Coeff.from_rational(Fraction(1, 2))},
        {(0, 0, 0): Coeff.from_rational(Fraction(1, 2)), (1, 1, 1): ONE},
        {0: Coeff.from_rational(Fraction(1, 2))},
        {0: Coeff.from_rational(2), 1: ONE},
        {(0, 0): ONE, (1, 1): ONE},
    )
    h1, d_set, scales = normalize_unit(h)
    assert d_set == (0,)
    assert scales[0] == Coeff.from_rational(Fraction(1, 2))
    assert h1 == group_algebra(hb.catalog_group("C2"))


def test_normalize_unit_zero_unit():
    h = replace(group_algebra(hb.catalog_group("C2")), unit={})
    with pytest.raises(ClassifyError) as e:
        hb.classify(h)
    assert e.value.stage == "ZeroUnit"


def test_normalize_already_normalized_is_identity(all_factorizations):
    for name, f in all_factorizations[:25]:
        h = hb.build_bicrossproduct(f)
        h1, d_set, scales = normalize_unit(h)
        assert h1 == h
        assert d_set == f.gplus
        assert all(c == ONE for c in scales)


def test_extract_groups_standard_model():
    f, h = s3_model()
    gp = extract_positive_group(h, f.gplus)
    gm = extract_negative_group(h, f.gplus)
    assert hb.is_isomorphic_small(gp.group, hb.catalog_group("C2")) is not None
    assert hb.is_isomorphic_small(gm.group, hb.catalog_group("C3")) is not None
    assert gp.to_basis == f.gplus
    assert gm.to_basis == f.gminus


def test_extract_groups_prototypes():
    g = hb.catalog_group("D4")
    cg = group_algebra(g)
    gp = extract_positive_group(cg, (0,))
    gm = extract_negative_group(cg, (0,))
    assert gp.group.order == 1
    assert hb.is_isomorphic_small(gm.group, g) is not None
    dg = dual_group_algebra(g)
    gp = extract_positive_group(dg, tuple(range(8)))
    gm = extract_negative_group(dg, tuple(range(8)))
    assert hb.is_isomorphic_small(gp.group, g) is not None
    assert gm.group.order == 1


def test_projections_match_factorization():
    f, h = s3_model()
    gp = extract_positive_group(h, f.gplus)
    gm = extract_negative_group(h, f.gplus)
    proj = compute_projections(h, gp, gm)
    for b in range(6):
        assert gp.to_basis[proj.alpha_plus[b]] == f.alpha_plus[b]
        assert gp.to_basis[proj.beta_plus[b]] == f.beta_plus[b]
        assert gm.to_basis[proj.alpha_minus[b]] == f.alpha_minus[b]
        assert gm.to_basis[proj.beta_minus[b]] == f.beta_minus[b]
    # counit-group elements project to the identity on the plus side
    for b in f.gminus:
        assert proj.alpha_plus[b] == 0 and proj.beta_plus[b] == 0
    # idempotents project to themselves
    for b in f.gplus:
        assert gp.to_basis[proj.alpha_plus[b]] == b
        assert gp.to_basis[proj.beta_plus[b]] == b


def test_derived_action_matches_group_decomposition():
    f, h = s3_model()
    gp = extract_positive_group(h, f.gplus)
    gm = extract_negative_group(h, f.gplus)
    proj = compute_projections(h, gp, gm)
    act_left, act_right = derive_actions(h, proj, gp, gm)
    g = f.group
    for a, p in enumerate(gp.to_basis):
        for x, m in enumerate(gm.to_basis):
            pm = g.mul(p, m)
            assert gm.to_basis[act_left[a][x]] == f.alpha_minus[pm]
            assert gp.to_basis[act_right[a][x]] == f.beta_plus[pm]
    # concrete value: (12) acting on (123) from the left gives (132)
    labels = g.labels
    a = gp.pos[labels.index("(12)")]
    x = gm.pos[labels.index("(123)")]
    assert gm.to_basis[act_left[a][x]] == labels.index("(132)")


def test_not_bijective_size():
    # dual group algebra of C2 plus a third element carrying valid
    # projections: 3 != |G+| * |G-| = 2
    mult = {(0, 0, 0): ONE, (1, 1, 1): ONE, (1, 2, 2): ONE, (2, 1, 2): ONE}
    comult = {
        (0, 0, 0): ONE, (0, 1, 1): ONE, (1, 0, 1): ONE, (1, 1, 0): ONE,
        (2, 0, 2): ONE, (2, 2, 0): ONE,
    }
    h = hb.HopfData(
        "Q", 3, ("a", "b", "c"), mult, comult,
        {0: ONE, 1: ONE}, {0: ONE}, {(0, 0): ONE, (1, 1): ONE, (2, 2): ONE},
    )
    with pytest.raises(ClassifyError) as e:
        hb.classify(h)
    assert e.value.stage == "NotBijective"


def test_solve_rescaling_scaled_c2():
    # x replaced by 3x: x.x = 9*1, Delta(x) = (1/3) x(x)x; solving the
    # multiplicative system gives tau(x) = 3
    model = group_algebra(hb.catalog_group("C2"))
    h = hb.HopfData(
        "Q", 2, ("e", "x"),
        {(0, 0, 0): ONE, (0, 1, 1): ONE, (1, 0, 1): ONE,
         (1, 1, 0): Coeff.from_rational(9)},
        {(0, 0, 0): ONE, (1, 1, 1): Coeff.from_rational(Fraction(1, 3))},
        {0: ONE},
        {0: ONE, 1: Coeff.from_rational(3)},
        {(0, 0): ONE, (1, 1): ONE},
    )
    tau = solve_rescaling(h, model, (0, 1))
    assert tau[0].is_one()
    assert tau[1] == hb.fp_from_rational(3)
    # the full pipeline normalizes the counit first, so it sees tau = 1
    res = hb.classify(h)
    assert all(t.is_one() for t in res.tau)


def test_solve_rescaling_formal_root():
    # x.x = 3*1 with Delta(x) = x(x)x forces tau(x) = sqrt(3), a formal power
    model = group_algebra(hb.catalog_group("C2"))
    root3 = hb.fp_pow(hb.fp_from_rational(3), Fraction(1, 2))
    h = replace(model, mult={(0, 0, 0): ONE, (0, 1, 1): ONE, (1, 0, 1): ONE,
                             (1, 1, 0): Coeff.from_rational(3)},
                comult={(0, 0, 0): ONE, (1, 1, 1): ONE})
    with pytest.raises(ClassifyError):
        # the comult equation -t(x) = 0 contradicts 2 t(x) = log 3
        solve_rescaling(h, model, (0, 1))
    h2 = replace(h,
                 comult={(0, 0, 0): ONE, (1, 1, 1): Coeff(root3.inv())},
                 counit={0: ONE, 1: Coeff(root3)})
    tau = solve_rescaling(h2, model, (0, 1))
    assert tau[1] == root3


def test_doubled_coefficient_is_inconsistent():
    f, h = s3_model()
    de = set(f.gplus) | set(f.gminus)
    target = next(
        (i, j, k) for (i, j, k) in h.mult
        if i not in de and j not in de and k not in de
    )
    mult = dict(h.mult)
    mult[target] = Coeff.from_rational(2)
    with pytest.raises(ClassifyError) as e:
        hb.classify(replace(h, mult=mult))
    assert e.value.stage == "InconsistentSystem"


def _away_from_de(f, keys):
    de = set(f.gplus) | set(f.gminus)
    return next(k for k in keys if not (set(k) & de))


def test_deleted_product_entry_is_support_mismatch():
    f, h = s3_model()
    mult = dict(h.mult)
    del mult[_away_from_de(f, sorted(mult))]
    with pytest.raises(ClassifyError) as e:
        hb.classify(replace(h, mult=mult))
    assert e.value.stage == "SupportMismatch"


def test_broken_counit_rejected():
    f, h = s3_model()
    x = f.gminus[1]
    counit = dict(h.counit)
    counit[x] = Coeff.from_rational(2)
    with pytest.raises(ClassifyError) as e:
        hb.classify(replace(h, counit=counit))
    assert e.value.stage == "NotClosed"


def test_non_monomial_antipode_rejected():
    f, h = s3_model()
    antipode = dict(h.antipode)
    extra = next((i, j) for i in range(6) for j in range(6)
                 if (i, j) not in antipode)
    antipode[extra] = ONE  # second entry in row: S no longer monomial
    with pytest.raises(ClassifyError) as e:
        hb.classify(replace(h, antipode=antipode))
    assert e.value.stage == "SupportMismatch"


def test_rescale_and_permute_recovery():
    rng = random.Random(11)
    f, h = s3_model()
    for _ in range(10):
        scales = [
            Coeff.from_rational(Fraction(rng.randint(1, 20), rng.randint(1, 20)))
            for _ in range(6)
        ]
        perm = list(range(6))
        rng.shuffle(perm)
        h2 = hb.permute_basis(hb.rescale_basis(h, scales), perm)
        res = hb.classify(h2)
        assert hb.factorizations_isomorphic(res.factorization, f) is not None


def test_rescale_invariance_of_failure():
    # a corrupted model keeps failing (at the same stage) after rescaling
    f, h = s3_model()
    mult = dict(h.mult)
    del mult[_away_from_de(f, sorted(mult))]
    broken = replace(h, mult=mult)
    scales = [Coeff.from_rational(Fraction(k + 1, 2)) for k in range(6)]
    with pytest.raises(ClassifyError) as e1:
        hb.classify(broken)
    with pytest.raises(ClassifyError) as e2:
        hb.classify(hb.rescale_basis(broken, scales))
    assert e1.value.stage == e2.value.stage == "SupportMismatch"


def test_permutation_equivariance():
    f, h = s3_model()
    res1 = hb.classify(h)
    perm = [3, 5, 0, 2, 4, 1]
    res2 = hb.classify(hb.permute_basis(h, perm))
    # psi = bg2 o perm o bg1^-1 is an isomorphism of the recovered groups
    g1, g2 = res1.factorization.group, res2.factorization.group
    inv1 = {v: i for i, v in enumerate(res1.basis_to_group)}
    psi = [res2.basis_to_group[perm[inv1[x]]] for x in range(6)]
    for x in range(6):
        for y in range(6):
            assert psi[g1.mul(x, y)] == g2.mul(psi[x], psi[y])
    assert {psi[x] for x in res1.factorization.gplus} == set(res2.factorization.gplus)
    assert {psi[x] for x in res1.factorization.gminus} == set(res2.factorization.gminus)


def test_classify_boolean_round_trip(all_factorizations):
    for name, f in all_factorizations[:30]:
        hB = hb.build_bicrossproduct(f, "B")
        res = hb.classify_boolean(hB)
        assert res.tau is None
        assert hb.factorizations_isomorphic(res.factorization, f) is not None


def test_boolean_removed_comult_entry():
    f, h = s3_model()
    hB = hb.build_bicrossproduct(f, "B")
    de = set(f.gplus) | set(f.gminus)
    victim = next(
        (i, j, k) for (i, j, k) in hB.comult if j not in de and k not in de
    )
    comult = dict(hB.comult)
    del comult[victim]
    with pytest.raises(ClassifyError) as e:
        hb.classify_boolean(replace(hB, comult=comult))
    assert e.value.stage == "SupportMismatch"


def test_boolean_idempotent_violation():
    # unit = b0 + b1 with b0 b1 = b0 contradicts orthogonality of the d_i
    mult = {(0, 0, 0): B_ONE, (0, 1, 0): B_ONE, (1, 1, 1): B_ONE}
    h = hb.HopfData(
        "B", 2, ("b0", "b1"), mult,
        {(0, 0, 0): B_ONE, (1, 1, 1): B_ONE},
        {0: B_ONE, 1: B_ONE}, {0: B_ONE}, {(0, 0): B_ONE, (1, 1): B_ONE},
    )
    with pytest.raises(ClassifyError) as e:
        hb.classify_boolean(h)
    assert e.value.stage == "NotIdempotentSystem"


def test_entry_points_check_semiring():
    f, h = s3_model()
    hB = hb.build_bicrossproduct(f, "B")
    with pytest.raises(ValueError):
        hb.classify(hB)
    with pytest.raises(ValueError):
        hb.classify_boolean(h)


def test_lemma9_uniqueness_on_classified_inputs(all_factorizations):
    for name, f in all_factorizations[:40]:
        seen = {}
        for b in range(f.group.order):
            key = (f.alpha_plus[b], f.beta_minus[b])
            assert key not in seen
            seen[key] = b
        assert len(seen) == len(f.gplus) * len(f.gminus)
