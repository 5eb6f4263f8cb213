"""Shared fixtures and independent oracle constructions for the test bed."""

import pytest

import hopfbx as hb
from hopfbx.coeff import Coeff


def catalog_factorizations():
    """Every (group name, exact factorization) pair in the bundled catalog."""
    pairs = []
    for name in hb.catalog_names():
        g = hb.catalog_group(name)
        for gp, gm in hb.enumerate_exact_factorizations(g):
            pairs.append((name, hb.make_factorization(g, gp, gm)))
    return pairs


@pytest.fixture(scope="session")
def all_factorizations():
    return catalog_factorizations()


def group_algebra(g: hb.FiniteGroup) -> hb.HopfData:
    """Group algebra presentation built from first principles:
    {g}{h} = {gh}, Delta{g} = {g}(x){g}, 1 = {e}, eps = 1, S{g} = {g^-1}."""
    one = Coeff.one()
    n = g.order
    mult = {(i, j, g.mul(i, j)): one for i in range(n) for j in range(n)}
    comult = {(i, i, i): one for i in range(n)}
    unit = {0: one}
    counit = {i: one for i in range(n)}
    antipode = {(i, g.inv(i)): one for i in range(n)}
    basis = tuple(g.label(i) for i in range(n))
    return hb.HopfData("Q", n, basis, mult, comult, unit, counit, antipode)


def dual_group_algebra(g: hb.FiniteGroup) -> hb.HopfData:
    """Function algebra presentation: delta_g delta_h = [g=h] delta_g,
    Delta(delta_g) = sum over hk=g, 1 = sum delta_g, eps = ev at e."""
    one = Coeff.one()
    n = g.order
    mult = {(i, i, i): one for i in range(n)}
    comult = {
        (g.mul(i, j), i, j): one for i in range(n) for j in range(n)
    }
    unit = {i: one for i in range(n)}
    counit = {0: one}
    antipode = {(i, g.inv(i)): one for i in range(n)}
    basis = tuple(f"d_{g.label(i)}" for i in range(n))
    return hb.HopfData("Q", n, basis, mult, comult, unit, counit, antipode)
