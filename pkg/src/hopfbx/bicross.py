"""The standard bicrossproduct model built from an exact factorization.

Given G = G+G-, the Hopf algebra on basis {g} has

    {g}{h}   = {g h-}            when gbar+ = h+, else 0
    Delta{g} = sum {h} (x) {k}   over h+ k = g with kbar- = h-
    1        = sum over G+ of {g+}
    eps{g}   = 1 iff g+ = e
    S{g}     = {g^-1}

with every coefficient equal to 1.  The same support data, read as
relations, is the correspondence-Hopf presentation.
"""

from __future__ import annotations

from .coeff import SEMIRING_Q, semiring_one
from .groups import ExactFactorization
from .hopf import HopfData


def build_bicrossproduct(f: ExactFactorization, semiring: str = SEMIRING_Q) -> HopfData:
    """The model H(G;G+,G-) over Q or B; basis order = group element order."""
    g = f.group
    n = g.order
    one = semiring_one(semiring)
    mult = {}
    for x in range(n):
        bx = f.beta_plus[x]
        for y in range(n):
            if bx == f.alpha_plus[y]:
                mult[(x, y, g.mul(x, f.beta_minus[y]))] = one
    comult = {}
    for h in range(n):
        ah = f.alpha_plus[h]
        bh = f.beta_minus[h]
        for k in range(n):
            if f.alpha_minus[k] == bh:
                comult[(g.mul(ah, k), h, k)] = one
    unit = {p: one for p in f.gplus}
    counit = {x: one for x in range(n) if f.alpha_plus[x] == 0}
    antipode = {(x, g.inv(x)): one for x in range(n)}
    basis = tuple(g.label(x) for x in range(n))
    return HopfData(semiring, n, basis, mult, comult, unit, counit, antipode)


def bicross_support(f: ExactFactorization):
    """The five relation sets of the model, as plain index tuples.

    Returns (mult_triples, comult_triples, unit_points, counit_points,
    antipode_pairs); this is the correspondence-Hopf presentation of f.
    """
    h = build_bicrossproduct(f, SEMIRING_Q)
    return (
        frozenset(h.mult),
        frozenset(h.comult),
        frozenset(h.unit),
        frozenset(h.counit),
        frozenset(h.antipode),
    )
