"""Finite sets with relations as morphisms, and Hopf objects therein.

A correspondence from X to Y is a subset of X x Y.  The power-set functor
P sends X to the free B-module P(X) and a relation F to the union-preserving
map P_F, identifying correspondence Hopf algebras with free B-Hopf algebras;
classification is then the Boolean pipeline.

Product sets are always indexed row-major: (x, y) in X x Y has index
x*|Y| + y.  This is the one convention the file formats must agree on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bicross import build_bicrossproduct
from .classify import ClassificationResult, ClassifyError, classify_boolean
from .coeff import B_ONE, SEMIRING_B
from .groups import ExactFactorization
from .hopf import HopfData, verify_axioms


@dataclass(frozen=True)
class Correspondence:
    """A relation between index sets of the given sizes (set semantics)."""

    dom_size: int
    cod_size: int
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", frozenset((int(x), int(y)) for x, y in self.pairs)
        )
        for (x, y) in self.pairs:
            if not (0 <= x < self.dom_size and 0 <= y < self.cod_size):
                raise ValueError(f"pair {(x, y)} out of range")

    def __repr__(self) -> str:
        return f"Correspondence({self.dom_size}->{self.cod_size}, {len(self.pairs)} pairs)"


def identity_corr(n: int) -> Correspondence:
    return Correspondence(n, n, {(x, x) for x in range(n)})


def compose(f: Correspondence, g: Correspondence) -> Correspondence:
    """Relational composite: (x, z) iff some y has (x, y) in f, (y, z) in g."""
    if f.cod_size != g.dom_size:
        raise ValueError(
            f"cannot compose {f.cod_size} -> {g.dom_size} mismatched sizes"
        )
    by_y: dict[int, list[int]] = {}
    for (y, z) in g.pairs:
        by_y.setdefault(y, []).append(z)
    pairs = {(x, z) for (x, y) in f.pairs for z in by_y.get(y, ())}
    return Correspondence(f.dom_size, g.cod_size, pairs)


def tensor_corr(f: Correspondence, g: Correspondence) -> Correspondence:
    """Product relation on the row-major product sets."""
    pairs = {
        (x1 * g.dom_size + x2, y1 * g.cod_size + y2)
        for (x1, y1) in f.pairs
        for (x2, y2) in g.pairs
    }
    return Correspondence(f.dom_size * g.dom_size, f.cod_size * g.cod_size, pairs)


def power_functor(f: Correspondence) -> list[list[int]]:
    """Boolean matrix of P_F on singletons: rows indexed by dom, cols by cod."""
    mat = [[0] * f.cod_size for _ in range(f.dom_size)]
    for (x, y) in f.pairs:
        mat[x][y] = 1
    return mat


def bool_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            if a[i][k]:
                for j in range(cols):
                    if b[k][j]:
                        out[i][j] = 1
    return out


def bool_kron(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    out = [[0] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            if a[i][j]:
                for k in range(rb):
                    for l in range(cb):
                        if b[k][l]:
                            out[i * rb + k][j * cb + l] = 1
    return out


@dataclass(frozen=True)
class CorrespondenceHopf:
    """The five relations of a Hopf object in the correspondence category."""

    size: int
    m: Correspondence          # (X x X) -> X
    delta: Correspondence      # X -> (X x X)
    unit: Correspondence       # pt -> X
    counit: Correspondence     # X -> pt
    antipode: Correspondence   # X -> X

    def __post_init__(self):
        n = self.size
        shapes = (
            ("m", self.m, n * n, n),
            ("delta", self.delta, n, n * n),
            ("unit", self.unit, 1, n),
            ("counit", self.counit, n, 1),
            ("antipode", self.antipode, n, n),
        )
        for name, rel, dom, cod in shapes:
            if rel.dom_size != dom or rel.cod_size != cod:
                raise ValueError(
                    f"{name} has shape {rel.dom_size}->{rel.cod_size}, "
                    f"expected {dom}->{cod}"
                )


def to_boolean_hopf(c: CorrespondenceHopf) -> HopfData:
    """Apply the power-set functor: relations become B structure constants."""
    n = c.size
    mult = {}
    for (xy, z) in c.m.pairs:
        mult[(xy // n, xy % n, z)] = B_ONE
    comult = {}
    for (x, yz) in c.delta.pairs:
        comult[(x, yz // n, yz % n)] = B_ONE
    unit = {y: B_ONE for (_, y) in c.unit.pairs}
    counit = {x: B_ONE for (x, _) in c.counit.pairs}
    antipode = {(x, y): B_ONE for (x, y) in c.antipode.pairs}
    return HopfData(SEMIRING_B, n, None, mult, comult, unit, counit, antipode)


def from_boolean_hopf(h: HopfData) -> CorrespondenceHopf:
    """Inverse translation; the basis of a free B-module is unique, so this
    loses nothing."""
    if h.semiring != SEMIRING_B:
        raise ValueError("from_boolean_hopf expects a B-Hopf algebra")
    n = h.dim
    return CorrespondenceHopf(
        size=n,
        m=Correspondence(n * n, n, {(i * n + j, k) for (i, j, k) in h.mult}),
        delta=Correspondence(n, n * n, {(i, j * n + k) for (i, j, k) in h.comult}),
        unit=Correspondence(1, n, {(0, i) for i in h.unit}),
        counit=Correspondence(n, 1, {(i, 0) for i in h.counit}),
        antipode=Correspondence(n, n, set(h.antipode)),
    )


def build_correspondence_hopf(f: ExactFactorization) -> CorrespondenceHopf:
    """The explicit relation sets of the classification:

        m     = {(g-h+, h+k-, g-h+k-)}
        Delta = {(g+h-k+, g+h-, h-k+)}
        1     = {(pt, g+)},  eps = {(g-, pt)},  S = {(g, g^-1)}
    """
    g = f.group
    n = g.order
    m_pairs = set()
    for hp in f.gplus:
        for gm in f.gminus:
            x = g.mul(gm, hp)
            for km in f.gminus:
                y = g.mul(hp, km)
                m_pairs.add((x * n + y, g.mul(x, km)))
    d_pairs = set()
    for hm in f.gminus:
        for gp in f.gplus:
            x = g.mul(gp, hm)
            for kp in f.gplus:
                y = g.mul(hm, kp)
                d_pairs.add((g.mul(x, kp), x * n + y))
    return CorrespondenceHopf(
        size=n,
        m=Correspondence(n * n, n, m_pairs),
        delta=Correspondence(n, n * n, d_pairs),
        unit=Correspondence(1, n, {(0, p) for p in f.gplus}),
        counit=Correspondence(n, 1, {(x, 0) for x in f.gminus}),
        antipode=Correspondence(n, n, {(x, g.inv(x)) for x in range(n)}),
    )


def classify_correspondence(c: CorrespondenceHopf) -> ClassificationResult:
    """Translate to a B-Hopf algebra, verify the Hopf diagrams, run the
    Boolean classification, and check the five relations reproduce the
    canonical sets under the recovered relabeling."""
    h = to_boolean_hopf(c)
    report = verify_axioms(h)
    if not report.ok:
        name, witness = report.failures()[0]
        raise ClassifyError("AxiomViolation", (name,) + tuple(witness))
    result = classify_boolean(h)
    phi = result.basis_to_group
    n = c.size
    expected = build_correspondence_hopf(result.factorization)
    relabeled = CorrespondenceHopf(
        size=n,
        m=Correspondence(
            n * n,
            n,
            {(phi[xy // n] * n + phi[xy % n], phi[z]) for (xy, z) in c.m.pairs},
        ),
        delta=Correspondence(
            n,
            n * n,
            {(phi[x], phi[yz // n] * n + phi[yz % n]) for (x, yz) in c.delta.pairs},
        ),
        unit=Correspondence(1, n, {(0, phi[y]) for (_, y) in c.unit.pairs}),
        counit=Correspondence(n, 1, {(phi[x], 0) for (x, _) in c.counit.pairs}),
        antipode=Correspondence(n, n, {(phi[x], phi[y]) for (x, y) in c.antipode.pairs}),
    )
    for name in ("m", "delta", "unit", "counit", "antipode"):
        got = getattr(relabeled, name).pairs
        want = getattr(expected, name).pairs
        if got != want:
            diff = min(got.symmetric_difference(want))
            raise ClassifyError("RelationMismatch", (name,) + diff)
    return result
