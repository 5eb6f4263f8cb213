"""Recover (G, G+, G-), a basis bijection, and a rescaling from positive data.

The pipeline mirrors the structural facts that make positively based Hopf
algebras rigid, stage by stage:

  normalize_unit          rescale so 1 = sum d_i and eps = sum e_i*
  extract_positive_group  the d_i form the dual group algebra of G+
  extract_negative_group  the counit-support elements form G- in H
  compute_projections     each b has unique alpha+/beta+/alpha-/beta-
  derive_actions          b <-> (g+, g-) is bijective; actions + matching laws
  assemble_model          Zappa-Szep reconstruction; support must match the
                          standard model exactly
  solve_rescaling         exact multiplicative solve for tau with all
                          structure constants mapping to 1

Each stage raises ClassifyError with a stage name and witness, so a failure
pinpoints exactly which structural property the input violates.  Stage
names: ZeroUnit, CounitNotOne, NotIdempotentSystem, NotAGroup, NotClosed,
ProjectionNotUnique, CoefficientNotOne, Lemma5Violation, NotBijective,
NotAnAction, MatchingViolation, SupportMismatch, InconsistentSystem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import groups as _groups
from .bicross import build_bicrossproduct
from .coeff import (
    SEMIRING_B,
    SEMIRING_Q,
    Coeff,
    FactoredPositive,
    semiring_one,
)
from .groups import ExactFactorization, FiniteGroup, check_group, zappa_szep
from .hopf import HopfData, permute_basis, rescale_basis

STAGES = (
    "ZeroUnit",
    "CounitNotOne",
    "NotIdempotentSystem",
    "NotAGroup",
    "NotClosed",
    "ProjectionNotUnique",
    "CoefficientNotOne",
    "Lemma5Violation",
    "NotBijective",
    "NotAnAction",
    "MatchingViolation",
    "SupportMismatch",
    "InconsistentSystem",
)


class ClassifyError(ValueError):
    """Classification failure: stage identifier plus a witness tuple."""

    def __init__(self, stage: str, witness: tuple = ()):
        self.stage = stage
        self.witness = witness
        super().__init__(f"{stage} at {witness}")


@dataclass
class GroupExtraction:
    """An abstract group carried by specific basis elements."""

    group: FiniteGroup
    to_basis: tuple[int, ...]  # position in group -> basis index
    pos: dict[int, int]  # basis index -> position in group


@dataclass
class Projections:
    """Positions of alpha+/beta+ (in G+) and alpha-/beta- (in G-) per element."""

    alpha_plus: tuple[int, ...]
    beta_plus: tuple[int, ...]
    alpha_minus: tuple[int, ...]
    beta_minus: tuple[int, ...]


@dataclass
class ClassificationResult:
    factorization: ExactFactorization
    basis_to_group: tuple[int, ...]
    tau: tuple[FactoredPositive, ...] | None
    normalization: tuple


def normalize_unit(h: HopfData):
    """Rescale unit-support elements so 1 = sum d_i, then counit-support
    elements so eps = sum e_i*.  Returns (H', d_set, scales)."""
    if not h.unit:
        raise ClassifyError("ZeroUnit")
    one = h.one()
    if h.semiring == SEMIRING_B:
        d_set = tuple(sorted(h.unit))
        return h, d_set, tuple(one for _ in range(h.dim))
    scales = [Coeff.one()] * h.dim
    for i, c in h.unit.items():
        scales[i] = c
    h1 = rescale_basis(h, scales)
    d_set = tuple(sorted(h1.unit))
    scales2 = [Coeff.one()] * h.dim
    for i, c in h1.counit.items():
        if i in h1.unit:
            # shared element (the identity d_e); its scale is already pinned
            if c != one:
                raise ClassifyError("CounitNotOne", (i,))
        else:
            scales2[i] = c.inverse()
    h2 = rescale_basis(h1, scales2)
    total = tuple(scales[i] * scales2[i] for i in range(h.dim))
    return h2, d_set, total


def extract_positive_group(h: HopfData, d_set) -> GroupExtraction:
    """Read the group G+ off the idempotent system d_1..d_k and its coproduct."""
    one = h.one()
    dset = list(d_set)
    din = set(dset)
    mult = h.mult_rows()
    for i in dset:
        for j in dset:
            row = mult.get((i, j), [])
            if i == j:
                if row != [(i, one)]:
                    raise ClassifyError("NotIdempotentSystem", (i, j))
            elif row:
                raise ClassifyError("NotIdempotentSystem", (i, j))
    eps_support = [i for i in dset if i in h.counit]
    if len(eps_support) != 1 or h.counit[eps_support[0]] != one:
        raise ClassifyError("NotAGroup", tuple(eps_support))
    ident = eps_support[0]
    # group law: h * k = g  iff  Delta(d_g) contains d_h (x) d_k
    op: dict[tuple[int, int], int] = {}
    for g in dset:
        for (j, k, c) in h.comult_rows().get(g, ()):
            if j not in din or k not in din or c != one:
                raise ClassifyError("NotAGroup", (g, j, k))
            if (j, k) in op:
                raise ClassifyError("NotAGroup", (j, k, op[(j, k)], g))
            op[(j, k)] = g
    if len(op) != len(dset) ** 2:
        raise ClassifyError("NotAGroup", ("incomplete", len(op)))
    order = [ident] + sorted(i for i in dset if i != ident)
    pos = {b: p for p, b in enumerate(order)}
    table = tuple(
        tuple(pos[op[(x, y)]] for y in order) for x in order
    )
    report = check_group(table)
    if not report.ok:
        raise ClassifyError("NotAGroup", report.violations[0])
    labels = tuple(h.basis[b] for b in order)
    return GroupExtraction(FiniteGroup(table, "G+", labels), tuple(order), pos)


def extract_negative_group(h: HopfData, d_set=None) -> GroupExtraction:
    """Read the group G- off the counit-support elements under the product."""
    one = h.one()
    eset = sorted(h.counit)
    if not eset:
        raise ClassifyError("NotClosed", ("empty counit",))
    for i in eset:
        if h.counit[i] != one:
            raise ClassifyError("CoefficientNotOne", (i,))
    ein = set(eset)
    mult = h.mult_rows()
    op: dict[tuple[int, int], int] = {}
    for x in eset:
        for y in eset:
            row = mult.get((x, y), [])
            if len(row) != 1 or row[0][1] != one or row[0][0] not in ein:
                raise ClassifyError("NotClosed", (x, y))
            op[(x, y)] = row[0][0]
    ident = None
    for t in eset:
        if all(op[(t, x)] == x and op[(x, t)] == x for x in eset):
            ident = t
            break
    if ident is None:
        raise ClassifyError("NotAGroup", ("no identity in counit support",))
    if d_set is not None and ident not in set(d_set):
        raise ClassifyError("NotAGroup", ("identity not a unit element", ident))
    order = [ident] + [i for i in eset if i != ident]
    pos = {b: p for p, b in enumerate(order)}
    table = tuple(tuple(pos[op[(x, y)]] for y in order) for x in order)
    report = check_group(table)
    if not report.ok:
        raise ClassifyError("NotAGroup", report.violations[0])
    labels = tuple(h.basis[b] for b in order)
    return GroupExtraction(FiniteGroup(table, "G-", labels), tuple(order), pos)


def compute_projections(
    h: HopfData, gp: GroupExtraction, gm: GroupExtraction
) -> Projections:
    """Unique left/right unit-idempotent actions and counit-group coproduct
    terms give the four projection maps on the basis."""
    one = h.one()
    n = h.dim
    mult = h.mult_rows()
    com = h.comult_rows()
    ein = set(gm.to_basis)
    ap = [-1] * n
    bp = [-1] * n
    am = [-1] * n
    bm = [-1] * n
    for b in range(n):
        left = [d for d in gp.to_basis if mult.get((d, b))]
        if len(left) != 1:
            raise ClassifyError("ProjectionNotUnique", (b, "left", len(left)))
        if mult[(left[0], b)] != [(b, one)]:
            raise ClassifyError("CoefficientNotOne", (left[0], b))
        ap[b] = gp.pos[left[0]]
        right = [d for d in gp.to_basis if mult.get((b, d))]
        if len(right) != 1:
            raise ClassifyError("ProjectionNotUnique", (b, "right", len(right)))
        if mult[(b, right[0])] != [(b, one)]:
            raise ClassifyError("CoefficientNotOne", (b, right[0]))
        bp[b] = gp.pos[right[0]]
        lterms = [(j, k, c) for (j, k, c) in com.get(b, ()) if j in ein]
        if len(lterms) != 1:
            raise ClassifyError("ProjectionNotUnique", (b, "comult-left", len(lterms)))
        j, k, c = lterms[0]
        if k != b or c != one:
            raise ClassifyError("CoefficientNotOne", (b, j, k))
        am[b] = gm.pos[j]
        rterms = [(j, k, c) for (j, k, c) in com.get(b, ()) if k in ein]
        if len(rterms) != 1:
            raise ClassifyError("ProjectionNotUnique", (b, "comult-right", len(rterms)))
        j, k, c = rterms[0]
        if j != b or c != one:
            raise ClassifyError("CoefficientNotOne", (b, j, k))
        bm[b] = gm.pos[k]
    # alpha+(b) = e  iff  beta+(b) = e  iff  b is a counit-support element
    for b in range(n):
        in_gm = b in ein
        if (ap[b] == 0) != in_gm or (bp[b] == 0) != in_gm:
            raise ClassifyError("Lemma5Violation", (b,))
    return Projections(tuple(ap), tuple(bp), tuple(am), tuple(bm))


def derive_actions(h: HopfData, proj: Projections, gp: GroupExtraction, gm: GroupExtraction):
    """Check b <-> (alpha+, beta-) and b <-> (beta+, alpha-) are bijections
    and read off the right/left actions; verify action and matching laws."""
    n = h.dim
    np_, nm = gp.group.order, gm.group.order
    if n != np_ * nm:
        raise ClassifyError("NotBijective", ("size", n, np_, nm))
    inv1: dict[tuple[int, int], int] = {}
    inv2: dict[tuple[int, int], int] = {}
    for b in range(n):
        key1 = (proj.alpha_plus[b], proj.beta_minus[b])
        if key1 in inv1:
            raise ClassifyError("NotBijective", (inv1[key1], b))
        inv1[key1] = b
        key2 = (proj.beta_plus[b], proj.alpha_minus[b])
        if key2 in inv2:
            raise ClassifyError("NotBijective", (inv2[key2], b))
        inv2[key2] = b
    act_left = [[0] * nm for _ in range(np_)]
    act_right = [[0] * nm for _ in range(np_)]
    for a in range(np_):
        for x in range(nm):
            b = inv1[(a, x)]
            act_right[a][x] = proj.beta_plus[b]
            act_left[a][x] = proj.alpha_minus[b]
    try:
        _groups._check_matched_pair_tables(gp.group, gm.group, act_left, act_right)
    except _groups.NotAnAction as e:
        raise ClassifyError("NotAnAction", (str(e),)) from None
    except _groups.MatchingViolation as e:
        raise ClassifyError("MatchingViolation", (str(e),)) from None
    return act_left, act_right


def assemble_model(
    h: HopfData,
    gp: GroupExtraction,
    gm: GroupExtraction,
    proj: Projections,
    act_left,
    act_right,
):
    """Reconstruct G by Zappa-Szep product and match the input's support
    against the standard model.  Returns (factorization, basis_to_group,
    model)."""
    try:
        f = zappa_szep(gp.group, gm.group, act_left, act_right, name="G")
    except _groups.NotAnAction as e:  # pragma: no cover - derive_actions checked
        raise ClassifyError("NotAnAction", (str(e),)) from None
    except _groups.MatchingViolation as e:  # pragma: no cover
        raise ClassifyError("MatchingViolation", (str(e),)) from None
    np_ = gp.group.order
    b2g = tuple(
        proj.alpha_minus[b] * np_ + proj.beta_plus[b] for b in range(h.dim)
    )
    model = build_bicrossproduct(f, h.semiring)

    def compare(side: str, got: set, want: set) -> None:
        extra = got - want
        missing = want - got
        if extra:
            raise ClassifyError("SupportMismatch", (side, "unexpected", min(extra)))
        if missing:
            raise ClassifyError("SupportMismatch", (side, "missing", min(missing)))

    phi = b2g
    compare(
        "mult",
        {(phi[i], phi[j], phi[k]) for (i, j, k) in h.mult},
        set(model.mult),
    )
    compare(
        "comult",
        {(phi[i], phi[j], phi[k]) for (i, j, k) in h.comult},
        set(model.comult),
    )
    compare(
        "antipode",
        {(phi[i], phi[j]) for (i, j) in h.antipode},
        set(model.antipode),
    )
    compare("unit", {phi[i] for i in h.unit}, set(model.unit))
    compare("counit", {phi[i] for i in h.counit}, set(model.counit))
    return f, b2g, model


def _solve_exact(rows, rhs, ncols):
    """Gauss-Jordan over Fractions with stacked right-hand sides.

    rows: m sparse dicts col->Fraction; rhs: m lists of Fractions (equal
    width).  Returns an ncols x width solution with free variables at 0,
    or None when inconsistent.
    """
    width = len(rhs[0]) if rhs else 0
    aug = []
    for row, r in zip(rows, rhs):
        dense = [Fraction(0)] * ncols
        for c, v in row.items():
            dense[c] = Fraction(v)
        aug.append((dense, [Fraction(x) for x in r]))
    m = len(aug)
    pivots = []
    prow = 0
    for col in range(ncols):
        pr = next((r for r in range(prow, m) if aug[r][0][col] != 0), None)
        if pr is None:
            continue
        aug[prow], aug[pr] = aug[pr], aug[prow]
        pv = aug[prow][0][col]
        for r in range(m):
            if r == prow or aug[r][0][col] == 0:
                continue
            factor = aug[r][0][col] / pv
            arow, arhs = aug[r]
            brow, brhs = aug[prow]
            for c in range(col, ncols):
                if brow[c]:
                    arow[c] -= factor * brow[c]
            for c in range(width):
                if brhs[c]:
                    arhs[c] -= factor * brhs[c]
        pivots.append((prow, col))
        prow += 1
        if prow == m:
            break
    for r in range(prow, m):
        if any(aug[r][1]) and not any(aug[r][0]):
            return None
    # rows past the pivot block have zero coefficient parts by construction
    for r in range(prow, m):
        if any(aug[r][1]):
            return None
    sol = [[Fraction(0)] * width for _ in range(ncols)]
    for r, col in pivots:
        arow, arhs = aug[r]
        pv = arow[col]
        # free variables are 0, so trailing non-pivot columns drop out
        for c in range(width):
            sol[col][c] = arhs[c] / pv
    return sol


def solve_rescaling(h: HopfData, model: HopfData, basis_to_group) -> tuple[FactoredPositive, ...]:
    """Solve for tau with lambda = tau(g)tau(h)/tau(gh-), mu = tau(h+k)/
    (tau(h)tau(k)), nu = tau(g)/tau(g^-1), working on prime exponent
    vectors; certify by rescaling and comparing with the model exactly."""
    if h.semiring != SEMIRING_Q:
        raise ClassifyError("InconsistentSystem", ("semiring", h.semiring))
    primes: set[int] = set()
    entries = []
    # weights as pair lists: repeated indices (diagonal entries) must add up
    for (i, j, k), c in h.mult.items():
        entries.append(([(i, 1), (j, 1), (k, -1)], c))
    for (i, j, k), c in h.comult.items():
        entries.append(([(i, 1), (j, -1), (k, -1)], c))
    for (i, j), c in h.antipode.items():
        entries.append(([(i, 1), (j, -1)], c))
    for _, c in entries:
        primes.update(c.fp.exponents())
    plist = sorted(primes)
    pidx = {p: t for t, p in enumerate(plist)}
    rows = []
    rhs = []
    for coeffs, c in entries:
        combined: dict[int, int] = {}
        for idx, w in coeffs:
            combined[idx] = combined.get(idx, 0) + w
        rows.append({i: Fraction(w) for i, w in combined.items() if w})
        vec = [Fraction(0)] * len(plist)
        for p, e in c.fp.exponents().items():
            vec[pidx[p]] = e
        rhs.append(vec)
    sol = _solve_exact(rows, rhs, h.dim)
    if sol is None:
        raise ClassifyError("InconsistentSystem", ("no solution",))
    tau = tuple(
        FactoredPositive({plist[t]: sol[i][t] for t in range(len(plist))})
        for i in range(h.dim)
    )
    scales = [Coeff(t.inv()) for t in tau]
    rescaled = permute_basis(rescale_basis(h, scales), list(basis_to_group))
    if not (
        rescaled.mult == model.mult
        and rescaled.comult == model.comult
        and rescaled.unit == model.unit
        and rescaled.counit == model.counit
        and rescaled.antipode == model.antipode
    ):
        raise ClassifyError("InconsistentSystem", ("certificate failed",))
    return tau


def _run_pipeline(h: HopfData) -> ClassificationResult:
    h1, d_set, norm = normalize_unit(h)
    gp = extract_positive_group(h1, d_set)
    gm = extract_negative_group(h1, d_set)
    proj = compute_projections(h1, gp, gm)
    act_left, act_right = derive_actions(h1, proj, gp, gm)
    f, b2g, model = assemble_model(h1, gp, gm, proj, act_left, act_right)
    if h.semiring == SEMIRING_Q:
        tau = solve_rescaling(h1, model, b2g)
    else:
        tau = None
    return ClassificationResult(f, b2g, tau, norm)


def classify(h: HopfData) -> ClassificationResult:
    """Full pipeline for rational data; raises ClassifyError on failure."""
    if h.semiring != SEMIRING_Q:
        raise ValueError("classify expects semiring Q; use classify_boolean")
    return _run_pipeline(h)


def classify_boolean(h: HopfData) -> ClassificationResult:
    """Boolean pipeline: identical stages with all scaling steps skipped."""
    if h.semiring != SEMIRING_B:
        raise ValueError("classify_boolean expects semiring B")
    return _run_pipeline(h)
