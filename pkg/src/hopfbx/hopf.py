"""Structure-constant container for bialgebras/Hopf algebras over Q or B.

Tensors are sparse dicts: mult[(i, j, k)] is the coefficient of b_k in
b_i b_j, comult[(i, j, k)] the coefficient of b_j (x) b_k in Delta(b_i),
unit[i] and counit[i] the unit/counit coordinates, antipode[(i, j)] the
coefficient of b_j in S(b_i).  Zero entries are never stored; since both
semirings have no additive cancellation, supports only ever grow under
addition, which keeps all support reasoning exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import (
    SEMIRING_B,
    SEMIRING_Q,
    Bool,
    Coeff,
    SemiringElement,
    semiring_one,
)


class HopfError(ValueError):
    """Invalid Hopf-algebra-level input."""


class AntipodeNotInvertible(HopfError):
    """The antipode matrix cannot be inverted in the monomial sense."""


class NotMonomial(AntipodeNotInvertible):
    """The antipode matrix is not monomial (one positive entry per row/column).

    For positively based input this signals the data is not actually
    positively based: in that setting the antipode must permute the basis
    up to positive scale.
    """


def _acc(d: dict, key, value) -> None:
    cur = d.get(key)
    d[key] = value if cur is None else cur + value


class HopfData:
    """Immutable-by-convention holder of the five structure tensors."""

    def __init__(self, semiring, dim, basis, mult, comult, unit, counit, antipode):
        if semiring not in (SEMIRING_Q, SEMIRING_B):
            raise HopfError(f"unknown semiring {semiring!r}")
        if dim < 1:
            raise HopfError("dim must be >= 1")
        self.semiring = semiring
        self.dim = dim
        self.basis = tuple(basis) if basis is not None else tuple(
            f"b{i}" for i in range(dim)
        )
        if len(self.basis) != dim:
            raise HopfError("basis labels length != dim")
        self.mult = dict(mult)
        self.comult = dict(comult)
        self.unit = dict(unit)
        self.counit = dict(counit)
        self.antipode = dict(antipode)
        self._check_ranges()
        self._mult_rows = None
        self._comult_rows = None
        self._antipode_rows = None
        self._mult_by_output = None

    def _check_ranges(self) -> None:
        n = self.dim
        for (i, j, k) in self.mult:
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise HopfError(f"mult index out of range: {(i, j, k)}")
        for (i, j, k) in self.comult:
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise HopfError(f"comult index out of range: {(i, j, k)}")
        for d in (self.unit, self.counit):
            for i in d:
                if not 0 <= i < n:
                    raise HopfError(f"vector index out of range: {i}")
        for (i, j) in self.antipode:
            if not (0 <= i < n and 0 <= j < n):
                raise HopfError(f"antipode index out of range: {(i, j)}")

    # --- cached sparse views ------------------------------------------------

    def mult_rows(self) -> dict[tuple[int, int], list[tuple[int, SemiringElement]]]:
        if self._mult_rows is None:
            rows: dict = {}
            for (i, j, k), c in self.mult.items():
                rows.setdefault((i, j), []).append((k, c))
            self._mult_rows = rows
        return self._mult_rows

    def comult_rows(self) -> dict[int, list[tuple[int, int, SemiringElement]]]:
        if self._comult_rows is None:
            rows: dict = {}
            for (i, j, k), c in self.comult.items():
                rows.setdefault(i, []).append((j, k, c))
            self._comult_rows = rows
        return self._comult_rows

    def antipode_rows(self) -> dict[int, list[tuple[int, SemiringElement]]]:
        if self._antipode_rows is None:
            rows: dict = {}
            for (i, j), c in self.antipode.items():
                rows.setdefault(i, []).append((j, c))
            self._antipode_rows = rows
        return self._antipode_rows

    def mult_by_output(self) -> dict[int, list[tuple[int, int, SemiringElement]]]:
        if self._mult_by_output is None:
            rows: dict = {}
            for (i, j, k), c in self.mult.items():
                rows.setdefault(k, []).append((i, j, c))
            self._mult_by_output = rows
        return self._mult_by_output

    def one(self) -> SemiringElement:
        return semiring_one(self.semiring)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HopfData):
            return NotImplemented
        return (
            self.semiring == other.semiring
            and self.dim == other.dim
            and self.mult == other.mult
            and self.comult == other.comult
            and self.unit == other.unit
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    def __repr__(self) -> str:
        return (
            f"HopfData({self.semiring}, dim={self.dim}, "
            f"nnz={len(self.mult)}/{len(self.comult)})"
        )


AXIOM_NAMES = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comult_multiplicative",
    "counit_multiplicative",
    "comult_of_unit",
    "counit_of_unit",
    "antipode_left",
    "antipode_right",
)


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom status; witness is the first failing index tuple or None."""

    status: tuple[tuple[str, tuple | None], ...]

    @property
    def ok(self) -> bool:
        return all(w is None for _, w in self.status)

    def failures(self) -> list[tuple[str, tuple]]:
        return [(name, w) for name, w in self.status if w is not None]

    def summary(self) -> str:
        if self.ok:
            return f"all {len(self.status)} axioms pass"
        lines = [f"{name} fails at {w}" for name, w in self.failures()]
        return "; ".join(lines)


def verify_axioms(h: HopfData) -> AxiomReport:
    """Exact brute-force verification of the ten Hopf axioms."""
    n = h.dim
    one = h.one()
    mult = h.mult_rows()
    com = h.comult_rows()
    anti = h.antipode_rows()
    status: list[tuple[str, tuple | None]] = []

    def first_diff(a: dict, b: dict):
        for key in sorted(set(a) | set(b)):
            if a.get(key) != b.get(key):
                return key
        return None

    # associativity: (b_i b_j) b_k == b_i (b_j b_k)
    witness = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs: dict = {}
                for (l, c) in mult.get((i, j), ()):
                    for (t, c2) in mult.get((l, k), ()):
                        _acc(lhs, t, c * c2)
                rhs: dict = {}
                for (l, c) in mult.get((j, k), ()):
                    for (t, c2) in mult.get((i, l), ()):
                        _acc(rhs, t, c * c2)
                if lhs != rhs:
                    witness = (i, j, k)
                    break
            if witness:
                break
        if witness:
            break
    status.append(("associativity", witness))

    # unit: 1 * b_i == b_i == b_i * 1
    witness = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for j, c in h.unit.items():
            for (t, c2) in mult.get((j, i), ()):
                _acc(left, t, c * c2)
            for (t, c2) in mult.get((i, j), ()):
                _acc(right, t, c * c2)
        if left != {i: one} or right != {i: one}:
            witness = (i,)
            break
    status.append(("unit", witness))

    # coassociativity
    witness = None
    for i in range(n):
        lhs = {}
        rhs = {}
        for (j, k, c) in com.get(i, ()):
            for (a, b, c2) in com.get(j, ()):
                _acc(lhs, (a, b, k), c * c2)
            for (a, b, c2) in com.get(k, ()):
                _acc(rhs, (j, a, b), c * c2)
        if lhs != rhs:
            witness = (i,)
            break
    status.append(("coassociativity", witness))

    # counit: (eps (x) 1) Delta == id == (1 (x) eps) Delta
    witness = None
    for i in range(n):
        left = {}
        right = {}
        for (j, k, c) in com.get(i, ()):
            if j in h.counit:
                _acc(left, k, c * h.counit[j])
            if k in h.counit:
                _acc(right, j, c * h.counit[k])
        if left != {i: one} or right != {i: one}:
            witness = (i,)
            break
    status.append(("counit", witness))

    # Delta(b_i b_j) == Delta(b_i) Delta(b_j)
    witness = None
    for i in range(n):
        for j in range(n):
            lhs = {}
            for (l, c) in mult.get((i, j), ()):
                for (p, q, c2) in com.get(l, ()):
                    _acc(lhs, (p, q), c * c2)
            rhs = {}
            for (a, b, c1) in com.get(i, ()):
                for (a2, b2, c2) in com.get(j, ()):
                    c12 = c1 * c2
                    for (p, cp) in mult.get((a, a2), ()):
                        for (q, cq) in mult.get((b, b2), ()):
                            _acc(rhs, (p, q), c12 * cp * cq)
            if lhs != rhs:
                witness = (i, j)
                break
        if witness:
            break
    status.append(("comult_multiplicative", witness))

    # eps(b_i b_j) == eps(b_i) eps(b_j)
    witness = None
    for i in range(n):
        for j in range(n):
            lhs_c = None
            for (l, c) in mult.get((i, j), ()):
                if l in h.counit:
                    v = c * h.counit[l]
                    lhs_c = v if lhs_c is None else lhs_c + v
            rhs_c = None
            if i in h.counit and j in h.counit:
                rhs_c = h.counit[i] * h.counit[j]
            if lhs_c != rhs_c:
                witness = (i, j)
                break
        if witness:
            break
    status.append(("counit_multiplicative", witness))

    # Delta(1) == 1 (x) 1
    lhs = {}
    for i, c in h.unit.items():
        for (j, k, c2) in com.get(i, ()):
            _acc(lhs, (j, k), c * c2)
    rhs = {}
    for j, cj in h.unit.items():
        for k, ck in h.unit.items():
            _acc(rhs, (j, k), cj * ck)
    diff = first_diff(lhs, rhs)
    status.append(("comult_of_unit", None if diff is None else (diff,)))

    # eps(1) == 1
    total = None
    for i, c in h.unit.items():
        if i in h.counit:
            v = c * h.counit[i]
            total = v if total is None else total + v
    status.append(("counit_of_unit", None if total == one else ()))

    # antipode: m(S (x) 1)Delta(b_i) == eps(b_i) 1 == m(1 (x) S)Delta(b_i)
    for side in ("antipode_left", "antipode_right"):
        witness = None
        for i in range(n):
            got = {}
            for (j, k, c) in com.get(i, ()):
                if side == "antipode_left":
                    for (l, cs) in anti.get(j, ()):
                        for (t, cm) in mult.get((l, k), ()):
                            _acc(got, t, c * cs * cm)
                else:
                    for (l, cs) in anti.get(k, ()):
                        for (t, cm) in mult.get((j, l), ()):
                            _acc(got, t, c * cs * cm)
            want = {}
            if i in h.counit:
                ci = h.counit[i]
                for t, cu in h.unit.items():
                    _acc(want, t, ci * cu)
            if got != want:
                witness = (i,)
                break
        status.append((side, witness))

    return AxiomReport(tuple(status))


# --- constructions ----------------------------------------------------------


def dual(h: HopfData) -> HopfData:
    """Dual Hopf algebra on the dual basis: products and coproducts swap."""
    mult = {(i, j, k): c for (k, i, j), c in h.comult.items()}
    comult = {(i, j, k): c for (j, k, i), c in h.mult.items()}
    antipode = {(j, i): c for (i, j), c in h.antipode.items()}
    return HopfData(
        h.semiring,
        h.dim,
        tuple(f"{b}*" for b in h.basis),
        mult,
        comult,
        dict(h.counit),
        dict(h.unit),
        antipode,
    )


def tensor(h1: HopfData, h2: HopfData) -> HopfData:
    """Tensor product; pair (i1, i2) is indexed row-major as i1*dim2 + i2."""
    if h1.semiring != h2.semiring:
        raise HopfError("tensor of different semirings")
    n2 = h2.dim
    dim = h1.dim * n2

    def pairidx(a, b):
        return a * n2 + b

    mult = {}
    for (i1, j1, k1), c1 in h1.mult.items():
        for (i2, j2, k2), c2 in h2.mult.items():
            mult[(pairidx(i1, i2), pairidx(j1, j2), pairidx(k1, k2))] = c1 * c2
    comult = {}
    for (i1, j1, k1), c1 in h1.comult.items():
        for (i2, j2, k2), c2 in h2.comult.items():
            comult[(pairidx(i1, i2), pairidx(j1, j2), pairidx(k1, k2))] = c1 * c2
    unit = {}
    for i1, c1 in h1.unit.items():
        for i2, c2 in h2.unit.items():
            unit[pairidx(i1, i2)] = c1 * c2
    counit = {}
    for i1, c1 in h1.counit.items():
        for i2, c2 in h2.counit.items():
            counit[pairidx(i1, i2)] = c1 * c2
    antipode = {}
    for (i1, j1), c1 in h1.antipode.items():
        for (i2, j2), c2 in h2.antipode.items():
            antipode[(pairidx(i1, i2), pairidx(j1, j2))] = c1 * c2
    basis = tuple(
        f"{a}(x){b}" for a in h1.basis for b in h2.basis
    )
    return HopfData(h1.semiring, dim, basis, mult, comult, unit, counit, antipode)


def inverse_antipode(h: HopfData) -> dict[tuple[int, int], SemiringElement]:
    """Invert a monomial antipode matrix exactly.

    Raises NotMonomial when some row has zero or several entries or two
    rows share a column -- for positively based data this cannot happen.
    """
    rows = h.antipode_rows()
    perm: dict[int, tuple[int, SemiringElement]] = {}
    for i in range(h.dim):
        row = rows.get(i, [])
        if len(row) != 1:
            raise NotMonomial(f"antipode row {i} has {len(row)} entries")
        j, c = row[0]
        if j in perm:
            raise NotMonomial(f"antipode rows {perm[j][0]} and {i} both map to {j}")
        perm[j] = (i, c)
    inv = {}
    for j, (i, c) in perm.items():
        if isinstance(c, Bool):
            inv[(j, i)] = c
        else:
            inv[(j, i)] = c.inverse()
    return inv


def opposite(h: HopfData) -> HopfData:
    """Opposite algebra: reversed product, antipode replaced by its inverse."""
    sinv = inverse_antipode(h)
    mult = {(j, i, k): c for (i, j, k), c in h.mult.items()}
    return HopfData(
        h.semiring, h.dim, h.basis, mult, dict(h.comult),
        dict(h.unit), dict(h.counit), sinv,
    )


def coopposite(h: HopfData) -> HopfData:
    """Co-opposite coalgebra: flipped coproduct, inverse antipode."""
    sinv = inverse_antipode(h)
    comult = {(i, k, j): c for (i, j, k), c in h.comult.items()}
    return HopfData(
        h.semiring, h.dim, h.basis, dict(h.mult), comult,
        dict(h.unit), dict(h.counit), sinv,
    )


def drinfeld_double(h: HopfData) -> HopfData:
    """Drinfel'd double D(H) on the carrier H*^cop (x) H, basis (i*, a).

    Pair (i, a) is indexed row-major as i*dim + a.  The product is

        (f (x) a)(g (x) b) = sum f . g(S^-1(a_(3)) ? a_(1)) (x) a_(2) b,

    the coproduct Delta(f (x) a) = sum (f_(2) (x) a_(1)) (x) (f_(1) (x) a_(2))
    (Sweedler indices of the H* coproduct), the unit eps* (x) 1, the counit
    f (x) a -> f(1) eps(a), and the antipode

        S(f (x) a) = sum (S*)^-1(f)(a_(1) ? S(a_(3))) (x) S(a_(2)).

    All coefficient arithmetic is multiplicative+additive in the nonnegative
    semiring, so the output is automatically nonnegative.
    """
    if h.semiring != SEMIRING_Q:
        raise HopfError("double is defined over the rational semiring")
    n = h.dim
    sinv = inverse_antipode(h)
    sinv_rows: dict[int, tuple[int, SemiringElement]] = {}
    for (r, r2), c in sinv.items():
        sinv_rows[r] = (r2, c)
    s_rows: dict[int, tuple[int, SemiringElement]] = {}
    for i, entries in h.antipode_rows().items():
        if len(entries) != 1:
            raise NotMonomial(f"antipode row {i} has {len(entries)} entries")
        s_rows[i] = entries[0]
    mult = h.mult_rows()
    com = h.comult_rows()

    # Delta^2(a) = (Delta (x) 1) Delta(a), as (a1, a2, a3, coeff)
    t3: dict[int, list[tuple[int, int, int, SemiringElement]]] = {}
    for a in range(n):
        terms = []
        for (j, k, c1) in com.get(a, ()):
            for (p, q, c2) in com.get(j, ()):
                terms.append((p, q, k, c1 * c2))
        t3[a] = terms

    # comult entries indexed by the right tensor component
    d_by_right: dict[int, list[tuple[int, int, SemiringElement]]] = {}
    for (kk, i, x), c in h.comult.items():
        d_by_right.setdefault(x, []).append((kk, i, c))

    def pairidx(i, a):
        return i * n + a

    dmult: dict = {}
    for a in range(n):
        for (p, q, r, t1) in t3[a]:
            r2, c_si = sinv_rows[r]
            for x in range(n):
                # b_j-coordinate of S^-1(b_r) b_x b_p, summed over paths
                for (y, c1) in mult.get((r2, x), ()):
                    for (jj, c2) in mult.get((y, p), ()):
                        w = t1 * c_si * c1 * c2
                        for (kk, i, c3) in d_by_right.get(x, ()):
                            wk = w * c3
                            for b in range(n):
                                for (cc, c4) in mult.get((q, b), ()):
                                    _acc(
                                        dmult,
                                        (pairidx(i, a), pairidx(jj, b), pairidx(kk, cc)),
                                        wk * c4,
                                    )

    dcomult: dict = {}
    mbo = h.mult_by_output()
    for i in range(n):
        for (u, v, c1) in mbo.get(i, ()):
            for a in range(n):
                for (p, q, c2) in com.get(a, ()):
                    _acc(
                        dcomult,
                        (pairidx(i, a), pairidx(v, p), pairidx(u, q)),
                        c1 * c2,
                    )

    dunit = {}
    for i, ci in h.counit.items():
        for a, ca in h.unit.items():
            dunit[pairidx(i, a)] = ci * ca
    dcounit = {}
    for i, ci in h.unit.items():
        for a, ca in h.counit.items():
            dcounit[pairidx(i, a)] = ci * ca

    dantipode: dict = {}
    for a in range(n):
        for (p, q, r, t1) in t3[a]:
            r2, c_sr = s_rows[r]
            cc, c_sq = s_rows[q]
            base = t1 * c_sr * c_sq
            for x in range(n):
                for (y, c1) in mult.get((p, x), ()):
                    for (z, c2) in mult.get((y, r2), ()):
                        i0, c3 = sinv_rows[z]
                        _acc(
                            dantipode,
                            (pairidx(i0, a), pairidx(x, cc)),
                            base * c1 * c2 * c3,
                        )

    basis = tuple(f"{h.basis[i]}*(x){h.basis[a]}" for i in range(n) for a in range(n))
    return HopfData(
        SEMIRING_Q, n * n, basis, dmult, dcomult, dunit, dcounit, dantipode
    )


# --- basis changes (used by classification and tests) -----------------------


def rescale_basis(h: HopfData, scales: list[Coeff]) -> HopfData:
    """Structure constants in the rescaled basis b_i' = r_i b_i (Q only)."""
    if h.semiring != SEMIRING_Q:
        raise HopfError("rescaling only applies over the rational semiring")
    if len(scales) != h.dim:
        raise HopfError("scale vector length != dim")
    for r in scales:
        if r.is_zero():
            raise HopfError("scales must be positive")
    mult = {
        (i, j, k): c * scales[i] * scales[j] / scales[k]
        for (i, j, k), c in h.mult.items()
    }
    comult = {
        (i, j, k): c * scales[i] / (scales[j] * scales[k])
        for (i, j, k), c in h.comult.items()
    }
    unit = {i: c / scales[i] for i, c in h.unit.items()}
    counit = {i: c * scales[i] for i, c in h.counit.items()}
    antipode = {
        (i, j): c * scales[i] / scales[j] for (i, j), c in h.antipode.items()
    }
    return HopfData(h.semiring, h.dim, h.basis, mult, comult, unit, counit, antipode)


def permute_basis(h: HopfData, perm: list[int]) -> HopfData:
    """Relabel basis indices: old index i becomes perm[i]."""
    if sorted(perm) != list(range(h.dim)):
        raise HopfError("perm is not a permutation")
    p = perm
    basis = [""] * h.dim
    for i, lab in enumerate(h.basis):
        basis[p[i]] = lab
    return HopfData(
        h.semiring,
        h.dim,
        tuple(basis),
        {(p[i], p[j], p[k]): c for (i, j, k), c in h.mult.items()},
        {(p[i], p[j], p[k]): c for (i, j, k), c in h.comult.items()},
        {p[i]: c for i, c in h.unit.items()},
        {p[i]: c for i, c in h.counit.items()},
        {(p[i], p[j]): c for (i, j), c in h.antipode.items()},
    )
