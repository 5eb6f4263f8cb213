"""Finite groups as Cayley tables, exact factorizations, and matched pairs.

Groups are multiplication tables on indices 0..n-1 with the identity pinned
at index 0.  An exact factorization G = G+G- stores the four projection
maps g = g+g- = gbar- gbar+ together with the two action tables used to
reconstruct G as a Zappa-Szep product on the carrier G- x G+.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class GroupError(ValueError):
    """Invalid group-level input (bad table, bound exceeded, not a subgroup)."""


class NotExact(GroupError):
    """The subgroup pair does not give unique decompositions g = g+ g-."""


class NotAnAction(GroupError):
    """An action table violates the action laws."""


class MatchingViolation(GroupError):
    """The pair of actions violates the matched-pair relations."""


@dataclass(frozen=True)
class GroupReport:
    """Result of check_group: empty violations means the table is a group."""

    violations: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_group(table) -> GroupReport:
    """Check the group axioms on a square index table; identity must be 0.

    Returns a report listing violated axioms with witness indices rather
    than raising, so callers can surface diagnostics.
    """
    bad: list[tuple[str, tuple[int, ...]]] = []
    n = len(table)
    if n == 0:
        return GroupReport((("shape", ()),))
    for i, row in enumerate(table):
        if len(row) != n:
            return GroupReport((("shape", (i,)),))
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                return GroupReport((("shape", (i, j)),))
    for i in range(n):
        if table[0][i] != i:
            bad.append(("identity", (0, i)))
            break
        if table[i][0] != i:
            bad.append(("identity", (i, 0)))
            break
    for i in range(n):
        if sorted(table[i]) != list(range(n)):
            bad.append(("left_translation", (i,)))
            break
    for j in range(n):
        if sorted(table[i][j] for i in range(n)) != list(range(n)):
            bad.append(("right_translation", (j,)))
            break
    for i in range(n):
        found = False
        for i2 in range(n):
            if table[i][i2] == 0 and table[i2][i] == 0:
                found = True
                break
        if not found:
            bad.append(("inverses", (i,)))
            break
    stop = False
    for i in range(n):
        for j in range(n):
            ij = table[i][j]
            for k in range(n):
                if table[ij][k] != table[i][table[j][k]]:
                    bad.append(("associativity", (i, j, k)))
                    stop = True
                    break
            if stop:
                break
        if stop:
            break
    return GroupReport(tuple(bad))


def _freeze_table(table) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in table)


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its Cayley table, identity at index 0."""

    table: tuple[tuple[int, ...], ...]
    name: str = "G"
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_table(cls, table, name: str = "G", labels=None) -> "FiniteGroup":
        """Validating constructor; raises GroupError on a bad table."""
        frozen = _freeze_table(table)
        report = check_group(frozen)
        if not report.ok:
            raise GroupError(f"not a group: {report.violations}")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != len(frozen):
                raise GroupError("labels length does not match order")
        return cls(frozen, name, labels)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.table[i].index(0)

    def element_order(self, i: int) -> int:
        x, n = i, 1
        while x != 0:
            x = self.mul(x, i)
            n += 1
        return n

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(i)

    def validate(self) -> GroupReport:
        return check_group(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def cyclic(n: int, name: str | None = None) -> FiniteGroup:
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    labels = tuple("e" if i == 0 else ("a" if i == 1 else f"a{i}") for i in range(n))
    return FiniteGroup(table, name or f"C{n}", labels)


def direct_product(g1: FiniteGroup, g2: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Direct product with row-major element indexing (i1, i2) -> i1*|G2|+i2."""
    n1, n2 = g1.order, g2.order
    table = []
    for i1 in range(n1):
        for i2 in range(n2):
            row = []
            for j1 in range(n1):
                for j2 in range(n2):
                    row.append(g1.mul(i1, j1) * n2 + g2.mul(i2, j2))
            table.append(tuple(row))
    labels = tuple(
        f"({g1.label(i1)},{g2.label(i2)})" for i1 in range(n1) for i2 in range(n2)
    )
    return FiniteGroup(tuple(table), name or f"{g1.name}x{g2.name}", labels)


def subgroup_closure(g: FiniteGroup, seed) -> frozenset[int]:
    """Closure of a set of elements under the group product (always contains 0)."""
    elems = set(seed) | {0}
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for y in list(elems):
            for z in (g.mul(x, y), g.mul(y, x)):
                if z not in elems:
                    elems.add(z)
                    frontier.append(z)
    return frozenset(elems)


def is_subgroup(g: FiniteGroup, elems) -> bool:
    s = set(elems)
    if 0 not in s:
        return False
    return all(g.mul(x, y) in s for x in s for y in s)


def enumerate_subgroups(g: FiniteGroup, max_order: int = 24) -> list[tuple[int, ...]]:
    """All subgroups as sorted index tuples, in lexicographic order.

    Works by closing generated subgroups, so it stays cheap for the small
    orders this library targets; raises GroupError above max_order.
    """
    if g.order > max_order:
        raise GroupError(f"order {g.order} exceeds subgroup enumeration bound {max_order}")
    trivial = frozenset({0})
    found = {trivial}
    frontier = [trivial]
    while frontier:
        h = frontier.pop()
        for x in range(1, g.order):
            if x in h:
                continue
            h2 = subgroup_closure(g, h | {x})
            if h2 not in found:
                found.add(h2)
                frontier.append(h2)
    return sorted(tuple(sorted(h)) for h in found)


def enumerate_exact_factorizations(
    g: FiniteGroup, max_order: int = 24
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ordered subgroup pairs (G+, G-) with trivial intersection and
    |G+|*|G-| = |G|; uniqueness of g = g+g- then follows by counting."""
    subs = enumerate_subgroups(g, max_order)
    out = []
    for a in subs:
        for b in subs:
            if len(a) * len(b) != g.order:
                continue
            if set(a) & set(b) != {0}:
                continue
            out.append((a, b))
    out.sort()
    return out


@dataclass(frozen=True, eq=False)
class ExactFactorization:
    """An exact factorization G = G+G- with projections and actions.

    Projections are total maps on G (alpha_plus[g] = g+, beta_minus[g] = g-,
    alpha_minus[g] = gbar-, beta_plus[g] = gbar+).  The action tables are
    keyed by pairs of group element indices (p in G+, m in G-):
    act_left[(p, m)] is the G- part of p*m in the gbar- gbar+ normal form,
    act_right[(p, m)] the G+ part.
    """

    group: FiniteGroup
    gplus: tuple[int, ...]
    gminus: tuple[int, ...]
    alpha_plus: tuple[int, ...]
    beta_plus: tuple[int, ...]
    alpha_minus: tuple[int, ...]
    beta_minus: tuple[int, ...]
    act_left: dict[tuple[int, int], int] = field(repr=False)
    act_right: dict[tuple[int, int], int] = field(repr=False)

    def __repr__(self) -> str:
        return (
            f"ExactFactorization({self.group.name}, "
            f"|G+|={len(self.gplus)}, |G-|={len(self.gminus)})"
        )


def _check_matched_pair_tables(
    gplus: FiniteGroup,
    gminus: FiniteGroup,
    act_left,
    act_right,
) -> None:
    """Validate action laws and matching relations on position-indexed tables.

    act_left[a][x] = (a acting on x from the left)  in G-,
    act_right[a][x] = (a acted on by x from the right) in G+.
    """
    np, nm = gplus.order, gminus.order
    for a in range(np):
        if act_right[a][0] != a:
            raise NotAnAction(f"right action not unital at g+={a}")
        for x in range(nm):
            for y in range(nm):
                if act_right[a][gminus.mul(x, y)] != act_right[act_right[a][x]][y]:
                    raise NotAnAction(f"right action law fails at ({a},{x},{y})")
    for x in range(nm):
        if act_left[0][x] != x:
            raise NotAnAction(f"left action not unital at g-={x}")
    for a in range(np):
        for b in range(np):
            for x in range(nm):
                if act_left[gplus.mul(b, a)][x] != act_left[b][act_left[a][x]]:
                    raise NotAnAction(f"left action law fails at ({b},{a},{x})")
    # matching relations:  a(xy) = (ax) ((a^x)y)   and  (ba)^x = b^(ax) a^x
    for a in range(np):
        for x in range(nm):
            ax = act_left[a][x]
            a_x = act_right[a][x]
            for y in range(nm):
                lhs = act_left[a][gminus.mul(x, y)]
                rhs = gminus.mul(ax, act_left[a_x][y])
                if lhs != rhs:
                    raise MatchingViolation(f"left matching fails at ({a},{x},{y})")
            for b in range(np):
                lhs = act_right[gplus.mul(b, a)][x]
                rhs = gplus.mul(act_right[b][ax], a_x)
                if lhs != rhs:
                    raise MatchingViolation(f"right matching fails at ({b},{a},{x})")


def make_factorization(
    g: FiniteGroup, gplus, gminus
) -> ExactFactorization:
    """Build the full factorization data for subgroups G+ and G- of G.

    Raises NotExact if some element has zero or several decompositions
    g = g+ g-, and GroupError if either input list is not a subgroup.
    """
    gplus = tuple(sorted(gplus))
    gminus = tuple(sorted(gminus))
    if not is_subgroup(g, gplus):
        raise GroupError(f"gplus {gplus} is not a subgroup of {g.name}")
    if not is_subgroup(g, gminus):
        raise GroupError(f"gminus {gminus} is not a subgroup of {g.name}")
    n = g.order
    ap = [-1] * n
    bm = [-1] * n
    am = [-1] * n
    bp = [-1] * n
    for x in range(n):
        decs = [(p, m) for p in gplus for m in gminus if g.mul(p, m) == x]
        if len(decs) != 1:
            raise NotExact(
                f"element {x} of {g.name} has {len(decs)} decompositions g+g-"
            )
        ap[x], bm[x] = decs[0]
        decs = [(m, p) for m in gminus for p in gplus if g.mul(m, p) == x]
        if len(decs) != 1:
            raise NotExact(
                f"element {x} of {g.name} has {len(decs)} decompositions g-g+"
            )
        am[x], bp[x] = decs[0]
    act_left = {}
    act_right = {}
    for p in gplus:
        for m in gminus:
            pm = g.mul(p, m)
            act_left[(p, m)] = am[pm]
            act_right[(p, m)] = bp[pm]
    f = ExactFactorization(
        group=g,
        gplus=gplus,
        gminus=gminus,
        alpha_plus=tuple(ap),
        beta_plus=tuple(bp),
        alpha_minus=tuple(am),
        beta_minus=tuple(bm),
        act_left=act_left,
        act_right=act_right,
    )
    _verify_factorization_actions(f)
    return f


def _verify_factorization_actions(f: ExactFactorization) -> None:
    """Bug guard: the derived actions must satisfy the matched-pair laws."""
    gp = _subgroup_as_group(f.group, f.gplus, f"{f.group.name}+")
    gm = _subgroup_as_group(f.group, f.gminus, f"{f.group.name}-")
    posp = {e: i for i, e in enumerate(f.gplus)}
    posm = {e: i for i, e in enumerate(f.gminus)}
    al = [[posm[f.act_left[(p, m)]] for m in f.gminus] for p in f.gplus]
    ar = [[posp[f.act_right[(p, m)]] for m in f.gminus] for p in f.gplus]
    _check_matched_pair_tables(gp, gm, al, ar)


def _subgroup_as_group(g: FiniteGroup, elems: tuple[int, ...], name: str) -> FiniteGroup:
    """Restrict g to a subgroup, reindexed with the identity first."""
    order = sorted(elems, key=lambda e: (e != 0, e))
    pos = {e: i for i, e in enumerate(order)}
    table = tuple(tuple(pos[g.mul(x, y)] for y in order) for x in order)
    labels = tuple(g.label(e) for e in order)
    return FiniteGroup(table, name, labels)


def subgroup_as_group(g: FiniteGroup, elems) -> FiniteGroup:
    return _subgroup_as_group(g, tuple(sorted(elems)), f"{g.name}|{len(elems)}")


def zappa_szep(
    gplus: FiniteGroup,
    gminus: FiniteGroup,
    act_left,
    act_right,
    name: str | None = None,
) -> ExactFactorization:
    """Reconstruct G from a matched pair of groups and actions.

    The carrier is G- x G+ in the gbar- gbar+ normal form, indexed
    row-major: (x, a) -> x*|G+| + a.  The product is
    (x, a)(y, b) = (x * (a|>y), (a<|y) * b).  Inputs are validated
    against the action laws and the matching relations.
    """
    _check_matched_pair_tables(gplus, gminus, act_left, act_right)
    np_, nm = gplus.order, gminus.order
    n = np_ * nm
    table = []
    for x in range(nm):
        for a in range(np_):
            row = []
            for y in range(nm):
                for b in range(np_):
                    xm = gminus.mul(x, act_left[a][y])
                    ab = gplus.mul(act_right[a][y], b)
                    row.append(xm * np_ + ab)
            table.append(tuple(row))
    labels = tuple(
        f"{gminus.label(x)}.{gplus.label(a)}" for x in range(nm) for a in range(np_)
    )
    g = FiniteGroup(tuple(table), name or f"{gminus.name}:{gplus.name}", labels)
    report = g.validate()
    if not report.ok:
        raise MatchingViolation(f"matched pair did not yield a group: {report.violations}")
    plus = tuple(range(np_))
    minus = tuple(x * np_ for x in range(nm))
    f = make_factorization(g, plus, minus)
    # Round trip: the actions read back off the product must equal the inputs.
    for a in range(np_):
        for x in range(nm):
            if f.act_left[(a, x * np_)] != act_left[a][x] * np_:
                raise MatchingViolation(f"left action round trip fails at ({a},{x})")
            if f.act_right[(a, x * np_)] != act_right[a][x]:
                raise MatchingViolation(f"right action round trip fails at ({a},{x})")
    return f


def trivial_actions(gplus: FiniteGroup, gminus: FiniteGroup):
    """Action tables of the direct product (both actions trivial)."""
    al = [[x for x in range(gminus.order)] for _ in range(gplus.order)]
    ar = [[a for _ in range(gminus.order)] for a in range(gplus.order)]
    return al, ar


def _generators(g: FiniteGroup) -> list[int]:
    gens: list[int] = []
    have = subgroup_closure(g, set())
    for x in range(g.order):
        if x not in have:
            gens.append(x)
            have = subgroup_closure(g, have | {x})
            if len(have) == g.order:
                break
    return gens


def _words(g: FiniteGroup, gens: list[int]) -> list[tuple[int, int] | None]:
    """BFS expressions: word[x] = (y, gi) with x = y * gens[gi]; word[0] = None."""
    word: list = [None] * g.order
    seen = {0}
    frontier = [0]
    while frontier:
        y = frontier.pop(0)
        for gi, s in enumerate(gens):
            z = g.mul(y, s)
            if z not in seen:
                seen.add(z)
                word[z] = (y, gi)
                frontier.append(z)
    return word


def is_isomorphic_small(
    g1: FiniteGroup,
    g2: FiniteGroup,
    classes: tuple[list, list] | None = None,
    max_order: int = 36,
) -> list[int] | None:
    """Brute-force isomorphism search for small groups.

    Returns an explicit bijection phi (as a list, phi[i] in g2) with
    phi(xy) = phi(x)phi(y), or None.  When classes=(c1, c2) is given,
    the map must additionally satisfy c2[phi[i]] == c1[i] (used to match
    factorization data).
    """
    if g1.order > max_order or g2.order > max_order:
        raise GroupError(f"order exceeds isomorphism search bound {max_order}")
    n = g1.order
    if n != g2.order:
        return None
    orders1 = sorted(g1.element_order(i) for i in range(n))
    orders2 = sorted(g2.element_order(i) for i in range(n))
    if orders1 != orders2:
        return None
    if classes is not None:
        c1, c2 = classes
        if sorted(map(repr, c1)) != sorted(map(repr, c2)):
            return None
    gens = _generators(g1)
    word = _words(g1, gens)

    def build(images: list[int]) -> list[int] | None:
        phi = [-1] * n
        phi[0] = 0
        for x in range(n):
            if phi[x] >= 0:
                continue
            stack = [x]
            while word[stack[-1]] is not None and phi[stack[-1]] < 0:
                stack.append(word[stack[-1]][0])
            for idx in range(len(stack) - 2, -1, -1):
                y = stack[idx]
                prev, gi = word[y]
                phi[y] = g2.mul(phi[prev], images[gi])
        if sorted(phi) != list(range(n)):
            return None
        for x in range(n):
            for y in range(n):
                if phi[g1.mul(x, y)] != g2.mul(phi[x], phi[y]):
                    return None
        if classes is not None:
            c1, c2 = classes
            if any(c2[phi[i]] != c1[i] for i in range(n)):
                return None
        return phi

    candidate_sets = []
    for s in gens:
        o = g1.element_order(s)
        cands = [t for t in range(n) if g2.element_order(t) == o]
        if classes is not None:
            c1, c2 = classes
            cands = [t for t in cands if c2[t] == c1[s]]
        candidate_sets.append(cands)
    for images in itertools.product(*candidate_sets):
        if len(set(images)) != len(images) and len(images) > 1:
            pass  # duplicates can still generate, e.g. one generator repeated is pruned by build
        phi = build(list(images))
        if phi is not None:
            return phi
    return None


def factorizations_isomorphic(f1: ExactFactorization, f2: ExactFactorization) -> list[int] | None:
    """Isomorphism of groups carrying G+ to G+ and G- to G-, or None."""
    def classify_elems(f: ExactFactorization) -> list:
        return [
            (i in set(f.gplus), i in set(f.gminus)) for i in range(f.group.order)
        ]

    return is_isomorphic_small(
        f1.group, f2.group, classes=(classify_elems(f1), classify_elems(f2))
    )
