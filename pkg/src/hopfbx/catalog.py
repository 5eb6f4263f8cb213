"""Bundled Cayley tables for the small groups used throughout the test bed.

Catalog names: C1..C8, C2xC2, C2xC4, C2xC2xC2, S3, D4, Q8, D5, C10, D6,
C12, A4.  All tables have the identity at index 0.  The CLI resolves
"catalog:NAME" here, optionally overridden by group JSON files in the
directory named by the HOPFBX_CATALOG environment variable.
"""

from __future__ import annotations

import itertools

from .groups import FiniteGroup, cyclic, direct_product


def _perm_mul(p, q):
    # (p*q)(i) = p(q(i))
    return tuple(p[q[i]] for i in range(len(p)))


def _cycle_label(p) -> str:
    n = len(p)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        parts.append("(" + "".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) if parts else "e"


def _perm_group(perms, name: str) -> FiniteGroup:
    perms = sorted(set(perms))
    ident = tuple(range(len(perms[0])))
    perms.remove(ident)
    perms.insert(0, ident)
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[_perm_mul(p, q)] for q in perms) for p in perms
    )
    labels = tuple(_cycle_label(p) for p in perms)
    return FiniteGroup(table, name, labels)


def symmetric3() -> FiniteGroup:
    return _perm_group(list(itertools.permutations(range(3))), "S3")


def alternating4() -> FiniteGroup:
    perms = [
        p
        for p in itertools.permutations(range(4))
        if _perm_parity(p) == 0
    ]
    return _perm_group(perms, "A4")


def _perm_parity(p) -> int:
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inv += 1
    return inv % 2


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: index a*n+i for s^a r^i, with r s = s r^-1."""
    def mul(x, y):
        a, i = divmod(x, n)
        b, j = divmod(y, n)
        # (s^a r^i)(s^b r^j) = s^(a+b) r^(j + (-1)^b i)
        return ((a + b) % 2) * n + ((j + (i if b == 0 else -i)) % n)

    table = tuple(tuple(mul(x, y) for y in range(2 * n)) for x in range(2 * n))
    labels = []
    for x in range(2 * n):
        a, i = divmod(x, n)
        base = "e" if i == 0 else ("r" if i == 1 else f"r{i}")
        labels.append(base if a == 0 else ("s" if i == 0 else f"s{base}"))
    return FiniteGroup(table, f"D{n}", tuple(labels))


def quaternion8() -> FiniteGroup:
    # order: 1, -1, i, -i, j, -j, k, -k
    labels = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")

    def unit_mul(x, y):
        sx, bx = divmod(x, 2)  # bx: 0 even row (+), 1 odd (-); sx: which of 1,i,j,k
        # decode: index 2s+b means (-1)^b * u_s with u in (1, i, j, k)
        table = {
            (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
            (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
            (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
            (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
        }
        sy, by = divmod(y, 2)
        s, b = table[(sx, sy)]
        return 2 * s + ((b + bx + by) % 2)

    table = tuple(tuple(unit_mul(x, y) for y in range(8)) for x in range(8))
    return FiniteGroup(table, "Q8", labels)


def _build_catalog() -> dict[str, FiniteGroup]:
    groups: dict[str, FiniteGroup] = {}
    for n in range(1, 9):
        groups[f"C{n}"] = cyclic(n)
    c2, c4 = groups["C2"], groups["C4"]
    groups["C2xC2"] = direct_product(c2, c2, "C2xC2")
    groups["C2xC4"] = direct_product(c2, c4, "C2xC4")
    groups["C2xC2xC2"] = direct_product(groups["C2xC2"], c2, "C2xC2xC2")
    groups["S3"] = symmetric3()
    groups["D4"] = dihedral(4)
    groups["Q8"] = quaternion8()
    groups["D5"] = dihedral(5)
    groups["C10"] = cyclic(10)
    groups["D6"] = dihedral(6)
    groups["C12"] = cyclic(12)
    groups["A4"] = alternating4()
    return groups


_CATALOG = _build_catalog()


def catalog_names() -> list[str]:
    return list(_CATALOG)


def catalog_group(name: str) -> FiniteGroup:
    try:
        return _CATALOG[name]
    except KeyError:
        raise KeyError(f"no catalog group named {name!r}; see catalog_names()") from None
