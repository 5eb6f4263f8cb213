"""Canonical JSON encodings for groups, factorizations, Hopf data, and
correspondences.

All dumps are deterministic: sorted keys, sorted entry lists, reduced
rational strings, one trailing newline.  Loaders validate structure and
raise ValueError on malformed documents (the CLI maps that to exit 2).
"""

from __future__ import annotations

import json

from .coeff import SEMIRING_B, SEMIRING_Q, coeff_from_json, coeff_to_json
from .correspondence import Correspondence, CorrespondenceHopf
from .groups import ExactFactorization, FiniteGroup, make_factorization
from .hopf import AxiomReport, HopfData


def canonical_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# --- groups ------------------------------------------------------------------


def group_to_json(g: FiniteGroup) -> dict:
    doc = {
        "name": g.name,
        "order": g.order,
        "table": [list(row) for row in g.table],
    }
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return doc


def group_from_json(doc) -> FiniteGroup:
    if not isinstance(doc, dict) or "table" not in doc:
        raise ValueError("group document must be an object with a 'table'")
    table = doc["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise ValueError("'table' must be a list of rows")
    order = doc.get("order", len(table))
    if order != len(table):
        raise ValueError(f"declared order {order} != table size {len(table)}")
    return FiniteGroup.from_table(
        table, name=str(doc.get("name", "G")), labels=doc.get("labels")
    )


def factorization_to_json(f: ExactFactorization) -> dict:
    doc = group_to_json(f.group)
    doc["gplus"] = list(f.gplus)
    doc["gminus"] = list(f.gminus)
    return doc


def factorization_from_json(doc) -> ExactFactorization:
    g = group_from_json(doc)
    if "gplus" not in doc or "gminus" not in doc:
        raise ValueError("factorization document needs 'gplus' and 'gminus'")
    return make_factorization(g, doc["gplus"], doc["gminus"])


# --- Hopf data ---------------------------------------------------------------


def hopf_to_json(h: HopfData) -> dict:
    mult = [
        {"i": i, "j": j, "k": k, "c": coeff_to_json(c)}
        for (i, j, k), c in sorted(h.mult.items())
    ]
    comult = [
        {"i": i, "j": j, "k": k, "c": coeff_to_json(c)}
        for (i, j, k), c in sorted(h.comult.items())
    ]
    unit = [{"i": i, "c": coeff_to_json(c)} for i, c in sorted(h.unit.items())]
    counit = [{"i": i, "c": coeff_to_json(c)} for i, c in sorted(h.counit.items())]
    antipode = [
        {"i": i, "j": j, "c": coeff_to_json(c)}
        for (i, j), c in sorted(h.antipode.items())
    ]
    return {
        "semiring": h.semiring,
        "dim": h.dim,
        "basis": list(h.basis),
        "mult": mult,
        "comult": comult,
        "unit": unit,
        "counit": counit,
        "antipode": antipode,
    }


def _load_entries(entries, keys: tuple[str, ...], semiring: str, what: str) -> dict:
    if not isinstance(entries, list):
        raise ValueError(f"'{what}' must be a list")
    out = {}
    prev = None
    for e in entries:
        if not isinstance(e, dict) or set(e) != set(keys) | {"c"}:
            raise ValueError(f"bad {what} entry {e!r}")
        idx = tuple(int(e[k]) for k in keys)
        key = idx if len(idx) > 1 else idx[0]
        if key in out:
            raise ValueError(f"duplicate {what} entry at {idx}")
        if prev is not None and idx < prev:
            raise ValueError(f"{what} entries not sorted at {idx}")
        prev = idx
        out[key] = coeff_from_json(e["c"], semiring)
    return out


def hopf_from_json(doc) -> HopfData:
    if not isinstance(doc, dict):
        raise ValueError("Hopf document must be an object")
    semiring = doc.get("semiring")
    if semiring not in (SEMIRING_Q, SEMIRING_B):
        raise ValueError(f"bad semiring {semiring!r}")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"bad dim {dim!r}")
    return HopfData(
        semiring,
        dim,
        doc.get("basis"),
        _load_entries(doc.get("mult", []), ("i", "j", "k"), semiring, "mult"),
        _load_entries(doc.get("comult", []), ("i", "j", "k"), semiring, "comult"),
        _load_entries(doc.get("unit", []), ("i",), semiring, "unit"),
        _load_entries(doc.get("counit", []), ("i",), semiring, "counit"),
        _load_entries(doc.get("antipode", []), ("i", "j"), semiring, "antipode"),
    )


def axiom_report_to_json(report: AxiomReport) -> dict:
    return {
        "ok": report.ok,
        "axioms": [
            {"name": name, "ok": w is None, "witness": None if w is None else list(w)}
            for name, w in report.status
        ],
    }


# --- correspondences ---------------------------------------------------------


def correspondence_to_json(c: Correspondence) -> dict:
    return {
        "dom": c.dom_size,
        "cod": c.cod_size,
        "pairs": sorted([x, y] for (x, y) in c.pairs),
    }


def correspondence_from_json(doc) -> Correspondence:
    if not isinstance(doc, dict) or not {"dom", "cod", "pairs"} <= set(doc):
        raise ValueError("correspondence document needs dom, cod, pairs")
    return Correspondence(
        int(doc["dom"]), int(doc["cod"]), {tuple(p) for p in doc["pairs"]}
    )


def corr_hopf_to_json(c: CorrespondenceHopf) -> dict:
    return {
        "size": c.size,
        "pairing": "row-major",
        "m": correspondence_to_json(c.m),
        "delta": correspondence_to_json(c.delta),
        "unit": correspondence_to_json(c.unit),
        "counit": correspondence_to_json(c.counit),
        "antipode": correspondence_to_json(c.antipode),
    }


def corr_hopf_from_json(doc) -> CorrespondenceHopf:
    if not isinstance(doc, dict) or "size" not in doc:
        raise ValueError("correspondence Hopf document needs a size")
    if doc.get("pairing", "row-major") != "row-major":
        raise ValueError("only row-major pairing is supported")
    return CorrespondenceHopf(
        size=int(doc["size"]),
        m=correspondence_from_json(doc["m"]),
        delta=correspondence_from_json(doc["delta"]),
        unit=correspondence_from_json(doc["unit"]),
        counit=correspondence_from_json(doc["counit"]),
        antipode=correspondence_from_json(doc["antipode"]),
    )


# --- classification results --------------------------------------------------

_PIPELINE = (
    "normalize",
    "positive-group",
    "negative-group",
    "projections",
    "actions",
    "assemble",
    "rescale",
)


def classification_to_json(result) -> dict:
    f = result.factorization
    tau = None
    if result.tau is not None:
        tau = []
        for t in result.tau:
            if t.is_rational():
                tau.append(str(t.to_fraction()))
            else:
                tau.append(
                    {"factors": {str(p): str(e) for p, e in sorted(t.exponents().items())}}
                )
    return {
        "group": group_to_json(f.group),
        "gplus": list(f.gplus),
        "gminus": list(f.gminus),
        "bijection": list(result.basis_to_group),
        "tau": tau,
        "stages": [{"name": s, "status": "ok"} for s in _PIPELINE],
    }


def error_to_json(stage: str, witness) -> dict:
    return {"stage": stage, "witness": [repr(w) if not isinstance(w, (int, str)) else w for w in witness]}
