"""Per-group reports, table verification, duality and inclusion analyses."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Sequence

from . import golden
from .catalog import catalog_group, names
from .cohomology import StrataPolynomials, assemble
from .errors import InputError
from .intlinalg import Mat
from .matgroup import FinMatGroup, all_subgroups, bounded_conjugacy_search, class_representatives, closure
from .polys import IntPoly
from .strata import CurveClassRecord, Stratification, analyze

SCHEMA_VERSION = 1
DEFAULT_BOUND = 3


# --- single group -----------------------------------------------------------

def _mat_list(m: Mat) -> list[list[int]]:
    return [list(r) for r in m]


def _curve_row(rec: CurveClassRecord) -> dict[str, Any]:
    return {
        "group": rec.iso.value,
        "singularity": rec.singularity,
        "generator": _mat_list(rec.generator),
        "components": rec.components,
        "excluded_components": rec.excluded_components,
        "weyl": rec.weyl_iso.value,
        "quotient": [{"count": n, "type": q, "w_k": w} for n, q, w in rec.quotient_multiset()],
        "orbits": [
            {
                "orbit_size": o.orbit_size,
                "w_k": o.weyl.iso.value,
                "action": o.action.value,
                "quotient": o.quotient_type.value,
                "special_points": [
                    {
                        "iso": sp.iso.value,
                        "count_on_curve": sp.count_on_curve,
                        "image_count": sp.image_count,
                        "wk_rep": str(sp.wk_rep),
                        "passes_twice": sp.passes_twice,
                    }
                    for sp in o.special_points
                ],
            }
            for o in rec.orbits
        ],
    }


@dataclass
class KummerReport:
    name: str
    group: FinMatGroup
    strata: Stratification
    polys: StrataPolynomials

    def to_dict(self) -> dict[str, Any]:
        # the torsion level is deliberately absent: reports do not depend on it
        return {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "order": self.group.order,
            "iso": self.group.iso.value,
            "generators": [_mat_list(g) for g in self.group.generators],
            "polynomials": {k: str(v) for k, v in self.poly_items()},
            "coefficients": self.polys.as_dict(),
            "curves": [_curve_row(r) for r in self.strata.curves],
            "census": {k.value: v for k, v in self.strata.census.items()},
            "fingerprint": self.strata.fingerprint.digest(),
        }

    def poly_items(self) -> list[tuple[str, IntPoly]]:
        p = self.polys
        return [("P_Y", p.P_Y), ("P3", p.P3), ("P2", p.P2), ("P1", p.P1), ("P_X", p.P_X)]

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        return render_text(self.to_dict())


def build_report(name: str, group: FinMatGroup, level: int | None = None) -> KummerReport:
    if group.order == 1 or group.is_cyclic:
        raise InputError(
            f"{name}: the group is {'trivial' if group.order == 1 else 'cyclic'}; "
            "the Kummer construction needs a non-cyclic group")
    st = analyze(group, level)
    return KummerReport(name, group, st, assemble(st))


def catalog_report(name: str, level: int | None = None) -> KummerReport:
    return build_report(name, catalog_group(name), level)


def _report_dict(args: tuple[str, int | None]) -> dict[str, Any]:
    return catalog_report(*args).to_dict()


def map_catalog(fn: Callable, items: Sequence, jobs: int = 1) -> list:
    """fn over items, optionally in worker processes; results keep input order."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def all_reports(level: int | None = None, jobs: int = 1) -> list[dict[str, Any]]:
    return map_catalog(_report_dict, [(n, level) for n in names()], jobs)


def render_text(d: dict[str, Any]) -> str:
    lines = [f"{d['name']}  (order {d['order']}, {d['iso']})", ""]
    width = max(len(k) for k in d["polynomials"])
    for k, v in d["polynomials"].items():
        lines.append(f"  {k.ljust(width)} = {v}")
    lines.append("")
    header = ("group", "gen.", "comp.", "W(g)", "quot.", "W_K")
    rows = []
    for c in d["curves"]:
        gen = " ".join("[" + ",".join(str(x) for x in r) + "]" for r in c["generator"])
        quot = ", ".join(f"{q['count']} x {q['type']}" for q in c["quotient"])
        wk = ", ".join(q["w_k"] for q in c["quotient"])
        rows.append((f"{c['group']} ({c['singularity']})", gen, str(c["components"]), c["weyl"], quot, wk))
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    fmt = lambda r: ("  " + " | ".join(x.ljust(w) for x, w in zip(r, widths))).rstrip()
    lines.append(fmt(header))
    lines.append("  " + "-+-".join("-" * w for w in widths))
    lines.extend(fmt(r) for r in rows)
    lines.append("")
    census = " + ".join(f"{v} x {k}" for k, v in d["census"].items()) or "none"
    lines.append(f"  0-stratum orbits: {census}")
    lines.append(f"  fingerprint: {d['fingerprint']}")
    return "\n".join(lines) + "\n"


# --- verification against reference tables ----------------------------------

@dataclass
class CellDiff:
    group: str
    cell: str
    expected: str
    actual: str

    def __str__(self) -> str:
        return f"{self.group} {self.cell}: expected {self.expected}, got {self.actual}"


@dataclass
class VerifyResult:
    groups: list[str]
    diffs: list[CellDiff] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.diffs

    def failed_groups(self) -> list[str]:
        return sorted({d.group for d in self.diffs}, key=self.groups.index)

    def p_x_matches(self) -> int:
        bad = {d.group for d in self.diffs if d.cell == "P_X"}
        return sum(1 for g in self.groups if g not in bad)

    def summary(self) -> str:
        lines = [f"{'PASS' if g not in self.failed_groups() else 'FAIL'}  {g}" for g in self.groups]
        lines.extend(f"  {d}" for d in self.diffs)
        lines.append(f"{self.checked - len(self.diffs)}/{self.checked} cells match; "
                     f"P_X {self.p_x_matches()}/{len(self.groups)}")
        return "\n".join(lines)


def compare_group(name: str, st: Stratification, polys: StrataPolynomials) -> tuple[int, list[CellDiff]]:
    """Compare one group's computation with the reference values; returns (cells checked, diffs)."""
    ref = golden.GROUPS[name]
    diffs: list[CellDiff] = []
    checked = 0

    def check(cell: str, expected, actual) -> None:
        nonlocal checked
        checked += 1
        if expected != actual:
            diffs.append(CellDiff(name, cell, str(expected), str(actual)))

    for key in ("P_Y", "P3", "P2", "P1", "P_X"):
        check(key, ref.poly(key), getattr(polys, key))
    check("census", ref.census, {k.value: v for k, v in st.census.items()})

    by_class = {rec.subgroup.conjugacy_class_id: rec for rec in st.curves}
    matched: set[int] = set()
    for i, row in enumerate(golden.CURVE_ROWS[name]):
        label = f"curve row {i + 1} ({row.h_type})"
        if row.generator not in st.group:
            check(label, "generator in group", "generator not in group")
            continue
        h = closure([row.generator]).element_set
        cid = next(r.conjugacy_class_id for r in st.subgroups if r.subgroup.element_set == h)
        rec = by_class.get(cid)
        if rec is None:
            check(label, "a curve class", "no curve class")
            continue
        matched.add(cid)
        check(f"{label} group", row.h_type, rec.iso.value)
        check(f"{label} components", row.components, rec.components)
        check(f"{label} W(g)", row.weyl, rec.weyl_iso.value)
        check(f"{label} quotient", row.quotient_key(), tuple(sorted(rec.quotient_multiset())))
    check("curve classes", len(golden.CURVE_ROWS[name]), len(by_class))
    check("unmatched curve classes", [], sorted(set(by_class) - matched))
    return checked, diffs


def _verify_one(name: str) -> tuple[int, list[CellDiff], str, int]:
    st = analyze(catalog_group(name))
    checked, diffs = compare_group(name, st, assemble(st))
    return checked, diffs, st.fingerprint.digest(), st.fingerprint.incidence_components


def verify_tables(jobs: int = 1) -> VerifyResult:
    groups = names()
    result = VerifyResult(groups)
    digests = set()
    for name, (checked, diffs, digest, comps) in zip(groups, map_catalog(_verify_one, groups, jobs)):
        result.checked += checked
        result.diffs.extend(diffs)
        digests.add(digest)
        if name in golden.INCIDENCE_COMPONENTS:
            result.checked += 1
            if comps != golden.INCIDENCE_COMPONENTS[name]:
                result.diffs.append(CellDiff(name, "incidence components",
                                             str(golden.INCIDENCE_COMPONENTS[name]), str(comps)))
    result.checked += 1
    if len(digests) != len(groups):
        result.diffs.append(CellDiff("catalog", "fingerprints", f"{len(groups)} distinct", f"{len(digests)} distinct"))
    return result


# --- duality and inclusions -------------------------------------------------

@lru_cache(maxsize=None)
def catalog_fingerprint(name: str) -> str:
    return analyze(catalog_group(name)).fingerprint.digest()


def match_catalog(h: FinMatGroup, bound: int) -> tuple[list[str], str | None, Mat | None]:
    """Catalog classes with h's fingerprint, and the first one certified by a witness."""
    digest = analyze(h).fingerprint.digest()
    candidates = [n for n in names() if catalog_group(n).iso is h.iso and catalog_fingerprint(n) == digest]
    for n in candidates:
        w = bounded_conjugacy_search(catalog_group(n), h, bound)
        if w is not None:
            return candidates, n, w
    return candidates, None, None


@dataclass
class DualityEntry:
    name: str
    dual: str | None
    witness: Mat | None
    candidates: list[str]

    @property
    def status(self) -> str:
        if self.witness is None:
            return "inconclusive"
        return "self-dual" if self.dual == self.name else "dual pair"

    def as_dict(self) -> dict[str, Any]:
        return {
            "class": self.name,
            "dual": self.dual,
            "status": self.status,
            "witness": _mat_list(self.witness) if self.witness is not None else None,
            "fingerprint_candidates": self.candidates,
        }


def duality_report(bound: int = DEFAULT_BOUND) -> list[DualityEntry]:
    """Match the transpose of every catalog group against the catalog.

    The witness P satisfies P C P^-1 = G^T for the matched catalog class C.
    """
    if bound < 1:
        raise InputError("bound must be >= 1")
    out = []
    for n in names():
        t = catalog_group(n).transposed()
        cands, match, w = match_catalog(t, bound)
        out.append(DualityEntry(n, match, w, cands))
    return out


@dataclass
class InclusionEdge:
    sub: str
    sup: str
    witness: Mat

    def as_dict(self) -> dict[str, Any]:
        return {"from": self.sub, "to": self.sup, "witness": _mat_list(self.witness)}


@dataclass
class InclusionDiagram:
    edges: list[InclusionEdge]          # after transitive reduction
    closure_edges: list[tuple[str, str]]
    inconclusive: list[dict[str, Any]]

    def as_dict(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "edges": [e.as_dict() for e in self.edges],
            "inconclusive": self.inconclusive,
        }


def inclusion_diagram(bound: int = DEFAULT_BOUND) -> InclusionDiagram:
    """Edges H -> G when a proper non-cyclic subgroup of G is certified conjugate to H."""
    if bound < 1:
        raise InputError("bound must be >= 1")
    order = names()
    found: dict[tuple[str, str], Mat] = {}
    inconclusive = []
    for g_name in order:
        g = catalog_group(g_name)
        for rec in class_representatives(all_subgroups(g)):
            h = rec.subgroup
            if h.is_cyclic or h.order == g.order:
                continue
            cands, match, w = match_catalog(h, bound)
            if match is None:
                inconclusive.append({
                    "group": g_name,
                    "subgroup_iso": h.iso.value,
                    "subgroup_generators": [_mat_list(x) for x in h.generators],
                    "fingerprint_candidates": cands,
                })
                continue
            found.setdefault((match, g_name), w)
    pairs = set(found)
    reduced = [
        (a, b) for a, b in pairs
        if not any((a, c) in pairs and (c, b) in pairs for c in order if c not in (a, b))
    ]
    key = lambda e: (order.index(e[0]), order.index(e[1]))
    return InclusionDiagram(
        [InclusionEdge(a, b, found[(a, b)]) for a, b in sorted(reduced, key=key)],
        sorted(pairs, key=key),
        inconclusive,
    )


def transitive_closure(edges: Sequence[tuple[str, str]]) -> set[tuple[str, str]]:
    out = set(edges)
    changed = True
    while changed:
        changed = False
        for a, b in list(out):
            for c, d in list(out):
                if b == c and (a, d) not in out:
                    out.add((a, d))
                    changed = True
    return out
