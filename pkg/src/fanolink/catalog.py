"""Fixture catalog: varieties, extractions, links and exclusion cases.

On disk a catalog is one JSON document::

    {
      "schema_version": 1,
      "entries": [
        {"id": "Z5", "kind": "family",
         "provenance": {"source": "paper", "citation": "..."},
         "payload": {"weights": [1,1,1,1,2], "degrees": [5], "numerics": "Z5/num"}},
        ...
      ]
    }

Rationals are ``"p/q"`` strings.  Payload keys per kind:

- numerics: genus, kcube, basket (list of [r, a])
- family: weights, degrees, numerics (id or null)
- extraction: label, and discrepancy + exc_cube, or inferred_drop; optional weights
- link: left/right ({numerics, extraction, family?}), midpoint, midpoint_family?
- exclusion_case: test, params, expected

Links reference other entries by id; a dangling reference is a load error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterator

from fanolink.exclusion import CASE_TESTS, ExclusionCase, replay_case
from fanolink.families import Family, family_hilbert_series
from fanolink.links import ExtractionData, LinkEnd, LinkRecord, verify_link
from fanolink.rational import as_fraction, fmt
from fanolink.rr import Basket, FanoNumerics, rr_hilbert_sequence

SCHEMA_VERSION = 1
KINDS = ("family", "numerics", "extraction", "link", "exclusion_case")
SOURCES = ("paper", "derived", "inferred")


class CatalogError(ValueError):
    """A malformed catalog document; ``entry_id`` names the offending entry."""

    def __init__(self, message: str, entry_id: str | None = None):
        self.entry_id = entry_id
        super().__init__(f"{entry_id}: {message}" if entry_id else message)


@dataclass(frozen=True)
class Provenance:
    source: str
    citation: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    """One fixture. ``refs`` keeps the ids a family or link was built from."""

    id: str
    kind: str
    payload: Any
    provenance: Provenance
    refs: tuple[tuple[str, str], ...] = ()

    def ref(self, role: str) -> str | None:
        return dict(self.refs).get(role)


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...] = ()
    schema_version: int = SCHEMA_VERSION
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "_index", {e.id: e for e in self.entries})

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def __contains__(self, entry_id):
        return entry_id in self._index

    def get(self, entry_id: str) -> CatalogEntry | None:
        return self._index.get(entry_id)

    def __getitem__(self, entry_id: str) -> CatalogEntry:
        try:
            return self._index[entry_id]
        except KeyError:
            raise KeyError(f"no catalog entry {entry_id!r}") from None

    def of_kind(self, kind: str) -> list[CatalogEntry]:
        return [e for e in self.entries if e.kind == kind]

    def numerics_for(self, family_id: str) -> FanoNumerics | None:
        ref = self[family_id].ref("numerics")
        return None if ref is None else self[ref].payload

    def family_pairs(self) -> list[tuple[CatalogEntry, FanoNumerics]]:
        return [
            (e, self[e.ref("numerics")].payload)
            for e in self.of_kind("family")
            if e.ref("numerics") is not None
        ]


# -- (de)serialisation -----------------------------------------------------------


def _encode_numerics(n: FanoNumerics) -> dict:
    return {"genus": n.genus, "kcube": fmt(n.kcube), "basket": n.basket.as_pairs()}


def _encode_extraction(e: ExtractionData) -> dict:
    out: dict = {"label": e.label}
    if e.inferred:
        out["inferred_drop"] = fmt(e.inferred_drop)
    else:
        out["discrepancy"] = fmt(e.discrepancy)
        out["exc_cube"] = fmt(e.exc_cube)
    if e.weights is not None:
        out["weights"] = list(e.weights)
    return out


def _encode_entry(e: CatalogEntry) -> dict:
    refs = dict(e.refs)
    if e.kind == "numerics":
        payload = _encode_numerics(e.payload)
    elif e.kind == "family":
        payload = {
            "weights": list(e.payload.weights),
            "degrees": list(e.payload.degrees),
            "numerics": refs.get("numerics"),
        }
    elif e.kind == "extraction":
        payload = _encode_extraction(e.payload)
    elif e.kind == "link":
        payload = {"label": e.payload.label}
        for side in ("left", "right"):
            payload[side] = {
                "numerics": refs[f"{side}.numerics"],
                "extraction": refs[f"{side}.extraction"],
                "family": refs.get(f"{side}.family"),
            }
        payload["midpoint"] = refs["midpoint"]
        payload["midpoint_family"] = refs.get("midpoint_family")
    else:
        c = e.payload
        payload = {"label": c.label, "test": c.test, "params": c.params, "expected": c.expected}
    return {
        "id": e.id,
        "kind": e.kind,
        "provenance": {"source": e.provenance.source, "citation": e.provenance.citation},
        "payload": payload,
    }


def to_document(c: Catalog) -> dict:
    return {"schema_version": c.schema_version, "entries": [_encode_entry(e) for e in c.entries]}


def _need(payload, key, eid):
    if not isinstance(payload, dict) or key not in payload:
        raise CatalogError(f"payload is missing field {key!r}", eid)
    return payload[key]


def _decode_numerics(p, eid) -> FanoNumerics:
    try:
        basket = Basket(tuple(tuple(x) for x in _need(p, "basket", eid)))
        return FanoNumerics(int(_need(p, "genus", eid)), as_fraction(_need(p, "kcube", eid)), basket)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, CatalogError):
            raise
        raise CatalogError(f"bad numerics: {exc}", eid) from None


def _decode_extraction(p, eid) -> ExtractionData:
    try:
        return ExtractionData(
            label=_need(p, "label", eid),
            discrepancy=p.get("discrepancy"),
            exc_cube=p.get("exc_cube"),
            weights=p.get("weights"),
            inferred_drop=p.get("inferred_drop"),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, CatalogError):
            raise
        raise CatalogError(f"bad extraction: {exc}", eid) from None


def from_document(doc: dict) -> Catalog:
    """Validate and build a catalog; raises CatalogError naming the bad entry."""
    if not isinstance(doc, dict):
        raise CatalogError("catalog document must be a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise CatalogError(f"unknown schema_version {version!r} (expected {SCHEMA_VERSION})")
    raw = doc.get("entries")
    if not isinstance(raw, list):
        raise CatalogError("'entries' must be a list")

    seen = {}
    for item in raw:
        if not isinstance(item, dict) or not isinstance(item.get("id"), str) or not item["id"]:
            raise CatalogError(f"entry without a string id: {item!r}")
        eid = item["id"]
        if eid in seen:
            raise CatalogError("duplicate id", eid)
        if item.get("kind") not in KINDS:
            raise CatalogError(f"unknown kind {item.get('kind')!r}", eid)
        prov = item.get("provenance")
        if not isinstance(prov, dict) or prov.get("source") not in SOURCES:
            raise CatalogError("provenance.source must be one of paper/derived/inferred", eid)
        if prov["source"] != "derived" and not prov.get("citation"):
            raise CatalogError("provenance citation required", eid)
        if "payload" not in item:
            raise CatalogError("missing payload", eid)
        seen[eid] = item

    def resolve(eid, ref, kind):
        if ref not in seen:
            raise CatalogError(f"dangling reference to {ref!r}", eid)
        if seen[ref]["kind"] != kind:
            raise CatalogError(f"reference {ref!r} is a {seen[ref]['kind']}, not a {kind}", eid)
        return built[ref].payload

    built: dict[str, CatalogEntry] = {}
    order = {k: i for i, k in enumerate(("numerics", "extraction", "family", "exclusion_case", "link"))}
    for item in sorted(raw, key=lambda it: order[it["kind"]]):
        eid, kind, p = item["id"], item["kind"], item["payload"]
        prov = Provenance(item["provenance"]["source"], item["provenance"].get("citation", ""))
        refs: dict[str, str] = {}
        if kind == "numerics":
            payload = _decode_numerics(p, eid)
        elif kind == "extraction":
            payload = _decode_extraction(p, eid)
        elif kind == "family":
            try:
                payload = Family.of(_need(p, "weights", eid), *_need(p, "degrees", eid))
            except (TypeError, ValueError) as exc:
                if isinstance(exc, CatalogError):
                    raise
                raise CatalogError(f"bad family: {exc}", eid) from None
            if p.get("numerics") is not None:
                resolve(eid, p["numerics"], "numerics")
                refs["numerics"] = p["numerics"]
        elif kind == "exclusion_case":
            test = _need(p, "test", eid)
            if test not in CASE_TESTS:
                raise CatalogError(f"unknown exclusion test {test!r}", eid)
            params = _need(p, "params", eid)
            if not isinstance(params, dict):
                raise CatalogError("params must be an object", eid)
            payload = ExclusionCase(test, params, p.get("expected", {}), p.get("label", eid))
        else:
            ends = {}
            for side in ("left", "right"):
                s = _need(p, side, eid)
                numerics = resolve(eid, _need(s, "numerics", eid), "numerics")
                extraction = resolve(eid, _need(s, "extraction", eid), "extraction")
                family = resolve(eid, s["family"], "family") if s.get("family") else None
                ends[side] = LinkEnd(numerics, extraction, family)
                refs[f"{side}.numerics"] = s["numerics"]
                refs[f"{side}.extraction"] = s["extraction"]
                if s.get("family"):
                    refs[f"{side}.family"] = s["family"]
            midpoint = resolve(eid, _need(p, "midpoint", eid), "numerics")
            refs["midpoint"] = p["midpoint"]
            mid_family = None
            if p.get("midpoint_family"):
                mid_family = resolve(eid, p["midpoint_family"], "family")
                refs["midpoint_family"] = p["midpoint_family"]
            payload = LinkRecord(ends["left"], ends["right"], midpoint, mid_family, p.get("label", eid))
        built[eid] = CatalogEntry(eid, kind, payload, prov, tuple(sorted(refs.items())))

    return Catalog(tuple(built[item["id"]] for item in raw), version)


def load_catalog(path) -> Catalog:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogError(f"cannot read {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path} is not valid JSON: {exc}") from None
    return from_document(doc)


def save_catalog(c: Catalog, path) -> None:
    Path(path).write_text(json.dumps(to_document(c), indent=2) + "\n", encoding="utf-8")


# -- consistency ------------------------------------------------------------------


def check_catalog(c: Catalog, depth: int = 30) -> list[dict]:
    """Every invariant the fixtures promise, one result dict per entry checked."""
    results = []
    for entry, numerics in c.family_pairs():
        family = entry.payload
        try:
            series = family_hilbert_series(family, depth)
        except ValueError as exc:
            results.append({"id": entry.id, "check": "series", "passed": False, "detail": str(exc)})
            continue
        rr = rr_hilbert_sequence(numerics, depth)
        ok = rr.ok and list(rr) == series
        results.append({
            "id": entry.id,
            "check": "series",
            "passed": ok,
            "detail": f"RR and Hilbert series agree to degree {depth}" if ok else "mismatch",
        })
    for entry in c.of_kind("numerics"):
        n = entry.payload
        results.append({
            "id": entry.id,
            "check": "rr",
            "passed": n.is_consistent and n.is_fano_candidate,
            "detail": str(n),
        })
    for entry in c.of_kind("link"):
        report = verify_link(entry.payload, depth)
        results.append({
            "id": entry.id,
            "check": "link",
            "passed": report.passed,
            "detail": "; ".join(f"{ch.name}: {ch.detail}" for ch in report.failures) or "all checks pass",
        })
    for entry in c.of_kind("exclusion_case"):
        rep = replay_case(entry.payload)
        results.append({
            "id": entry.id,
            "check": "exclusion",
            "passed": rep.reproduced and rep.verdict.value == "excluded",
            "detail": rep.verdict.value + ("" if rep.reproduced else ": " + "; ".join(rep.mismatches)),
        })
    return results


def builtin_catalog() -> Catalog:
    from fanolink._builtin import DOCUMENT

    return from_document(DOCUMENT)
