"""JSON structure documents: labels on the outside, indices inside.

A document looks like::

    {
      "elements": ["a", "b", "c", "d"],
      "open_sets": [[], ["a"], ["a", "b"], ["a", "b", "c", "d"]],
      "add": [["a", "b", "c", "d"], ...],
      "mul": [["a", "a", "a", "a"], ...],
      "hom": {"target": {...nested document...}, "map": {"a": "0", ...}}
    }

``subbasis`` may replace ``open_sets``; ``hom`` is optional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

from .analyzer import CheckReport, TopoRingStructure
from .ring import RingError, validate_ring
from .space import GroundSet, SpaceError, Topology, generate_topology
from .theorems import HomContext

FIXTURES = ("example34", "z4-discrete", "z4-indiscrete")


class DocumentError(ValueError):
    pass


@dataclass
class Document:
    structure: TopoRingStructure
    hom: HomContext | None = None


def _labels_mask(g: GroundSet, labels: Any, where: str) -> int:
    if not isinstance(labels, list):
        raise DocumentError(f"{where}: expected a list of element labels")
    try:
        return g.mask(str(x) for x in labels)
    except SpaceError as e:
        raise DocumentError(f"{where}: {e}") from None


def _table(g: GroundSet, rows: Any, name: str) -> list[list[int]]:
    if not isinstance(rows, list) or len(rows) != g.n:
        raise DocumentError(f"{name}: expected {g.n} rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != g.n:
            raise DocumentError(f"{name}: row {i} must have {g.n} entries")
        try:
            out.append([g.index(str(x)) for x in row])
        except SpaceError as e:
            raise DocumentError(f"{name}: {e}") from None
    return out


def parse_structure(doc: dict[str, Any]) -> Document:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    try:
        g = GroundSet(tuple(str(x) for x in doc["elements"]))
    except KeyError:
        raise DocumentError("missing 'elements'") from None
    except SpaceError as e:
        raise DocumentError(f"elements: {e}") from None

    has_opens, has_sub = "open_sets" in doc, "subbasis" in doc
    if has_opens == has_sub:
        raise DocumentError("exactly one of 'open_sets' or 'subbasis' is required")
    try:
        if has_opens:
            opens = [_labels_mask(g, s, f"open_sets[{i}]") for i, s in enumerate(doc["open_sets"])]
            topo = Topology(g, tuple(opens))
        else:
            sub = [_labels_mask(g, s, f"subbasis[{i}]") for i, s in enumerate(doc["subbasis"])]
            topo = generate_topology(g, sub)
    except SpaceError as e:
        raise DocumentError(f"topology: {e}") from None

    for key in ("add", "mul"):
        if key not in doc:
            raise DocumentError(f"missing '{key}' table")
    try:
        ring = validate_ring(g, _table(g, doc["add"], "add"), _table(g, doc["mul"], "mul"))
    except RingError as e:
        raise DocumentError(f"ring: {e}") from None
    s = TopoRingStructure(ring, topo)

    hom = None
    if "hom" in doc:
        h = doc["hom"]
        if not isinstance(h, dict) or "target" not in h or "map" not in h:
            raise DocumentError("hom needs 'target' and 'map'")
        target = parse_structure(h["target"]).structure
        m = h["map"]
        if not isinstance(m, dict) or set(map(str, m)) != set(g.labels):
            raise DocumentError("hom map must give an image for every element")
        try:
            mapping = tuple(target.ground.index(str(m[lab])) for lab in g.labels)
        except SpaceError as e:
            raise DocumentError(f"hom map: {e}") from None
        hom = HomContext(target, mapping)
    return Document(s, hom)


def serialize_structure(s: TopoRingStructure, hom: HomContext | None = None) -> dict[str, Any]:
    g = s.ground
    lab = g.labels
    out: dict[str, Any] = {
        "elements": list(lab),
        "open_sets": [g.names(u) for u in s.topology.opens],
        "add": [[lab[v] for v in row] for row in s.ring.add],
        "mul": [[lab[v] for v in row] for row in s.ring.mul],
    }
    if hom is not None:
        tl = hom.target.ground.labels
        out["hom"] = {"target": serialize_structure(hom.target),
                      "map": {lab[i]: tl[v] for i, v in enumerate(hom.map)}}
    return out


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("estar_rings") / "fixtures" / f"{name}.json"))


def load(source: str | Path) -> Document:
    """Load a document from a path, or a bundled fixture by name."""
    path = Path(source)
    if not path.exists():
        stem = path.name.removesuffix(".json")
        if stem in FIXTURES and str(path.parent) == ".":
            path = fixture_path(stem)
        else:
            raise DocumentError(f"no such file: {source}")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path}: invalid JSON ({e})") from None
    return parse_structure(data)


def report_to_dict(report: CheckReport, g: GroundSet) -> dict[str, Any]:
    """Label-level view of a report; upper-case witness keys are subsets."""
    def conv(key, value):
        return g.names(value) if key[:1].isupper() else g.labels[value]

    out: dict[str, Any] = {
        "check": report.check_id,
        "status": report.status.value,
        "kind": report.kind,
        "delta_mode": report.delta_mode,
        "variant": report.variant,
        "hypothesis": report.hypothesis,
        "detail": report.detail,
        "witness": None if report.witness is None else
        {k: conv(k, v) for k, v in report.witness.items()},
    }
    ev = dict(report.evidence)
    if "pairs" in ev:
        ev["pairs"] = [[g.names(a), g.names(b)] for a, b in ev["pairs"]]
    out["evidence"] = ev
    return out


def format_witness(report: CheckReport, g: GroundSet) -> str:
    if not report.witness:
        return ""
    parts = []
    for k, v in report.witness.items():
        parts.append(f"{k}={g.format(v) if k[:1].isupper() else g.labels[v]}")
    return " ".join(parts)
