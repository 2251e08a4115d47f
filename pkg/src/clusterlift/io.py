"""JSON documents for seeds, gradings, lifting data, fans and lifted seeds."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from clusterlift.algebra.parse import parse_expression
from clusterlift.algebra.rational import RationalFunction
from clusterlift.cases.toric import FanInput
from clusterlift.errors import MalformedSeed, ParseError
from clusterlift.grading import DegreeConfiguration, DegreeVector
from clusterlift.lifting import LiftedSeed, LiftingData, lift_seed
from clusterlift.matrix import ExchangeMatrix, IntMatrix
from clusterlift.seed import Seed, VertexKind, default_var


def dumps(doc: Any, canonical: bool = True) -> str:
    """Serialize with sorted keys; canonical mode also drops all optional whitespace."""
    if canonical:
        return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON: {e}") from None


def _need(doc: Mapping, key: str, what: str):
    if not isinstance(doc, Mapping) or key not in doc:
        raise ParseError(f"{what} document lacks {key!r}")
    return doc[key]


def _expr(text: Any) -> RationalFunction:
    if isinstance(text, int) and not isinstance(text, bool):
        return RationalFunction.constant(text)
    return parse_expression(text)


def matrix_from_dict(doc: Mapping, what: str = "matrix") -> IntMatrix:
    rows, cols, entries = (_need(doc, k, what) for k in ("rows", "cols", "entries"))
    try:
        return IntMatrix([str(r) for r in rows], [str(c) for c in cols], entries)
    except (TypeError, ValueError) as e:
        raise ParseError(f"bad {what}: {e}") from None


def grading_to_dict(sigma: DegreeConfiguration) -> dict:
    return {
        "basis": list(sigma.basis),
        "degrees": {v: d.coords for v, d in sigma.degrees.items()},
    }


def grading_from_dict(doc: Mapping) -> DegreeConfiguration:
    basis = [str(b) for b in _need(doc, "basis", "grading")]
    degrees = _need(doc, "degrees", "grading")
    return DegreeConfiguration({str(v): DegreeVector(d) for v, d in degrees.items()}, tuple(basis))


def seed_to_dict(s: Seed, grading: DegreeConfiguration | None = None) -> dict:
    doc: dict[str, Any] = {
        "vertices": [{"id": v, "kind": s.kinds[v].value} for v in s.vertices],
        "matrix": s.matrix.to_dict(),
        "cluster": {v: str(s.cluster[v]) for v in s.vertices},
        "provenance": list(s.provenance),
    }
    names = {v: n for v, n in s.names.items() if n != default_var(v)}
    if names:
        doc["names"] = names
    if s._chart:
        doc["chart"] = {g: str(f) for g, f in s._chart.items()}
    if grading is not None:
        doc["grading"] = grading_to_dict(grading)
    return doc


def seed_from_dict(doc: Mapping) -> tuple[Seed, DegreeConfiguration | None]:
    verts = _need(doc, "vertices", "seed")
    try:
        kinds = {str(v["id"]): VertexKind(v["kind"]) for v in verts}
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad vertex entry: {e}") from None
    matrix = ExchangeMatrix.coerce(matrix_from_dict(_need(doc, "matrix", "seed")))
    cluster = None
    if "cluster" in doc:
        cluster = {str(v): _expr(f) for v, f in doc["cluster"].items()}
    chart = None
    if "chart" in doc:
        chart = {str(g): _expr(f) for g, f in doc["chart"].items()}
    s = Seed(kinds, matrix, cluster, doc.get("provenance", ()), doc.get("names"), chart)
    grading = grading_from_dict(doc["grading"]) if "grading" in doc else None
    return s, grading


def lifting_to_dict(data: LiftingData) -> dict:
    doc = {"D": list(data.D), "nu": data.nu.to_dict(), "frozen_kind": data.frozen_kind.value}
    names = {d: n for d, n in data.names.items() if n != default_var(d, "X")}
    if names:
        doc["names"] = names
    return doc


def lifting_from_dict(doc: Mapping) -> LiftingData:
    D = tuple(str(d) for d in _need(doc, "D", "lifting"))
    nu = matrix_from_dict(_need(doc, "nu", "lifting"), "nu")
    kind = doc.get("frozen_kind", "highlyfrozen")
    try:
        kind = VertexKind(kind)
    except ValueError:
        raise ParseError(f"bad frozen_kind {kind!r}") from None
    return LiftingData(D, nu, kind, doc.get("names", {}))


def fan_to_dict(fan: FanInput) -> dict:
    return {"rank": fan.rank, "rays": [list(r) for r in fan.rays], "base_cone": list(fan.base_cone)}


def fan_from_dict(doc: Mapping) -> FanInput:
    try:
        return FanInput(int(_need(doc, "rank", "fan")), _need(doc, "rays", "fan"), _need(doc, "base_cone", "fan"))
    except (TypeError, ValueError) as e:
        raise ParseError(f"bad fan document: {e}") from None


def lifted_to_dict(L: LiftedSeed) -> dict:
    doc = {
        "seed": seed_to_dict(L.seed, L.grading),
        "base": seed_to_dict(L.base),
        "lifting": lifting_to_dict(L.data),
    }
    if L.hypotheses is not None:
        doc["warnings"] = L.hypotheses.warnings
    if L.notices:
        doc["notices"] = list(L.notices)
    return doc


def lifted_from_dict(doc: Mapping) -> LiftedSeed:
    """Rebuild a lifted seed from its base and lifting data, checking the stored seed."""
    base, _ = seed_from_dict(_need(doc, "base", "lifted"))
    data = lifting_from_dict(_need(doc, "lifting", "lifted"))
    L = lift_seed(base, data, check="warnings" in doc)
    if "seed" in doc:
        stored, _ = seed_from_dict(doc["seed"])
        if stored != L.seed:
            raise MalformedSeed("stored lifted seed does not match its base and lifting data")
    return LiftedSeed(L.seed, L.base, L.data, L.grading, L.hypotheses, tuple(doc.get("notices", ())))
