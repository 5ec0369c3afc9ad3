"""JSON documents and DOT export.

Two document types exist, both with ``"format_version": "1"``:

quiver document
    ``vertices``, ``arrows`` (``id``/``source``/``target``), ``f``,
    ``weights``; optionally ``border``, ``params`` and free-form
    ``metadata``.  Scalars are strings such as ``"3/7"`` or ``"2 mod 3"``;
    the coefficient field is F_p as soon as one scalar is written mod p.

Brauer graph document
    ``vertices`` (``id``/``multiplicity``/``cyclic_order``) and ``edges``
    (``id``/``half_edges``).

Unknown fields are rejected.  Errors carry a JSON pointer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import jsonschema

from .brauer import BrauerGraph
from .errors import DocumentError
from .quiver import Arrow, BiserialQuiver, Quiver, border_loops
from .scalars import FieldElement, parse_scalar
from .weighted import WeightedBiserialQuiver

FORMAT_VERSION = "1"

_ID = {"type": "string", "minLength": 1}
_SCALAR = {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$|^\s*-?\d+\s+mod\s+\d+\s*$"}

QUIVER_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "quiver document",
    "type": "object",
    "additionalProperties": False,
    "required": ["format_version", "vertices", "arrows", "f", "weights"],
    "properties": {
        "format_version": {"const": FORMAT_VERSION},
        "vertices": {"type": "array", "items": _ID},
        "arrows": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "source", "target"],
                "properties": {"id": _ID, "source": _ID, "target": _ID},
            },
        },
        "f": {"type": "object", "additionalProperties": _ID},
        "weights": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 1}},
        "border": {"type": "object", "additionalProperties": _SCALAR},
        "params": {"type": "object", "additionalProperties": _SCALAR},
        "metadata": {},
    },
}

BRAUER_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Brauer graph document",
    "type": "object",
    "additionalProperties": False,
    "required": ["format_version", "vertices", "edges"],
    "properties": {
        "format_version": {"const": FORMAT_VERSION},
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "multiplicity", "cyclic_order"],
                "properties": {
                    "id": _ID,
                    "multiplicity": {"type": "integer", "minimum": 1},
                    "cyclic_order": {"type": "array", "items": _ID, "minItems": 1},
                },
            },
        },
        "edges": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "half_edges"],
                "properties": {
                    "id": _ID,
                    "half_edges": {"type": "array", "items": _ID, "minItems": 2, "maxItems": 2},
                },
            },
        },
    },
}


def _pointer(path) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in path)


def _check(obj: Any, schema: dict) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(obj), key=lambda e: (len(e.absolute_path), list(map(str, e.absolute_path))))
    if errors:
        err = errors[0]
        raise DocumentError(_pointer(err.absolute_path), err.message)


def parse_document(text_or_obj) -> Any:
    if isinstance(text_or_obj, (str, bytes)):
        try:
            return json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise DocumentError("", f"invalid JSON: {exc}") from None
    return text_or_obj


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def is_brauer_document(obj: Any) -> bool:
    return isinstance(obj, dict) and "edges" in obj


# -- quivers --------------------------------------------------------------


@dataclass(frozen=True)
class QuiverDocument:
    wbq: WeightedBiserialQuiver
    metadata: Any = field(default=None)


def _field_of(doc: dict) -> int | None:
    primes = set()
    for key in ("border", "params"):
        for s in doc.get(key, {}).values():
            x = parse_scalar(s)
            if isinstance(x, FieldElement):
                primes.add(x.p)
    if len(primes) > 1:
        raise DocumentError("", f"scalars from different fields: {sorted(primes)}")
    return primes.pop() if primes else None


def load_quiver(source) -> QuiverDocument:
    """Parse and validate a quiver document (text or already decoded JSON)."""
    doc = parse_document(source)
    _check(doc, QUIVER_SCHEMA)
    for key in ("border", "params"):
        for k, s in doc.get(key, {}).items():
            try:
                parse_scalar(s)
            except ValueError as exc:
                raise DocumentError(_pointer([key, k]), str(exc)) from None
    p = _field_of(doc)
    quiver = Quiver(doc["vertices"], [Arrow(a["id"], a["source"], a["target"]) for a in doc["arrows"]])
    bq = BiserialQuiver(quiver, doc["f"])
    wbq = WeightedBiserialQuiver(bq, doc["weights"], border=doc.get("border"), params=doc.get("params"), p=p)
    return QuiverDocument(wbq, doc.get("metadata"))


def quiver_to_dict(wbq: WeightedBiserialQuiver, metadata: Any = None) -> dict:
    bq = wbq.bq
    out = {
        "format_version": FORMAT_VERSION,
        "vertices": list(bq.vertices),
        "arrows": [{"id": a.id, "source": a.source, "target": a.target} for a in bq.arrows],
        "f": dict(bq.f),
        "weights": dict(wbq.weights),
    }
    if wbq.border is not None:
        out["border"] = {v: str(s) for v, s in wbq.border.items()}
    if wbq.params is not None:
        out["params"] = {k: str(s) for k, s in wbq.params.items()}
    if metadata is not None:
        out["metadata"] = metadata
    return out


def dump_quiver(wbq: WeightedBiserialQuiver, metadata: Any = None) -> str:
    return _dumps(quiver_to_dict(wbq, metadata))


# -- Brauer graphs --------------------------------------------------------


def load_brauer(source) -> BrauerGraph:
    doc = parse_document(source)
    _check(doc, BRAUER_SCHEMA)
    ids = [v["id"] for v in doc["vertices"]]
    if len(set(ids)) != len(ids):
        raise DocumentError("/vertices", "duplicate vertex id")
    eids = [e["id"] for e in doc["edges"]]
    if len(set(eids)) != len(eids):
        raise DocumentError("/edges", "duplicate edge id")
    return BrauerGraph(
        {v["id"]: tuple(v["cyclic_order"]) for v in doc["vertices"]},
        {v["id"]: v["multiplicity"] for v in doc["vertices"]},
        {e["id"]: tuple(e["half_edges"]) for e in doc["edges"]},
    )


def brauer_to_dict(graph: BrauerGraph) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "vertices": [
            {"id": v, "multiplicity": graph.multiplicity[v], "cyclic_order": list(graph.cyclic_order[v])}
            for v in graph.vertices
        ],
        "edges": [{"id": e, "half_edges": list(hs)} for e, hs in graph.edges.items()],
    }


def dump_brauer(graph: BrauerGraph) -> str:
    return _dumps(brauer_to_dict(graph))


# -- DOT --------------------------------------------------------------------


def _q(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def _record_escape(s: str) -> str:
    for ch in "{}|<> ":
        s = s.replace(ch, "\\" + ch)
    return s


def export_dot(obj) -> str:
    """DOT text for a (weighted) biserial quiver or a Brauer graph."""
    if isinstance(obj, BrauerGraph):
        return _brauer_dot(obj)
    if isinstance(obj, BiserialQuiver):
        obj = WeightedBiserialQuiver(obj, {o[0]: 1 for o in obj.g_orbits})
    return _quiver_dot(obj)


def _quiver_dot(wbq: WeightedBiserialQuiver) -> str:
    bq = wbq.bq
    border = set(border_loops(bq))
    lines = ["digraph quiver {", "  node [shape=circle];"]
    lines += [f"  {_q(v)};" for v in bq.vertices]
    for a in bq.arrows:
        attrs = [f"label={_q(a.id)}", f"f={_q(bq.f[a.id])}", f"weight_m={wbq.m(a.id)}"]
        if a.id in wbq.virtual_loops:
            attrs.append('style="dashed"')
        elif a.id in border:
            attrs.append('style="bold", color="blue"')
        lines.append(f"  {_q(a.source)} -> {_q(a.target)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _brauer_dot(graph: BrauerGraph) -> str:
    lines = ["graph brauer {", "  node [shape=record];"]
    for v in graph.vertices:
        ports = "|".join(f"<{_record_escape(h)}> {_record_escape(h)}" for h in graph.cyclic_order[v])
        label = f"{{{_record_escape(v)} (e={graph.multiplicity[v]})|{{{ports}}}}}"
        lines.append(f"  {_q(v)} [label={_q(label)}];")
    for e, (h1, h2) in graph.edges.items():
        v1, v2 = graph.attachment[h1], graph.attachment[h2]
        lines.append(f"  {_q(v1)}:{_q(h1)} -- {_q(v2)}:{_q(h2)} [label={_q(e)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
