"""Serialization of flat antichains: JSON documents and a plain text format."""

from __future__ import annotations

import json
from typing import Optional

from .errors import BadFamily
from .setfam import Family, mask_of
from .trace import ConstructionTrace
from .verify import FlatAntichain


def to_document(A: FlatAntichain, trace: Optional[ConstructionTrace] = None) -> dict:
    """Keys in order n, levels, size, sets, trace; sets by cardinality then colex."""
    return {
        "n": A.n,
        "levels": [A.l, A.l + 1],
        "size": A.size,
        "sets": A.sets(),
        "trace": trace.to_list() if trace is not None else None,
    }


def dumps_json(A: FlatAntichain, trace: Optional[ConstructionTrace] = None) -> str:
    return json.dumps(to_document(A, trace)) + "\n"


def dumps_text(A: FlatAntichain) -> str:
    lines = [f"n={A.n} l={A.l}"] + [" ".join(map(str, s)) for s in A.sets()]
    return "\n".join(lines) + "\n"


def _from_parts(n: int, l: int, sets) -> FlatAntichain:
    masks = [mask_of(s) for s in sets]
    if len(set(masks)) != len(masks):
        raise BadFamily("document lists a set twice")
    upper = [m for m in masks if m.bit_count() == l + 1]
    lower = [m for m in masks if m.bit_count() == l]
    if len(upper) + len(lower) != len(masks):
        raise BadFamily(f"document holds sets outside levels {l} and {l + 1}")
    for s in sets:
        if any(not 1 <= e <= n for e in s):
            raise BadFamily(f"set {s} is not within [{n}]")
    return FlatAntichain(n, l, Family(n, l + 1, upper), Family(n, l, lower))


def from_document(doc: dict) -> tuple[FlatAntichain, Optional[ConstructionTrace]]:
    try:
        n = int(doc["n"])
        l, l1 = (int(x) for x in doc["levels"])
        sets = [[int(e) for e in s] for s in doc["sets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise BadFamily(f"malformed document: {exc}") from None
    if l1 != l + 1:
        raise BadFamily("levels must be consecutive")
    A = _from_parts(n, l, sets)
    if "size" in doc and int(doc["size"]) != A.size:
        raise BadFamily(f"document claims size {doc['size']} but lists {A.size} sets")
    trace = doc.get("trace")
    return A, ConstructionTrace.from_list(trace) if trace else None


def loads(text: str) -> tuple[FlatAntichain, Optional[ConstructionTrace]]:
    """Read either format; JSON is recognized by a leading brace."""
    body = text.strip()
    if body.startswith("{"):
        try:
            doc = json.loads(body)
        except json.JSONDecodeError as exc:
            raise BadFamily(f"invalid JSON: {exc}") from None
        return from_document(doc)
    lines = body.splitlines()
    head = dict(tok.split("=", 1) for tok in lines[0].split()) if lines else {}
    try:
        n, l = int(head["n"]), int(head["l"])
        sets = [[int(x) for x in ln.split()] for ln in lines[1:] if ln.strip()]
    except (KeyError, ValueError) as exc:
        raise BadFamily(f"malformed text document: {exc}") from None
    return _from_parts(n, l, sets), None
