"""Reading posets and set families from JSON."""
from __future__ import annotations

import json
from pathlib import Path

from .config import DEFAULT_LIMITS, Limits
from .errors import InputFormatError
from .poset import Poset
from .semilattice import MeetSemilattice, SetFamily, from_set_family, validate


def detect_format(doc: dict) -> str:
    if not isinstance(doc, dict):
        raise InputFormatError("input must be a JSON object")
    if "ground" in doc and "sets" in doc:
        return "sets"
    if "elements" in doc and ("covers" in doc or "leq" in doc):
        return "covers"
    raise InputFormatError("cannot detect format: expected keys elements+covers|leq or ground+sets")


def poset_from_json(doc: dict) -> Poset:
    pairs = doc.get("covers", doc.get("leq"))
    if pairs is None or "elements" not in doc:
        raise InputFormatError("covers format needs 'elements' and 'covers' (or 'leq')")
    for pair in pairs:
        if len(pair) != 2:
            raise InputFormatError(f"order pairs must have two entries, got {pair!r}")
    return Poset.from_relation(doc["elements"], [tuple(p) for p in pairs])


def family_from_json(doc: dict) -> SetFamily:
    if "ground" not in doc or "sets" not in doc:
        raise InputFormatError("sets format needs 'ground' and 'sets'")
    return SetFamily.from_lists(doc["ground"], doc["sets"])


def semilattice_from_json(doc: dict, fmt: str | None = None, limits: Limits = DEFAULT_LIMITS) -> MeetSemilattice:
    fmt = fmt or detect_format(doc)
    if fmt == "sets":
        return from_set_family(family_from_json(doc), limits=limits)
    if fmt == "covers":
        return validate(poset_from_json(doc), limits=limits)
    raise InputFormatError(f"unknown format {fmt!r}")


def load(path, fmt: str | None = None, limits: Limits = DEFAULT_LIMITS) -> MeetSemilattice:
    doc = json.loads(Path(path).read_text())
    return semilattice_from_json(doc, fmt, limits)
