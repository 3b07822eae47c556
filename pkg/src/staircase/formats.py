"""JSON wire formats; see docs/formats.md for the frozen schemas."""
from __future__ import annotations

import json
from pathlib import Path

from .family import FamilyParams
from .ideal import StaircaseIdeal, normalize_report


def dump_ideal(I: StaircaseIdeal) -> str:
    """Compact JSON, e.g. ``[[0,6],[2,3],[5,0]]``."""
    return json.dumps(I.to_list(), separators=(",", ":"))


def parse_ideal(obj) -> tuple[StaircaseIdeal, bool]:
    """Parse a decoded JSON array of [a, b] pairs.

    Returns the canonical ideal and whether canonicalization changed the
    input (reordering, duplicates, or divisible generators).
    """
    if not isinstance(obj, list):
        raise ValueError("an ideal must be a JSON array of [a, b] pairs")
    pairs = []
    for item in obj:
        if not isinstance(item, list) or len(item) != 2:
            raise ValueError(f"expected an [a, b] pair, got {item!r}")
        pairs.append(tuple(item))
    return normalize_report(pairs)


def loads_ideal(text: str) -> tuple[StaircaseIdeal, bool]:
    return parse_ideal(json.loads(text))


def load_ideal(path) -> tuple[StaircaseIdeal, bool]:
    return loads_ideal(Path(path).read_text())


def load_params(path) -> FamilyParams:
    return FamilyParams.from_json(json.loads(Path(path).read_text()))


def dump_params(params: FamilyParams) -> str:
    return json.dumps(params.to_json(), separators=(",", ":"))
