"""JSON round-tripping for code specs.

Schemas::

    {"family": "qc1gen", "q": "2", "m": 3, "generators": ["x^2+x", "x^2+1"]}
    {"family": "dc", "q": "4", "m": 9, "a": "(a+1)x^8+x+1"}
    {"family": "fc", "q": "3", "m": 4, "a1": "2x^3+x^2+1", "a2": "2x^3+1"}
"""

from __future__ import annotations

import json
from typing import Union

from .fc import FourCirculantSpec
from .gf import parse_field
from .qc import DcSpec, QcOneGenSpec

CodeSpec = Union[QcOneGenSpec, DcSpec, FourCirculantSpec]


class SpecError(ValueError):
    pass


def spec_from_dict(d: dict) -> CodeSpec:
    try:
        family = d["family"]
        field = parse_field(d["q"])
        m = int(d["m"])
        if family == "qc1gen":
            return QcOneGenSpec.parse(field, m, list(d["generators"]))
        if family == "dc":
            return DcSpec.parse(field, m, d["a"])
        if family == "fc":
            return FourCirculantSpec.parse(field, m, d["a1"], d["a2"])
    except KeyError as exc:
        raise SpecError(f"spec is missing key {exc}") from None
    raise SpecError(f"unknown family {family!r}")


def spec_to_dict(spec: CodeSpec) -> dict:
    return spec.to_dict()


def spec_key(spec: CodeSpec) -> str:
    """Canonical serialisation, used for deterministic tie-breaking."""
    return json.dumps(spec.to_dict(), sort_keys=True, separators=(",", ":"))
