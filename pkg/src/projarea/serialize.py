"""JSON encodings for every value the tools exchange.

Rationals are strings (``"3/4"``, ``"-2"``) so no precision is ever lost.
Top-level documents carry a ``type`` tag and ``format_version``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import ParseError
from .exact import SymMatrix, as_rational, format_rational
from .homology import CIFactorization, PmClass
from .membership import Constraint, MembershipVerdict, Region, Status, ZeroOrbitClass
from .realize import PairCertificate, SelfCertificate
from .wedge import PermutedScaling, Polytope4, WedgeVector

FORMAT_VERSION = 1


def rat(x) -> str:
    return format_rational(x)


def rats(xs) -> list[str]:
    return [rat(x) for x in xs]


def parse_rats(xs) -> list[Fraction]:
    if not isinstance(xs, list):
        raise ParseError(f"expected a list of rationals, got {xs!r}")
    return [as_rational(x) for x in xs]


def polytope_to_json(a: Polytope4) -> list[list[str]]:
    return [rats(v) for v in a.generators]


def polytope_from_json(data) -> Polytope4:
    if not isinstance(data, list):
        raise ParseError("a polytope is a list of 4-element points")
    return Polytope4(parse_rats(v) for v in data)


def group_to_json(g: PermutedScaling) -> dict:
    return {"lambda": rat(g.lam), "c": rats(g.c), "sigma": [s + 1 for s in g.sigma]}


def group_from_json(data: dict) -> PermutedScaling:
    return PermutedScaling(as_rational(data["lambda"]), parse_rats(data["c"]),
                           [int(s) - 1 for s in data["sigma"]])


def _optional(x):
    return None if x is None else rat(x)


def to_json(obj) -> dict:
    """Tagged JSON-ready dict for any supported value."""
    if isinstance(obj, WedgeVector):
        body: dict[str, Any] = {"type": "wedge", "entries": rats(obj)}
    elif isinstance(obj, Polytope4):
        body = {"type": "polytope", "vertices": polytope_to_json(obj)}
    elif isinstance(obj, PermutedScaling):
        body = {"type": "group_element", **group_to_json(obj)}
    elif isinstance(obj, MembershipVerdict):
        body = {"type": "verdict", "region": obj.region.value, "status": obj.status.value,
                "witness": obj.witness,
                "constraint": None if obj.constraint is None else
                {"kind": obj.constraint.kind, "indices": list(obj.constraint.indices)}}
    elif isinstance(obj, ZeroOrbitClass):
        body = {"type": "zero_orbit", "representative": rats(obj.representative),
                "witness": None if obj.witness is None else group_to_json(obj.witness)}
    elif isinstance(obj, PairCertificate):
        body = {"type": "pair_certificate", "target": rats(obj.target),
                "A": polytope_to_json(obj.A), "B": polytope_to_json(obj.B),
                "recomputed": rats(obj.recomputed), "path": obj.path, "exact": obj.exact}
    elif isinstance(obj, SelfCertificate):
        body = {"type": "self_certificate", "target": rats(obj.target),
                "A": polytope_to_json(obj.A), "recomputed": rats(obj.recomputed),
                "residual": rat(obj.residual), "proportionality": _optional(obj.proportionality),
                "exact": obj.exact, "bits": obj.bits}
    elif isinstance(obj, CIFactorization):
        body = {"type": "ci_certificate", "mu": rat(obj.mu), "a": rats(obj.a), "b": rats(obj.b),
                "branch": obj.branch}
    elif isinstance(obj, PmClass):
        body = {"type": "pm_class", "dims": list(obj.dims),
                "matrix": [rats(row) for row in obj.matrix.entries]}
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    body["format_version"] = FORMAT_VERSION
    return body


def from_json(data: dict):
    """Inverse of :func:`to_json`."""
    if not isinstance(data, dict) or "type" not in data:
        raise ParseError("expected a tagged object")
    version = data.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version}")
    kind = data["type"]
    try:
        if kind == "wedge":
            return WedgeVector.of(parse_rats(data["entries"]))
        if kind == "polytope":
            return polytope_from_json(data["vertices"])
        if kind == "group_element":
            return group_from_json(data)
        if kind == "verdict":
            c = data["constraint"]
            constraint = None if c is None else Constraint(c["kind"], tuple(c["indices"]))
            return MembershipVerdict(Region(data["region"]), Status(data["status"]), constraint)
        if kind == "zero_orbit":
            w = data["witness"]
            return ZeroOrbitClass(WedgeVector.of(parse_rats(data["representative"])),
                                  None if w is None else group_from_json(w))
        if kind == "pair_certificate":
            return PairCertificate(WedgeVector.of(parse_rats(data["target"])),
                                   polytope_from_json(data["A"]), polytope_from_json(data["B"]),
                                   WedgeVector.of(parse_rats(data["recomputed"])),
                                   data["path"], bool(data["exact"]))
        if kind == "self_certificate":
            prop = data["proportionality"]
            return SelfCertificate(WedgeVector.of(parse_rats(data["target"])),
                                   polytope_from_json(data["A"]),
                                   WedgeVector.of(parse_rats(data["recomputed"])),
                                   as_rational(data["residual"]),
                                   None if prop is None else as_rational(prop),
                                   bool(data["exact"]), int(data["bits"]))
        if kind == "ci_certificate":
            return CIFactorization(as_rational(data["mu"]), tuple(parse_rats(data["a"])),
                                   tuple(parse_rats(data["b"])), data["branch"])
        if kind == "pm_class":
            return PmClass(data["dims"], SymMatrix(parse_rats(r) for r in data["matrix"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed {kind} object: {exc}") from exc
    raise ParseError(f"unknown object type {kind!r}")


def dumps(obj) -> str:
    """Canonical text: sorted keys, so equal values give identical bytes."""
    return json.dumps(to_json(obj), sort_keys=True)


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_json(data)
