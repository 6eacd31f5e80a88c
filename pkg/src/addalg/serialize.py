"""JSON (de)serialization: rationals, polynomials, algebra descriptions
and instance files.

Rationals travel as "p/q" or integer strings.  An algebra description
is a dict with a "kind" discriminator; an instance file bundles one
algebra description with named subspace generator lists.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import subspace as sub
from .algebra import (
    Algebra,
    companion_algebra,
    direct_product,
    from_structure_constants,
    monoid_algebra,
    poly_quotient_product,
)
from .discrete import MulTable
from .errors import AddalgError, SchemaError
from .polynomials import Poly

SCHEMA_VERSION = 1

__all__ = [
    "SCHEMA_VERSION",
    "parse_rat",
    "rat_str",
    "poly_from_json",
    "table_from_json",
    "algebra_from_desc",
    "load_instance",
    "dumps",
]


def parse_rat(s) -> Fraction:
    if isinstance(s, bool):
        raise SchemaError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(f"bad rational {s!r}: {e}") from None


def rat_str(x: Fraction) -> str:
    return str(Fraction(x))


def poly_from_json(items) -> Poly:
    if not isinstance(items, list):
        raise SchemaError("polynomial must be a JSON array of rationals")
    return Poly(tuple(parse_rat(c) for c in items))


def table_from_json(d) -> MulTable:
    try:
        return MulTable.build(d["table"], d.get("unit", 0),
                              d.get("labels"), d.get("label", ""))
    except (KeyError, TypeError) as e:
        raise SchemaError(f"bad monoid table: {e}") from None


def algebra_from_desc(d) -> Algebra:
    """Build an algebra from its JSON description (validated)."""
    if not isinstance(d, dict) or "kind" not in d:
        raise SchemaError("algebra description must be a dict with a 'kind'")
    kind = d["kind"]
    try:
        if kind == "structure_constants":
            table = [
                [[parse_rat(c) for c in cell] for cell in row]
                for row in d["table"]
            ]
            unit = [parse_rat(c) for c in d["unit"]]
            return from_structure_constants(table, unit, label=d.get("label", ""))
        if kind in ("group_table", "monoid_table"):
            return monoid_algebra(table_from_json(d), label=d.get("label", ""))
        if kind == "poly_quotient_product":
            return poly_quotient_product(
                [poly_from_json(p) for p in d["factors"]], label=d.get("label", ""))
        if kind == "companion":
            return companion_algebra(
                [poly_from_json(p) for p in d["polys"]], label=d.get("label", ""))
        if kind == "direct_product":
            return direct_product(algebra_from_desc(d["left"]),
                                  algebra_from_desc(d["right"]),
                                  label=d.get("label", ""))
    except SchemaError:
        raise
    except (KeyError, TypeError, IndexError) as e:
        raise SchemaError(f"bad {kind} description: {e}") from None
    raise SchemaError(f"unknown algebra kind {kind!r}")


def load_instance(path: str):
    """Read an instance file; returns (raw dict, Algebra, {name: Subspace})."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise SchemaError(f"cannot read instance file {path}: {e}") from None
    if not isinstance(raw, dict) or "algebra" not in raw:
        raise SchemaError("instance file needs an 'algebra' description")
    try:
        alg = algebra_from_desc(raw["algebra"])
    except AddalgError:
        raise
    spaces = {}
    for name, rows in (raw.get("subspaces") or {}).items():
        if not isinstance(rows, list) or not rows:
            raise SchemaError(f"subspace {name!r} must be a nonempty matrix")
        vecs = [[parse_rat(c) for c in row] for row in rows]
        if any(len(v) != alg.dim for v in vecs):
            raise SchemaError(f"subspace {name!r} rows must have length {alg.dim}")
        spaces[name] = sub.from_vecs(alg, vecs)
    return raw, alg, spaces


def dumps(payload) -> str:
    """Canonical JSON: sorted keys, no float drift, trailing newline."""
    return json.dumps(payload, sort_keys=True, separators=(", ", ": ")) + "\n"
