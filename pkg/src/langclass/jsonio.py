"""JSON mirrors of the domain objects.

Rationals are written as strings, ``"p/q"`` or ``"p"``. Segments are arrays
``[sl2_dim, rho_name, rho_dim, exponent]``. Output is rendered with sorted
keys so that identical inputs give byte-identical documents.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .errors import DatumFormatError, InputFormatError
from .grammar import format_rational
from .lparam import (
    Block,
    GaloisTypeLabel,
    GLnLParameter,
    GLnStandardTriple,
    Segment,
    new_lparameter,
    new_triple,
)
from .root_datum import BasedRootDatum, new_based_root_datum
from .weyl import GaloisAction, WeylElement, galois_action

_RATIONAL = re.compile(r"^\s*(-?)([0-9]+)(?:\s*/\s*([0-9]+))?\s*$")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def rational_to_json(x) -> str:
    return format_rational(Fraction(x))


def rational_from_json(value) -> Fraction:
    if isinstance(value, bool):
        raise InputFormatError(f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise InputFormatError(f"rationals are written as strings like \"3/2\", got {value!r}")
    m = _RATIONAL.match(value)
    if m is None:
        raise InputFormatError(f"malformed rational {value!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise InputFormatError(f"zero denominator in {value!r}")
    x = Fraction(int(num), int(den or 1))
    return -x if sign else x


def vector_to_json(v) -> list[str]:
    return [rational_to_json(x) for x in v]


def vector_from_json(doc) -> tuple[Fraction, ...]:
    if not isinstance(doc, list):
        raise InputFormatError("expected a JSON array of rationals")
    return tuple(rational_from_json(x) for x in doc)


def matrix_to_json(m) -> list[list]:
    return [list(row) for row in m]


# --- root data -----------------------------------------------------------------

_DATUM_FIELDS = {
    "rank", "simple_roots", "simple_coroots", "galois_generators",
    "galois_lattice_matrices", "standard_basis",
}


def _int_table(doc, what: str) -> list[list[int]]:
    if not isinstance(doc, list) or not all(
        isinstance(row, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in row)
        for row in doc
    ):
        raise DatumFormatError(f"{what} must be an array of integer arrays")
    return doc


def datum_from_json(doc) -> tuple[BasedRootDatum, GaloisAction]:
    """Read a datum document, with its optional Galois action (trivial when absent)."""
    if not isinstance(doc, dict):
        raise DatumFormatError("datum document must be a JSON object")
    unknown = set(doc) - _DATUM_FIELDS
    if unknown:
        raise DatumFormatError(f"unknown datum fields: {sorted(unknown)}")
    missing = {"rank", "simple_roots", "simple_coroots"} - set(doc)
    if missing:
        raise DatumFormatError(f"missing datum fields: {sorted(missing)}")
    rank = doc["rank"]
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise DatumFormatError("rank must be an integer")
    standard = doc.get("standard_basis", False)
    if not isinstance(standard, bool):
        raise DatumFormatError("standard_basis must be a boolean")
    datum = new_based_root_datum(
        rank,
        _int_table(doc["simple_roots"], "simple_roots"),
        _int_table(doc["simple_coroots"], "simple_coroots"),
        standard_basis=standard,
    )
    perms = _int_table(doc.get("galois_generators", []), "galois_generators")
    mats = doc.get("galois_lattice_matrices")
    if mats is not None:
        if not isinstance(mats, list):
            raise DatumFormatError("galois_lattice_matrices must be an array of matrices")
        mats = [_int_table(m, "galois lattice matrix") for m in mats]
    return datum, galois_action(datum, perms, mats)


def datum_to_json(datum: BasedRootDatum, action: GaloisAction | None = None) -> dict:
    out = {
        "rank": datum.rank,
        "simple_roots": matrix_to_json(datum.simple_roots),
        "simple_coroots": matrix_to_json(datum.simple_coroots),
    }
    if datum.standard_basis:
        out["standard_basis"] = True
    if action is not None and action.permutations:
        out["galois_generators"] = matrix_to_json(action.permutations)
        out["galois_lattice_matrices"] = [matrix_to_json(g) for g in action.lattice_matrices]
    return out


def element_to_json(w: WeylElement) -> dict:
    """Words are reported with 1-based simple-root indices."""
    return {"word": [i + 1 for i in w.word], "matrix": matrix_to_json(w.matrix)}


# --- parameters and triples ----------------------------------------------------


def segment_to_json(s: Segment) -> list:
    return [s.sl2_dim, s.rho.name, s.rho.dim, rational_to_json(s.exponent)]


def segment_from_json(doc) -> Segment:
    if (
        not isinstance(doc, list) or len(doc) != 4
        or not isinstance(doc[0], int) or not isinstance(doc[1], str)
        or not isinstance(doc[2], int)
    ):
        raise InputFormatError(f"segment must be [sl2_dim, rho_name, rho_dim, exponent], got {doc!r}")
    return Segment(doc[0], GaloisTypeLabel(doc[1], doc[2]), rational_from_json(doc[3]))


def _object(doc, fields: set[str], what: str) -> dict:
    if not isinstance(doc, dict):
        raise InputFormatError(f"{what} must be a JSON object")
    if set(doc) != fields:
        raise InputFormatError(f"{what} needs exactly the fields {sorted(fields)}")
    return doc


def lparam_to_json(phi: GLnLParameter) -> dict:
    return {"n": phi.n, "d": phi.d, "segments": [segment_to_json(s) for s in phi.segments]}


def lparam_from_json(doc) -> GLnLParameter:
    doc = _object(doc, {"n", "d", "segments"}, "parameter")
    if not isinstance(doc["segments"], list):
        raise InputFormatError("segments must be an array")
    return new_lparameter(doc["n"], doc["d"], [segment_from_json(s) for s in doc["segments"]])


def block_to_json(b: Block) -> dict:
    return {
        "m": b.m,
        "beta": rational_to_json(b.beta),
        "tempered": [segment_to_json(s) for s in b.tempered],
    }


def triple_to_json(t: GLnStandardTriple) -> dict:
    return {"d": t.d, "blocks": [block_to_json(b) for b in t.blocks]}


def triple_from_json(doc) -> GLnStandardTriple:
    doc = _object(doc, {"d", "blocks"}, "triple")
    if not isinstance(doc["blocks"], list):
        raise InputFormatError("blocks must be an array")
    blocks = []
    for b in doc["blocks"]:
        b = _object(b, {"m", "beta", "tempered"}, "block")
        if not isinstance(b["tempered"], list):
            raise InputFormatError("tempered must be an array of segments")
        blocks.append(
            (b["m"], [segment_from_json(s) for s in b["tempered"]], rational_from_json(b["beta"]))
        )
    return new_triple(doc["d"], blocks)
