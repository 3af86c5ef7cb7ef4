"""Finite orthocomplemented lattices, their classification, and the exact
rational subspace model of Q^n.

The compiled core does all the work; this wrapper decodes the JSON command
results into dictionaries.
"""

import json as _json

from ._ortholat import (
    Lattice,
    OrthoLattice,
    center,
    check_modular,
    check_text,
    classify_tag,
    commutes,
    decompose_text,
    dimension_values,
    find_pentagon,
    gen_boolean,
    gen_hexagon,
    gen_horizontal_sum,
    gen_pentagon,
    gen_product,
    gen_section3_ortho,
    gen_text,
    is_abelian,
    is_factorial,
    regular_text,
    serialize,
    subspace_suite,
)

__all__ = [
    "Lattice", "OrthoLattice", "center", "check", "check_modular",
    "classify_tag", "commutes", "decompose", "dimension_values",
    "find_pentagon", "gen", "gen_boolean", "gen_hexagon",
    "gen_horizontal_sum", "gen_pentagon", "gen_product",
    "gen_section3_ortho", "is_abelian", "is_factorial", "regular",
    "serialize", "subspace",
]


def _decode(result):
    code, payload = result
    return code, _json.loads(payload)


def check(text):
    """Validate + classify a lattice file. Returns (exit_code, report dict)."""
    return _decode(check_text(text))


def decompose(text):
    """Central decomposition signature. Returns (exit_code, dict)."""
    return _decode(decompose_text(text))


def regular(text, enumerate=False):
    """Perspectivity classes and regularity. Returns (exit_code, dict)."""
    return _decode(regular_text(text, enumerate))


def subspace(dim=3, trials=200, seed=0, suite="all"):
    """Sampled law suite on subspaces of Q^dim. Returns (exit_code, dict)."""
    return _decode(subspace_suite(dim, trials, seed, suite))


def gen(kind, m=2, atoms=2):
    """Generated lattice in file form. Returns the file text."""
    code, payload = _decode(gen_text(kind, m, atoms))
    if code != 0:
        raise ValueError(payload.get("error", "generation failed"))
    return payload["file"]
