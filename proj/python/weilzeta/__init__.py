"""Zeta functions of varieties over finite fields from exact point counts,
and the trace constraint solver for derived-equivalent varieties."""

import json
import os

from ._core import (
    WeilzetaError,
    check_functional_equation,
    check_riemann_hypothesis,
    counts_from_zeta,
    factor_by_weights,
    field_modulus,
    is_irreducible,
    traces,
    zeta_from_counts,
    zeta_from_counts_anchored,
)
from . import _core

__all__ = [
    "WeilzetaError",
    "check_functional_equation",
    "check_riemann_hypothesis",
    "count_series",
    "counts_from_zeta",
    "factor_by_weights",
    "field_modulus",
    "find_pairs",
    "is_irreducible",
    "solve_forced",
    "traces",
    "zeta_from_counts",
    "zeta_from_counts_anchored",
]


def _spec_text(spec):
    if isinstance(spec, (str, os.PathLike)) and os.path.exists(spec):
        with open(spec) as f:
            return f.read()
    if isinstance(spec, str):
        return spec
    return json.dumps(spec)


def count_series(spec, terms, budget=100_000_000, workers=1):
    """N_1..N_terms for a VarietySpec given as a dict, JSON text or file path."""
    return _core.count_series(_spec_text(spec), terms, budget, workers)


def solve_forced(d, **flags):
    """Forced trace equalities in dimension d as a dict (see the CLI's JSON output)."""
    return json.loads(_core.solve_forced_json(d, **flags))


def find_pairs(p_min, p_max, workers=1):
    """Non-isomorphic Weierstrass curves with equal zeta functions."""
    return json.loads(_core.find_pairs_json(p_min, p_max, workers))
