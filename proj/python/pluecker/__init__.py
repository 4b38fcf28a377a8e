"""Bitangents and flexes of plane curves.

Exact intersection-theory derivation of the bitangent count N_B(d) paired
with a floating-point multistart oracle that counts bitangents and flexes
of explicit curves.
"""

import json as _json

from ._pluecker import (
    ParseError,
    PlaneCurve,
    bitangent_count_at,
    bitangent_count_polynomial,
    derive_json,
    find_bitangents_json,
    find_flexes_json,
    flex_count_at,
    flex_count_polynomial,
    identity_checks,
    moduli_dim,
    plot_svg,
)

__all__ = [
    "ParseError",
    "PlaneCurve",
    "bitangent_count_at",
    "bitangent_count_polynomial",
    "derive",
    "find_bitangents",
    "find_flexes",
    "flex_count_at",
    "flex_count_polynomial",
    "identity_checks",
    "moduli_dim",
    "plot_svg",
]


def _as_curve(curve):
    return curve if isinstance(curve, PlaneCurve) else PlaneCurve.parse(curve)


def derive():
    """The full derivation report as a dict (see docs/derive.schema.json)."""
    return _json.loads(derive_json())


def find_bitangents(curve, **kwargs):
    """Bitangents of a curve (text or PlaneCurve) as a dict with 'summary'
    and 'solutions' (see docs/solutions.schema.json)."""
    return _json.loads(find_bitangents_json(_as_curve(curve), **kwargs))


def find_flexes(curve, **kwargs):
    """Flexes of a curve as a dict with 'summary' and 'solutions'."""
    return _json.loads(find_flexes_json(_as_curve(curve), **kwargs))
