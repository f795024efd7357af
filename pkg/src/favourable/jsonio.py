"""JSON encoding of the package's values.

Exponents are integer arrays aligned with a sibling ``labels`` array of root
names; rationals are ``"num/den"`` strings (plain integers print without a
denominator).
"""
from __future__ import annotations

import json
from fractions import Fraction

from .exactla import format_rational
from .polytope import LatticeSet, PolytopeSpec
from .rootsys import exponent_label


def rational_list(v) -> list[str]:
    return [format_rational(x) for x in v]


def lattice_set_to_json(s: LatticeSet, labels=None) -> dict:
    out = {}
    if labels is not None:
        out["labels"] = list(labels)
    out["points"] = [list(p) for p in s]
    return out


def lattice_set_from_json(obj) -> LatticeSet:
    points = obj["points"] if isinstance(obj, dict) else obj
    return LatticeSet(tuple(int(x) for x in p) for p in points)


def polytope_to_json(poly: PolytopeSpec) -> dict:
    return {
        "type": str(poly.lie_type) if poly.lie_type else None,
        "weight": list(poly.weight) if poly.weight is not None else None,
        "dimension": poly.dim,
        "labels": list(poly.labels),
        "inequalities": [{"coeffs": list(q.coeffs), "rhs": q.rhs} for q in poly.inequalities],
    }


def module_to_json(module) -> dict:
    return {
        "dimension": module.dim,
        "basis": list(module.labels),
        "roots": module.root_labels,
        "cyclic_index": module.cyclic_index,
        "operators": [
            [rational_list(row) for row in module.matrix(i)] for i in range(module.num_operators)
        ],
    }


def essential_to_json(result, labels) -> dict:
    return {
        "labels": list(labels),
        "dimension": len(result.es),
        "es": [list(p) for p in result.es],
        "es_monomials": [exponent_label(p, labels) for p in result.es],
        "annihilator_generators": [list(p) for p in result.annihilator_gens],
        "annihilator_monomials": [exponent_label(p, labels) for p in result.annihilator_gens],
        "pbw_hilbert": list(result.pbw_hilbert),
        "d_max": result.d_max,
    }


def ray_to_json(ray, labels) -> dict:
    out = {"vector": list(ray.vector), "kind": ray.kind}
    out["named"] = {labels[i]: x for i, x in enumerate(ray.vector) if x}
    if ray.path is not None:
        out["path"] = [r.label for r in ray.path.roots]
    return out


def _default(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, LatticeSet):
        return [list(p) for p in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot encode {type(obj).__name__}")


def emit_json(report) -> str:
    """Compact, deterministic JSON text (field order is insertion order)."""
    return json.dumps(report, default=_default, separators=(",", ":"), ensure_ascii=False)
