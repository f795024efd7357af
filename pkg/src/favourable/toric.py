"""Toric side: Hilbert functions, lowest-term valuations, normal-fan rays
and Demazure roots."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Mapping, Sequence

from .exactla import rank
from .essential import MAX_TENSOR_DIM, essential_set, highest_weight_module
from .polytope import (
    Check,
    DyckPath,
    LatticeSet,
    _all_constraints,
    build_polytope,
    dyck_paths,
    lattice_points,
    minkowski_power,
    vertices,
)
from .repmod import RepModule, exp_orbit_product, tensor_power
from .rootsys import Family, LieType, check_weight, default_good_ordering, monomial_key


def hilbert_function(s: LatticeSet, n: int) -> int:
    """dim R_n(S) = #(nS); 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    return len(minkowski_power(s, n))


def lowest_term_valuation(poly: Mapping[Sequence[int], object]) -> tuple[int, ...]:
    exps = [tuple(e) for e, c in poly.items() if c]
    if not exps:
        raise ValueError("the zero polynomial has no valuation")
    return min(exps, key=monomial_key)


def valuation_semigroup_layer(module: RepModule, n: int) -> LatticeSet:
    """nu(xi_p / xi_M^n) over the essential basis functionals of M^(.n).

    Each xi_p is evaluated on the ordered exponential orbit; the lowest
    exponent of the resulting polynomial is its valuation.
    """
    if n < 1:
        raise ValueError("layer index must be positive")
    if module.dim ** n > MAX_TENSOR_DIM:
        raise ValueError(f"tensor power of dimension {module.dim ** n} exceeds the size guard")
    power = tensor_power(module, n)
    result = essential_set(power)
    orbit = exp_orbit_product(power)
    # coordinates of every orbit coefficient in the essential basis, once
    coords = {q: result.xi(vec) for q, vec in orbit.terms.items()}
    values = []
    for p in result.es:
        poly = {q: c[p] for q, c in coords.items() if c.get(p)}
        values.append(lowest_term_valuation(poly))
    return LatticeSet(values)


def newton_okounkov_check(lie_type: LieType, weight: Sequence[int], n_max: int) -> Check:
    """Rescaled valuation points of every layer lie in P(lambda), and layer 1
    exhausts its lattice points."""
    weight = check_weight(lie_type, weight)
    poly = build_polytope(lie_type, weight)
    module = highest_weight_module(lie_type, weight)
    s = lattice_points(poly)
    sizes = {}
    for n in range(1, n_max + 1):
        layer = valuation_semigroup_layer(module, n)
        sizes[n] = len(layer)
        outside = [p for p in layer if not poly.contains_scaled(p, n)]
        if outside:
            return Check(False, (n, outside[0]), {"layer_sizes": sizes})
        if n == 1 and layer != s:
            diff = (s - layer) or (layer - s)
            return Check(False, (1, diff.points[0]), {"layer_sizes": sizes})
    return Check(True, None, {"layer_sizes": sizes})


# -- normal fan and Demazure roots -------------------------------------------


@dataclass(frozen=True)
class Ray:
    vector: tuple[int, ...]
    kind: str  # "coordinate" or "path"
    path: DyckPath | None = None


@dataclass(frozen=True)
class DemazureRoot:
    m: tuple[int, ...]
    ray: Ray


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def fan_rays_A_regular(n: int) -> list[Ray]:
    """Rays e_{i,j} and -(sum over a Dyck path), in good-ordering coordinates."""
    lie_type = LieType(Family.A, n)
    order = default_good_ordering(lie_type)
    size = len(order)
    rays = [Ray(tuple(1 if j == i else 0 for j in range(size)), "coordinate") for i in range(size)]
    for path in dyck_paths(lie_type):
        v = [0] * size
        for r in path.roots:
            v[order.position(r)] = -1
        rays.append(Ray(tuple(v), "path", path))
    return rays


def _affine_rank(points: list[tuple]) -> int:
    if not points:
        return -1
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return rank(diffs, len(base)) if diffs else 0


def facet_normals(poly) -> list[tuple[int, ...]]:
    """Primitive inner normals of the facets, from vertex incidences."""
    verts = vertices(poly)
    if _affine_rank(verts) != poly.dim:
        raise ValueError("polytope is not full-dimensional")
    normals = set()
    for a, b in _all_constraints(poly):
        tight = [v for v in verts if sum(x * y for x, y in zip(a, v)) == b]
        if _affine_rank(tight) == poly.dim - 1:
            normals.add(primitive([-x for x in a]))
    return sorted(normals)


def verify_fan_rays(n: int, weight: Sequence[int]) -> Check:
    lie_type = LieType(Family.A, n)
    weight = check_weight(lie_type, weight)
    if not all(weight):
        raise ValueError("fan rays are described for regular weights only")
    if lie_type.num_positive_roots > 6:
        raise ValueError("facet enumeration is limited to N <= 6")
    found = set(facet_normals(build_polytope(lie_type, weight)))
    claimed = {r.vector for r in fan_rays_A_regular(n)}
    if found == claimed:
        return Check(True, None, {"rays": len(found)})
    return Check(False, sorted(found ^ claimed)[0],
                 {"extra": sorted(found - claimed), "missing": sorted(claimed - found)})


def demazure_roots(rays: Sequence[Ray], box_bound: int = 2) -> list[DemazureRoot]:
    """Brute force over m in [-1, box_bound]^N.

    m is a root for tau when <v_tau, m> = -1 and <v_eta, m> >= 0 for every
    other ray eta.
    """
    if box_bound < 1:
        raise ValueError("box_bound must be at least 1")
    if not rays:
        return []
    size = len(rays[0].vector)
    vecs = [r.vector for r in rays]
    out = []
    for m in product(range(-1, box_bound + 1), repeat=size):
        pairings = [sum(a * b for a, b in zip(v, m)) for v in vecs]
        negative = [k for k, x in enumerate(pairings) if x < 0]
        if len(negative) == 1 and pairings[negative[0]] == -1:
            out.append(DemazureRoot(m, rays[negative[0]]))
    return out


def is_demazure_root(m: Sequence[int], tau: Ray, rays: Sequence[Ray]) -> bool:
    def pair(r):
        return sum(a * b for a, b in zip(r.vector, m))

    return pair(tau) == -1 and all(pair(r) >= 0 for r in rays if r != tau)


def demazure_count_formula(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return (3 * n * n - n + 2) // 2


def automorphism_summary(n: int, box_bound: int = 2) -> dict:
    """Counts around the Demazure roots of the regular type-A toric variety."""
    rays = fan_rays_A_regular(n)
    roots = demazure_roots(rays, box_bound)
    ms = {r.m for r in roots}
    semisimple = sorted(m for m in ms if tuple(-x for x in m) in ms)
    return {
        "torus_dim": len(rays[0].vector),
        "rays": len(rays),
        "demazure_roots": len(roots),
        "formula": demazure_count_formula(n),
        "semisimple_roots": len(semisimple),
        "unipotent_roots": len(roots) - len(semisimple),
    }

