"""FFLV polytopes P(lambda) and their lattice points S(lambda).

For types A and C the polytope is cut out by one inequality per (symplectic)
Dyck path; G2 has an explicit system of seven inequalities.  Coordinates are
positions in the default good ordering.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exactla import solve_square
from .rootsys import (
    Family,
    GoodOrdering,
    LieType,
    PositiveRoot,
    check_weight,
    default_good_ordering,
    fundamental_weight,
    is_c_grid_root,
    make_root,
    monomial_key,
)


class UnboundedError(ValueError):
    pass


@dataclass(frozen=True)
class DyckPath:
    roots: tuple[PositiveRoot, ...]

    @property
    def start(self) -> PositiveRoot:
        return self.roots[0]

    @property
    def end(self) -> PositiveRoot:
        return self.roots[-1]

    def __len__(self):
        return len(self.roots)

    def __repr__(self):
        return "(" + ", ".join(r.label for r in self.roots) + ")"


@dataclass(frozen=True)
class Inequality:
    """coeffs . x <= rhs"""

    coeffs: tuple[int, ...]
    rhs: int

    def holds(self, x: Sequence) -> bool:
        return sum(a * b for a, b in zip(self.coeffs, x)) <= self.rhs


@dataclass(frozen=True)
class PolytopeSpec:
    """{x >= 0, A x <= b} with integral data.

    ``labels`` name the coordinates (root labels of the good ordering);
    ``lie_type`` and ``weight`` are set when the polytope is some P(lambda).
    """

    dim: int
    inequalities: tuple[Inequality, ...]
    labels: tuple[str, ...] = ()
    lie_type: LieType | None = None
    weight: tuple[int, ...] | None = None

    def __post_init__(self):
        for ineq in self.inequalities:
            if len(ineq.coeffs) != self.dim:
                raise ValueError("inequality has the wrong length")

    def contains(self, x: Sequence) -> bool:
        return all(v >= 0 for v in x) and all(ineq.holds(x) for ineq in self.inequalities)

    def contains_scaled(self, x: Sequence[int], n: int) -> bool:
        """Whether x / n lies in the polytope, tested without division."""
        return all(v >= 0 for v in x) and all(
            sum(a * b for a, b in zip(ineq.coeffs, x)) <= n * ineq.rhs
            for ineq in self.inequalities
        )

    def to_ieqs(self) -> str:
        """H-representation rows ``b -a`` (meaning b - a.x >= 0), then x_i >= 0."""
        rows = [[ineq.rhs] + [-a for a in ineq.coeffs] for ineq in self.inequalities]
        rows += [[0] + [1 if j == i else 0 for j in range(self.dim)] for i in range(self.dim)]
        return "\n".join(" ".join(str(v) for v in row) for row in rows) + "\n"


class LatticeSet:
    """Sorted (monomial order), duplicate-free set of integer points."""

    __slots__ = ("points", "_set")

    def __init__(self, points: Iterable[Sequence[int]] = ()):
        uniq = {tuple(p) for p in points}
        self.points: tuple[tuple[int, ...], ...] = tuple(sorted(uniq, key=monomial_key))
        self._set = frozenset(uniq)

    @property
    def dim(self) -> int | None:
        return len(self.points[0]) if self.points else None

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in self._set

    def __eq__(self, other):
        if isinstance(other, LatticeSet):
            return self._set == other._set
        return NotImplemented

    def __hash__(self):
        return hash(self._set)

    def __le__(self, other: "LatticeSet"):
        return self._set <= other._set

    def __sub__(self, other: "LatticeSet") -> "LatticeSet":
        return LatticeSet(self._set - other._set)

    def as_set(self) -> frozenset:
        return self._set

    def __repr__(self):
        return f"LatticeSet({list(self.points)})"


@dataclass
class Check:
    """Outcome of a verification: ``ok`` plus a witness when it fails."""

    ok: bool
    witness: object = None
    info: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


# -- Dyck paths -------------------------------------------------------------


def _grid_root_exists(lie_type: LieType, row: int, col: int) -> bool:
    n = lie_type.rank
    if lie_type.family is Family.A:
        return 1 <= row <= col <= n
    return is_c_grid_root(n, row, col)


def _is_path_end(lie_type: LieType, row: int, col: int) -> bool:
    # simple root alpha_j, or in type C also alpha_{j, jbar} (column 2n - j)
    if row == col:
        return True
    return lie_type.family is Family.C and col == 2 * lie_type.rank - row


def dyck_paths(lie_type: LieType) -> list[DyckPath]:
    """All (symplectic) Dyck paths, shortest span first."""
    if lie_type.family is Family.G2:
        raise ValueError("G2 has no Dyck paths; its polytope is given explicitly")
    found: list[tuple[tuple[int, int], ...]] = []

    def walk(path):
        row, col = path[-1]
        if _is_path_end(lie_type, row, col):
            found.append(tuple(path))
        for nxt in ((row, col + 1), (row + 1, col)):
            if _grid_root_exists(lie_type, *nxt):
                walk(path + [nxt])

    for i in range(1, lie_type.rank + 1):
        walk([(i, i)])
    found = sorted(set(found), key=lambda p: (len(p), p[0], p[-1], p))
    return [DyckPath(tuple(make_root(lie_type, r, c) for r, c in p)) for p in found]


def _path_rhs(lie_type: LieType, path: DyckPath, weight: tuple[int, ...]) -> int:
    i = path.start.row
    end = path.end
    if end.row == end.col:
        j = end.col
    else:
        j = lie_type.rank  # barred endpoint: m_i + ... + m_n
    return sum(weight[i - 1 : j])


def _g2_inequalities(k: int, l: int) -> list[tuple[tuple[int, ...], int]]:
    def ind(*pos):
        return tuple(1 if i + 1 in pos else 0 for i in range(6))

    return [
        (ind(5), l),
        (ind(6), k),
        (ind(2, 3, 6), k + l),
        (ind(3, 4, 6), k + l),
        (ind(4, 5, 6), k + l),
        (ind(1, 2, 3, 4, 5), k + 2 * l),
        (ind(2, 3, 4, 5, 6), k + 2 * l),
    ]


def build_polytope(lie_type: LieType, weight: Sequence[int]) -> PolytopeSpec:
    weight = check_weight(lie_type, weight)
    order = default_good_ordering(lie_type)
    n_coords = len(order)
    if lie_type.family is Family.G2:
        rows = _g2_inequalities(*weight)
    else:
        rows = []
        for path in dyck_paths(lie_type):
            coeffs = [0] * n_coords
            for r in path.roots:
                coeffs[order.position(r)] = 1
            rows.append((tuple(coeffs), _path_rhs(lie_type, path, weight)))
    seen = set()
    ineqs = []
    for coeffs, rhs in rows:
        if (coeffs, rhs) not in seen:
            seen.add((coeffs, rhs))
            ineqs.append(Inequality(coeffs, rhs))
    poly = PolytopeSpec(n_coords, tuple(ineqs), tuple(order.labels), lie_type, weight)
    _coordinate_bounds(poly)  # every coordinate must be capped
    return poly


def fundamental_polytope(lie_type: LieType, i: int) -> PolytopeSpec:
    return build_polytope(lie_type, fundamental_weight(lie_type, i))


# -- lattice points ---------------------------------------------------------


def _coordinate_bounds(poly: PolytopeSpec) -> list[int]:
    bounds = []
    for i in range(poly.dim):
        caps = []
        for ineq in poly.inequalities:
            a = ineq.coeffs[i]
            if a < 0:
                raise ValueError("lattice enumeration needs non-negative coefficients")
            if a > 0:
                caps.append(ineq.rhs // a)
        if not caps:
            name = poly.labels[i] if poly.labels else str(i)
            raise UnboundedError(f"coordinate {name} is not bounded by any inequality")
        bounds.append(max(min(caps), -1))
    return bounds


def lattice_points(poly: PolytopeSpec) -> LatticeSet:
    """All integer points of the polytope, by depth-first search.

    Coefficients are non-negative, so a partial assignment with non-negative
    slack in every inequality always extends (by zeros); the search never
    enters a dead branch.
    """
    bounds = _coordinate_bounds(poly)
    dim = poly.dim
    if any(b < 0 for b in bounds) or any(ineq.rhs < 0 for ineq in poly.inequalities):
        return LatticeSet()
    # per coordinate: (inequality index, coefficient) pairs
    touches = [
        [(k, ineq.coeffs[i]) for k, ineq in enumerate(poly.inequalities) if ineq.coeffs[i]]
        for i in range(dim)
    ]
    slack = [ineq.rhs for ineq in poly.inequalities]
    point = [0] * dim
    out = []

    def search(i):
        if i == dim:
            out.append(tuple(point))
            return
        cap = bounds[i]
        for k, a in touches[i]:
            cap = min(cap, slack[k] // a)
        for x in range(cap + 1):
            point[i] = x
            for k, a in touches[i]:
                slack[k] -= a * x
            search(i + 1)
            for k, a in touches[i]:
                slack[k] += a * x
        point[i] = 0

    search(0)
    return LatticeSet(out)


def minkowski_sum(s: LatticeSet, t: LatticeSet) -> LatticeSet:
    if s.dim is not None and t.dim is not None and s.dim != t.dim:
        raise ValueError(f"dimension mismatch: {s.dim} vs {t.dim}")
    return LatticeSet({tuple(a + b for a, b in zip(p, q)) for p in s for q in t})


def minkowski_power(s: LatticeSet, n: int) -> LatticeSet:
    """n-fold Minkowski sum (n = 0 gives the origin)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return LatticeSet([(0,) * (s.dim or 0)])
    acc = s
    for _ in range(n - 1):
        acc = minkowski_sum(acc, s)
    return acc


def dilate(poly: PolytopeSpec, n: int) -> PolytopeSpec:
    if n <= 0:
        raise ValueError("dilation factor must be positive")
    weight = tuple(n * m for m in poly.weight) if poly.weight is not None else None
    return PolytopeSpec(
        poly.dim,
        tuple(Inequality(q.coeffs, n * q.rhs) for q in poly.inequalities),
        poly.labels,
        poly.lie_type,
        weight,
    )


def check_normality(poly: PolytopeSpec, n_max: int) -> Check:
    """Compare the lattice points of nP with the n-fold sum of those of P."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    base = lattice_points(poly)
    acc = base
    for n in range(2, n_max + 1):
        acc = minkowski_sum(acc, base)
        dilated = lattice_points(dilate(poly, n))
        if dilated != acc:
            missing = dilated - acc
            witness = missing.points[0] if len(missing) else (acc - dilated).points[0]
            return Check(False, witness, {"n": n, "dilated": len(dilated), "sum": len(acc)})
    return Check(True, None, {"n_max": n_max})


def check_minkowski_decomposition(lie_type: LieType, weight: Sequence[int]) -> Check:
    """S(lambda) against the sum of m_i copies of S(omega_i)."""
    weight = check_weight(lie_type, weight)
    target = lattice_points(build_polytope(lie_type, weight))
    acc = LatticeSet([(0,) * lie_type.num_positive_roots])
    for i, m in enumerate(weight, start=1):
        if m:
            acc = minkowski_sum(acc, minkowski_power(lattice_points(fundamental_polytope(lie_type, i)), m))
    if acc == target:
        return Check(True, None, {"size": len(target)})
    diff = (target - acc) or (acc - target)
    return Check(False, diff.points[0], {"S": len(target), "sum": len(acc)})


# -- vertices ---------------------------------------------------------------

MAX_VERTEX_DIM = 8


def _all_constraints(poly: PolytopeSpec) -> list[tuple[tuple[int, ...], int]]:
    """Every facet candidate as (a, b) meaning a.x <= b, incl. -x_i <= 0."""
    rows = [(q.coeffs, q.rhs) for q in poly.inequalities]
    rows += [(tuple(-1 if j == i else 0 for j in range(poly.dim)), 0) for i in range(poly.dim)]
    return rows


def vertices(poly: PolytopeSpec) -> list[tuple[Fraction, ...]]:
    """Vertices by basic-solution enumeration over all N-subsets of constraints."""
    if poly.dim > MAX_VERTEX_DIM:
        raise ValueError(f"vertex enumeration supports dimension <= {MAX_VERTEX_DIM}")
    rows = _all_constraints(poly)
    found = set()
    for subset in combinations(rows, poly.dim):
        x = solve_square([a for a, _ in subset], [b for _, b in subset])
        if x is None or tuple(x) in found:
            continue
        if all(sum(ai * xi for ai, xi in zip(a, x)) <= b for a, b in rows):
            found.add(tuple(x))
    return sorted(found)


def gob_generators(lie_type: LieType) -> list[tuple[tuple[Fraction, ...], int]]:
    """Pairs (vertex of P(omega_i), i) spanning the global cone."""
    return [
        (v, i)
        for i in range(1, lie_type.rank + 1)
        for v in vertices(fundamental_polytope(lie_type, i))
    ]
