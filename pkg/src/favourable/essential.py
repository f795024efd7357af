"""Essential multi-exponents of cyclic modules.

An exponent p is essential when f^p v_M is not in the span of the f^q v_M
with q < p in the monomial order.  Walking the exponents in increasing order
and inserting the vectors into an echelon basis decides this exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Sequence

from .exactla import EchelonBasis
from .polytope import LatticeSet, build_polytope, lattice_points
from .repmod import (
    MonomialVectors,
    RepModule,
    cartan_tensor,
    rep_sp,
    tensor_power,
    trivial_module,
    wedge_rep_sl,
)
from .rootsys import (
    Family,
    LieType,
    add,
    check_weight,
    default_good_ordering,
    exponents_of_degree,
    make_root,
    monomial_compare,
    unit,
    weyl_dim,
)

# dim^n guard for tensor layers
MAX_TENSOR_DIM = 10**5


class CyclicityError(RuntimeError):
    pass


@dataclass
class EssentialResult:
    es: LatticeSet
    basis: EchelonBasis
    d_max: int
    annihilator_gens: list[tuple[int, ...]]
    pbw_hilbert: list[int]
    module: RepModule = field(repr=False)

    def __len__(self):
        return len(self.es)

    def xi(self, vector: dict) -> dict[tuple[int, ...], Fraction]:
        """Coordinates of a vector of the cyclic span in the essential basis."""
        return self.basis.coordinates(vector)


def essential_set(module: RepModule, target_dim: int | None = None,
                  max_degree: int | None = None) -> EssentialResult:
    """Run the filtration walk.

    Stops as soon as the rank reaches ``target_dim`` (the module dimension
    when the cyclic vector is known to generate everything).  Otherwise a full
    degree without new rank certifies that the cyclic span is exhausted: the
    ordered monomials of degree <= s span U_s by PBW, and U_s v = U_{s-1} v
    forces U_{s+1} v = U_s v.
    """
    if target_dim is None and module.full_cyclic:
        target_dim = module.dim
    n = module.num_operators
    vecs = MonomialVectors(module)
    basis = EchelonBasis(module.dim)
    es: list[tuple[int, ...]] = []
    degree = 0
    done = target_dim is not None and target_dim == 0
    while not done:
        if max_degree is not None and degree > max_degree:
            break
        grew = False
        for p in exponents_of_degree(n, degree):
            if basis.insert(vecs(p), p):
                es.append(p)
                grew = True
                if target_dim is not None and basis.rank == target_dim:
                    done = True
                    break
        if not grew and not done:
            break
        degree += 1
    truncated = max_degree is not None and degree > max_degree
    if target_dim is not None and basis.rank < target_dim and not truncated:
        raise CyclicityError(f"cyclic span has dimension {basis.rank} < {target_dim}")
    lattice = LatticeSet(es)
    d_max = max((sum(p) for p in es), default=0)
    gens = annihilator_generators(lattice, n)
    hilbert = [0] * (d_max + 1)
    for p in es:
        hilbert[sum(p)] += 1
    return EssentialResult(lattice, basis, d_max, gens, hilbert, module)


def is_downward_closed(es: LatticeSet) -> bool:
    for p in es:
        for i, x in enumerate(p):
            if x and tuple(y - (t == i) for t, y in enumerate(p)) not in es:
                return False
    return True


def annihilator_generators(es: LatticeSet, n: int | None = None) -> list[tuple[int, ...]]:
    """Minimal monomial generators of the ideal spanned by exponents outside es."""
    if n is None:
        n = es.dim
    if not len(es):
        return [(0,) * n]
    if not is_downward_closed(es):
        raise ValueError("essential set is not downward closed")
    candidates = {add(p, unit(n, i)) for p in es for i in range(n)}
    gens = []
    for g in candidates:
        if g in es:
            continue
        if all(tuple(y - (t == i) for t, y in enumerate(g)) in es for i, x in enumerate(g) if x):
            gens.append(g)
    return sorted(gens, key=lambda p: (sum(p), tuple(-x for x in reversed(p))))


def pbw_hilbert(result: EssentialResult) -> list[int]:
    return list(result.pbw_hilbert)


def fundamental_essential_A(n: int, k: int, subset: Sequence[int]) -> tuple[int, ...]:
    """Closed-form essential exponent with f^p w_{1..k} proportional to w_I.

    With I = {i_1 < ... < i_s <= k < i_{s+1} < ... < i_k} and
    J = {1..k} minus {i_1..i_s} = (j_1 < ... < j_{k-s}), the monomial is
    f_{j_1, i_k - 1} f_{j_2, i_{k-1} - 1} ... f_{j_{k-s}, i_{s+1} - 1}.
    """
    subset = sorted(subset)
    if len(subset) != k or len(set(subset)) != k or not all(1 <= i <= n + 1 for i in subset):
        raise ValueError(f"{subset} is not a {k}-subset of 1..{n + 1}")
    lie_type = LieType(Family.A, n)
    order = default_good_ordering(lie_type)
    low = [i for i in subset if i <= k]
    high = [i for i in subset if i > k]
    missing = [j for j in range(1, k + 1) if j not in low]
    p = [0] * len(order)
    for j, i in zip(missing, reversed(high)):
        p[order.position(make_root(lie_type, j, i - 1))] += 1
    return tuple(p)


# -- structure constants ----------------------------------------------------


@dataclass
class StructureConstant:
    value: Fraction
    expected: Fraction
    lower: dict[tuple[int, ...], Fraction]

    @property
    def ok(self) -> bool:
        return self.value == self.expected and not any(self.lower.values())


class StructureConstants:
    """c_{p,q}^r = (xi_p (x) xi_q)(f^r (v (x) v)) for r in es(M (.) M)."""

    def __init__(self, module: RepModule, result: EssentialResult | None = None):
        self.module = module
        self.result = result or essential_set(module)
        self.square = cartan_tensor(module, module)
        self.square_result = essential_set(self.square)
        self._vecs = MonomialVectors(self.square)
        # xi_p on unit vectors: column a holds the coordinates of e_a
        self._xi = {p: [Fraction(0)] * module.dim for p in self.result.es}
        span = self.result.basis
        for a in range(module.dim):
            try:
                coords = span.coordinates({a: 1})
            except ValueError:
                continue  # outside the cyclic span
            for p, c in coords.items():
                self._xi[p][a] = c

    def coefficient(self, p, q, r) -> Fraction:
        d = self.module.dim
        xp, xq = self._xi[tuple(p)], self._xi[tuple(q)]
        total = Fraction(0)
        for idx, x in self._vecs(r).items():
            a, b = divmod(idx, d)
            if xp[a] and xq[b]:
                total += x * xp[a] * xq[b]
        return total

    def __call__(self, p, q) -> StructureConstant:
        p, q = tuple(p), tuple(q)
        es = self.result.es
        if p not in es or q not in es:
            raise ValueError("structure constants are defined for essential exponents")
        top = add(p, q)
        lower = {
            r: self.coefficient(p, q, r)
            for r in self.square_result.es
            if monomial_compare(r, top) < 0
        }
        expected = Fraction(prod(comb(a + b, a) for a, b in zip(p, q)))
        return StructureConstant(self.coefficient(p, q, top), expected, lower)


def structure_constant(module: RepModule, p, q) -> StructureConstant:
    return StructureConstants(module)(p, q)


# -- semigroup layers and the comparison with S(lambda) ---------------------


def essential_semigroup_layer(module: RepModule, n: int,
                              degree_cap: int | None = None) -> LatticeSet:
    if n < 1:
        raise ValueError("layer index must be positive")
    if module.dim ** n > MAX_TENSOR_DIM:
        raise ValueError(f"tensor power of dimension {module.dim ** n} exceeds the size guard")
    return essential_set(tensor_power(module, n), max_degree=degree_cap).es


def highest_weight_module(lie_type: LieType, weight: Sequence[int]) -> RepModule:
    """V(lambda) as the cyclic span of v_1 (x) ... inside tensor products of
    fundamental modules (the module itself when lambda is fundamental)."""
    weight = check_weight(lie_type, weight)
    factors = []
    for i, m in enumerate(weight, start=1):
        if not m:
            continue
        if lie_type.family is Family.A:
            fund = wedge_rep_sl(lie_type.rank, i)
        elif lie_type.family is Family.C:
            fund = rep_sp(lie_type.rank, i)
        else:
            raise ValueError("G2 modules are not constructed")
        factors.extend([fund] * m)
    if not factors:
        return trivial_module(lie_type)
    size = prod(f.dim for f in factors)
    if size > MAX_TENSOR_DIM:
        raise ValueError(f"tensor realization of dimension {size} exceeds the size guard")
    out = factors[0]
    for f in factors[1:]:
        out = cartan_tensor(out, f)
    return out


@dataclass
class Comparison:
    equal: bool
    only_in_es: list[tuple[int, ...]]
    only_in_S: list[tuple[int, ...]]
    es: LatticeSet
    S: LatticeSet
    dimension: int

    def __bool__(self):
        return self.equal


def compare_es_vs_S(lie_type: LieType, weight: Sequence[int]) -> Comparison:
    weight = check_weight(lie_type, weight)
    if lie_type.family is Family.C and any(m for i, m in enumerate(weight, 1) if i > 2):
        raise ValueError("symplectic oracle covers omega_1 and omega_2 only")
    module = highest_weight_module(lie_type, weight)
    result = essential_set(module)
    dim = weyl_dim(lie_type, weight)
    if len(result.es) != dim:
        raise CyclicityError(f"cyclic span has dimension {len(result.es)}, Weyl formula gives {dim}")
    s = lattice_points(build_polytope(lie_type, weight))
    return Comparison(
        result.es == s,
        list((result.es - s).points),
        list((s - result.es).points),
        result.es,
        s,
        dim,
    )
