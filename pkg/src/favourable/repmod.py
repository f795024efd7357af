"""Explicit modules for the lowering operators f_beta.

A :class:`RepModule` is a list of sparse nilpotent matrices (one per root in a
good ordering) together with a cyclic vector.  Wedge powers realize the
fundamental modules of sl_{n+1}; the standard and primitive-wedge modules
realize those of sp_{2n} used here.  Larger modules are built as Cartan
components inside tensor products.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Sequence

from .exactla import EchelonBasis, as_dense, axpy
from .rootsys import (
    Family,
    LieType,
    PositiveRoot,
    default_good_ordering,
    exponents_of_degree,
)

# sparse operator: column -> ((row, value), ...)
SparseOp = dict[int, tuple[tuple[int, object], ...]]


def _sparse_op(entries: dict[tuple[int, int], object]) -> SparseOp:
    cols: dict[int, list] = {}
    for (r, c), x in sorted(entries.items()):
        if x:
            cols.setdefault(c, []).append((r, x))
    return {c: tuple(v) for c, v in cols.items()}


def matvec(op: SparseOp, v: dict) -> dict:
    out: dict = {}
    for c, x in v.items():
        for r, a in op.get(c, ()):
            s = out.get(r, 0) + a * x
            if s:
                out[r] = s
            else:
                out.pop(r)
    return out


@dataclass(frozen=True)
class RepModule:
    """A cyclic module for the span of the f_beta.

    ``full_cyclic`` records whether the cyclic vector is known to generate the
    whole space; tensor products only generate their Cartan component.
    """

    dim: int
    labels: tuple[str, ...]
    operators: tuple[SparseOp, ...]
    roots: tuple[PositiveRoot, ...]
    cyclic_index: int
    lie_type: LieType | None = None
    weight: tuple[int, ...] | None = None
    full_cyclic: bool = True

    @property
    def num_operators(self) -> int:
        return len(self.operators)

    @property
    def root_labels(self) -> list[str]:
        return [r.label for r in self.roots]

    @property
    def cyclic_vector(self) -> dict[int, int]:
        return {self.cyclic_index: 1}

    def act(self, i: int, v: dict) -> dict:
        return matvec(self.operators[i], v)

    def matrix(self, i: int) -> list[list[Fraction]]:
        m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for c, entries in self.operators[i].items():
            for r, x in entries:
                m[r][c] = Fraction(x)
        return m


class MonomialVectors:
    """Memoized f^p v_M, with f_N acting first.

    f^p v = f_j (f^{p - e_j} v) where j is the first nonzero position of p,
    so every vector costs one sparse product given its predecessor.
    """

    def __init__(self, module: RepModule):
        self.module = module
        self._cache: dict[tuple[int, ...], dict] = {}

    def __call__(self, p: Sequence[int]) -> dict:
        p = tuple(p)
        if len(p) != self.module.num_operators:
            raise ValueError(f"exponent of length {len(p)} for {self.module.num_operators} operators")
        hit = self._cache.get(p)
        if hit is not None:
            return hit
        j = next((i for i, x in enumerate(p) if x), None)
        if j is None:
            vec = dict(self.module.cyclic_vector)
        else:
            prev = list(p)
            prev[j] -= 1
            vec = self.module.act(j, self(tuple(prev)))
        self._cache[p] = vec
        return vec


def apply_monomial(module: RepModule, p: Sequence[int]) -> list[Fraction]:
    return as_dense(MonomialVectors(module)(p), module.dim)


# -- constructions ----------------------------------------------------------


def _wedge_derivation(subsets, index, src: int, dst: int, coeff=1) -> dict:
    """Matrix entries of E_{dst,src} acting as a derivation on wedge basis."""
    entries = {}
    for s in subsets:
        if src not in s or dst in s:
            continue
        image = [dst if x == src else x for x in s]
        # sign of sorting: count inversions that move dst into place
        sign = (-1) ** sum(1 for x in image if (x < dst) != (x < src) and x != dst)
        entries[(index[tuple(sorted(image))], index[s])] = sign * coeff
    return entries


def wedge_rep_sl(n: int, k: int, radical: bool = False) -> RepModule:
    """Lambda^k of the (n+1)-dim vector module of sl_{n+1}.

    f_{i,j} acts as the matrix unit E_{j+1,i}.  With ``radical=True`` only the
    roots a[i,j] with i <= k <= j are kept (the abelian radical whose action
    generates the module from w_{1..k}); their relative order is unchanged.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    lie_type = LieType(Family.A, n)
    subsets = list(combinations(range(1, n + 2), k))
    index = {s: t for t, s in enumerate(subsets)}
    roots = [r for r in default_good_ordering(lie_type) if not radical or r.row <= k <= r.col]
    ops = tuple(_sparse_op(_wedge_derivation(subsets, index, r.row, r.col + 1)) for r in roots)
    labels = tuple("w[" + ",".join(map(str, s)) + "]" for s in subsets)
    weight = tuple(1 if i == k else 0 for i in range(1, n + 1))
    return RepModule(len(subsets), labels, ops, tuple(roots), index[tuple(range(1, k + 1))], lie_type, weight)


def sl2_rep(m: int) -> RepModule:
    """V(m omega_1) for sl_2 on the string v_0, ..., v_m with f v_i = v_{i+1}."""
    lie_type = LieType(Family.A, 1)
    op = _sparse_op({(i + 1, i): 1 for i in range(m)})
    return RepModule(m + 1, tuple(f"v{i}" for i in range(m + 1)), (op,),
                     tuple(default_good_ordering(lie_type)), 0, lie_type, (m,))


def trivial_module(lie_type: LieType) -> RepModule:
    roots = tuple(default_good_ordering(lie_type))
    return RepModule(1, ("1",), tuple({} for _ in roots), roots, 0, lie_type,
                     (0,) * lie_type.rank)


def symplectic_form(n: int) -> list[list[int]]:
    """J with J[i][i'] = 1 for i <= n and -1 for i > n, where i' = 2n+1-i (0-based here)."""
    size = 2 * n
    j = [[0] * size for _ in range(size)]
    for i in range(size):
        j[i][size - 1 - i] = 1 if i < n else -1
    return j


def _in_sp(x: list[list[int]], j: list[list[int]]) -> bool:
    size = len(j)
    for a in range(size):
        for b in range(size):
            # (x^T J + J x)[a][b]
            s = sum(x[c][a] * j[c][b] + j[a][c] * x[c][b] for c in range(size))
            if s:
                return False
    return True


def _sp_root_matrix(n: int, root: PositiveRoot, form) -> list[list[int]]:
    """Root vector f_root in the standard module, basis e_1..e_n, e_nbar..e_1bar.

    Index i (0-based, i < n) carries weight eps_{i+1}; index 2n-1-i carries
    -eps_{i+1}.  The relative sign of the two matrix units is solved for from
    the form condition rather than written down.
    """
    size = 2 * n
    bar = lambda i: size - 1 - i  # noqa: E731
    i = root.row - 1
    if root.col < n:
        a, b = i, root.col  # eps_i - eps_{j+1}, j = col
        units = [(b, a), (bar(a), bar(b))]
    else:
        jj = (2 * n - root.col) - 1  # eps_i + eps_j with j = 2n - col
        if jj == i:
            units = [(bar(i), i)]
        else:
            units = [(bar(jj), i), (bar(i), jj)]
    for sign in (1, -1):
        x = [[0] * size for _ in range(size)]
        for t, (r, c) in enumerate(units):
            x[r][c] = 1 if t == 0 else sign
        if _in_sp(x, form):
            return x
    raise AssertionError(f"no symplectic root vector for {root}")


def rep_sp(n: int, omega_index: int) -> RepModule:
    """V(omega_1) (standard, 2n-dim) or V(omega_2) (primitive part of Lambda^2).

    V(omega_2) is restricted to the kernel of the contraction with the
    symplectic form; the kernel is computed exactly.
    """
    if not 1 <= n <= 3 or omega_index not in (1, 2) or (omega_index == 2 and n < 2):
        raise ValueError(f"unsupported symplectic module: n={n}, omega_{omega_index}")
    lie_type = LieType(Family.C, n)
    roots = tuple(default_good_ordering(lie_type))
    form = symplectic_form(n)
    mats = [_sp_root_matrix(n, r, form) for r in roots]
    size = 2 * n
    weight = tuple(1 if i == omega_index else 0 for i in range(1, n + 1))
    if omega_index == 1:
        ops = tuple(
            _sparse_op({(r, c): m[r][c] for r in range(size) for c in range(size)}) for m in mats
        )
        labels = tuple(f"e{i + 1}" for i in range(n)) + tuple(f"e{n - i}bar" for i in range(n))
        return RepModule(size, labels, ops, roots, 0, lie_type, weight)

    pairs = list(combinations(range(size), 2))
    pindex = {p: t for t, p in enumerate(pairs)}
    contraction = {p: form[p[0]][p[1]] for p in pairs}
    # kernel basis: pairs with zero contraction, plus e_p - (c_p/c_0) e_0
    nonzero = [p for p in pairs if contraction[p]]
    first = nonzero[0]
    kernel = [{pindex[p]: Fraction(1)} for p in pairs if not contraction[p]]
    kernel += [
        {pindex[p]: Fraction(1), pindex[first]: -Fraction(contraction[p], contraction[first])}
        for p in nonzero[1:]
    ]
    basis = EchelonBasis(len(pairs))
    for t, vec in enumerate(kernel):
        assert basis.insert(vec, t)
    ops = []
    for m in mats:
        full = {}
        for (a, b), t in pindex.items():
            # derivation: x(e_a ^ e_b) = (x e_a) ^ e_b + e_a ^ (x e_b)
            for r in range(size):
                for src, other, first_slot in ((a, b, True), (b, a, False)):
                    x = m[r][src]
                    if not x or r == other:
                        continue
                    lo, hi = (r, other) if first_slot else (other, r)
                    sign = 1 if lo < hi else -1
                    key = (pindex[(min(lo, hi), max(lo, hi))], t)
                    full[key] = full.get(key, 0) + sign * x
        col_images = {}
        for (r, c), x in full.items():
            col_images.setdefault(c, {})[r] = x
        entries = {}
        for t, vec in enumerate(kernel):
            image: dict = {}
            for c, x in vec.items():
                axpy(image, x, col_images.get(c, {}))
            for s, y in basis.coordinates(image).items():
                entries[(s, t)] = y
        ops.append(_sparse_op(entries))
    label_of_pair = lambda p: f"e{p[0] + 1}^e{p[1] + 1}"  # noqa: E731
    labels = tuple(
        "+".join(f"{format(c)}*{label_of_pair(pairs[i])}" if c != 1 else label_of_pair(pairs[i])
                 for i, c in sorted(vec.items()))
        for vec in kernel
    )
    cyclic = kernel.index({pindex[(0, 1)]: Fraction(1)})
    return RepModule(len(kernel), labels, tuple(ops), roots, cyclic, lie_type, weight)


def cartan_tensor(m1: RepModule, m2: RepModule) -> RepModule:
    """M1 (x) M2 with f acting as f (x) 1 + 1 (x) f and cyclic vector v1 (x) v2.

    The Cartan component is the cyclic span; it is never materialized.
    """
    if m1.roots != m2.roots:
        raise ValueError("tensor factors must use the same roots in the same order")
    d2 = m2.dim
    ops = []
    for f1, f2 in zip(m1.operators, m2.operators):
        entries = {}
        for c1, col in f1.items():
            for r1, x in col:
                for b in range(d2):
                    entries[(r1 * d2 + b, c1 * d2 + b)] = x
        for c2, col in f2.items():
            for r2, x in col:
                for a in range(m1.dim):
                    key = (a * d2 + r2, a * d2 + c2)
                    entries[key] = entries.get(key, 0) + x
        ops.append(_sparse_op(entries))
    labels = tuple(f"{a}*{b}" for a in m1.labels for b in m2.labels)
    weight = None
    if m1.weight is not None and m2.weight is not None:
        weight = tuple(x + y for x, y in zip(m1.weight, m2.weight))
    return RepModule(m1.dim * d2, labels, tuple(ops), m1.roots,
                     m1.cyclic_index * d2 + m2.cyclic_index, m1.lie_type, weight,
                     full_cyclic=False)


def tensor_power(module: RepModule, n: int) -> RepModule:
    if n < 1:
        raise ValueError("tensor power needs n >= 1")
    out = module
    for _ in range(n - 1):
        out = cartan_tensor(out, module)
    return out


# -- exponential orbits -----------------------------------------------------


@dataclass
class OrbitPolynomial:
    """Polynomial in N variables with vector coefficients: {exponent: sparse vector}."""

    terms: dict[tuple[int, ...], dict]
    dim: int
    variable: str = "u"

    def coefficient(self, exponent: Sequence[int]) -> dict:
        return self.terms.get(tuple(exponent), {})

    def at_zero(self) -> dict:
        n = len(next(iter(self.terms))) if self.terms else 0
        return self.coefficient((0,) * n)

    def pair(self, functional) -> dict[tuple[int, ...], Fraction]:
        """Scalar polynomial functional(coefficients), zero terms dropped."""
        out = {}
        for e, vec in self.terms.items():
            c = functional(vec)
            if c:
                out[e] = c
        return out


def exp_orbit_product(module: RepModule) -> OrbitPolynomial:
    """exp(u_1 f_1) ... exp(u_N f_N) v_M expanded exactly.

    The coefficient of u^q is f^q v_M / prod(q_i!).  Degrees are scanned until
    one is entirely zero; by nilpotency all later ones are then zero too.
    """
    vecs = MonomialVectors(module)
    n = module.num_operators
    terms = {}
    d = 0
    while True:
        alive = False
        for q in exponents_of_degree(n, d):
            v = vecs(q)
            if v:
                alive = True
                scale = Fraction(1, prod(factorial(x) for x in q))
                terms[q] = {i: x * scale for i, x in v.items()}
        if not alive:
            break
        d += 1
    return OrbitPolynomial(terms, module.dim, "u")


def exp_orbit_sum(module: RepModule) -> OrbitPolynomial:
    """exp(z_1 f_1 + ... + z_N f_N) v_M expanded exactly."""
    n = module.num_operators
    zero = (0,) * n
    layer = {zero: {i: Fraction(x) for i, x in module.cyclic_vector.items()}}
    terms = dict(layer)
    k = 0
    while layer:
        k += 1
        nxt: dict = {}
        for e, vec in layer.items():
            for i in range(n):
                image = module.act(i, vec)
                if not image:
                    continue
                e2 = tuple(x + (1 if t == i else 0) for t, x in enumerate(e))
                axpy(nxt.setdefault(e2, {}), Fraction(1, k), image)
        layer = {e: v for e, v in nxt.items() if v}
        for e, v in layer.items():
            axpy(terms.setdefault(e, {}), 1, v)
    return OrbitPolynomial({e: v for e, v in terms.items() if v}, module.dim, "z")
