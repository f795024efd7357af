"""Root systems of types A_n, C_n and G_2, good orderings and the monomial order.

Every multi-exponent in this package is a tuple of non-negative integers whose
i-th entry belongs to the i-th root of a good ordering.  Roots carry their
simple-root coordinates, which is all that is needed for the dominance order
and for the Weyl dimension formula.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Sequence


class Family(str, enum.Enum):
    A = "A"
    C = "C"
    G2 = "G2"


@dataclass(frozen=True)
class LieType:
    family: Family
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        if self.family is Family.G2 and self.rank != 2:
            raise ValueError("G2 has rank 2")

    @classmethod
    def parse(cls, family: str, rank: int | None = None) -> "LieType":
        family = family.upper()
        if family == "G2" or family == "G":
            return cls(Family.G2, 2 if rank is None else rank)
        if rank is None:
            raise ValueError(f"type {family} needs a rank")
        return cls(Family(family), rank)

    @property
    def num_positive_roots(self) -> int:
        n = self.rank
        if self.family is Family.A:
            return n * (n + 1) // 2
        if self.family is Family.C:
            return n * n
        return 6

    def __str__(self):
        if self.family is Family.G2:
            return "G2"
        return f"{self.family.value}{self.rank}"


@dataclass(frozen=True)
class PositiveRoot:
    """A positive root.

    ``row`` and ``col`` locate the root on the staircase grid used by Dyck
    paths.  In type C the column runs over the alphabet 1 < ... < n < (n-1)bar
    < ... < 1bar, encoded as 1..2n-1 (column n+t stands for (n-t)bar).  For G2,
    ``row`` is the index k of beta_k and ``col`` is 0.
    """

    family: Family
    rank: int
    row: int
    col: int
    coords: tuple[int, ...]

    @property
    def label(self) -> str:
        if self.family is Family.G2:
            return f"b[{self.row}]"
        if self.family is Family.C and self.col > self.rank:
            return f"a[{self.row},{2 * self.rank - self.col}bar]"
        return f"a[{self.row},{self.col}]"

    @property
    def is_simple(self) -> bool:
        return sum(self.coords) == 1

    def dominates(self, other: "PositiveRoot") -> bool:
        """True iff self - other is a nonzero non-negative sum of simple roots."""
        return self.coords != other.coords and all(
            a >= b for a, b in zip(self.coords, other.coords)
        )

    def __repr__(self):
        return self.label


# simple-root coordinates of the G2 roots beta_1..beta_6, alpha_1 short
_G2_COORDS = ((3, 2), (3, 1), (2, 1), (1, 1), (0, 1), (1, 0))


def _type_a_root(n: int, i: int, j: int) -> PositiveRoot:
    coords = tuple(1 if i <= k <= j else 0 for k in range(1, n + 1))
    return PositiveRoot(Family.A, n, i, j, coords)


def _type_c_root(n: int, i: int, col: int) -> PositiveRoot:
    if col <= n:
        coords = tuple(1 if i <= k <= col else 0 for k in range(1, n + 1))
    else:
        j = 2 * n - col
        # alpha_{i, jbar} = alpha_i + ... + alpha_n + alpha_{n-1} + ... + alpha_j
        coords = tuple(
            (1 if k >= i else 0) + (1 if j <= k <= n - 1 else 0)
            for k in range(1, n + 1)
        )
    return PositiveRoot(Family.C, n, i, col, coords)


def make_root(lie_type: LieType, row: int, col: int = 0) -> PositiveRoot:
    """Look up a positive root by its grid position; raises on invalid input."""
    n = lie_type.rank
    if lie_type.family is Family.A:
        if not 1 <= row <= col <= n:
            raise ValueError(f"no root a[{row},{col}] in {lie_type}")
        return _type_a_root(n, row, col)
    if lie_type.family is Family.C:
        if not is_c_grid_root(n, row, col):
            raise ValueError(f"no root at grid position ({row},{col}) in {lie_type}")
        return _type_c_root(n, row, col)
    if not 1 <= row <= 6:
        raise ValueError(f"no root b[{row}] in G2")
    return PositiveRoot(Family.G2, 2, row, 0, _G2_COORDS[row - 1])


def is_c_grid_root(n: int, row: int, col: int) -> bool:
    if not (1 <= row <= n and 1 <= col <= 2 * n - 1):
        return False
    if col <= n:
        return row <= col
    return row <= 2 * n - col


def positive_roots(lie_type: LieType) -> list[PositiveRoot]:
    n = lie_type.rank
    if lie_type.family is Family.A:
        return [_type_a_root(n, i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    if lie_type.family is Family.C:
        return [
            _type_c_root(n, i, c)
            for i in range(1, n + 1)
            for c in range(1, 2 * n)
            if is_c_grid_root(n, i, c)
        ]
    return [make_root(lie_type, k) for k in range(1, 7)]


@dataclass(frozen=True)
class GoodOrdering:
    lie_type: LieType
    roots: tuple[PositiveRoot, ...]

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    def position(self, root: PositiveRoot) -> int:
        return self.roots.index(root)

    def position_of(self, row: int, col: int = 0) -> int:
        return self.position(make_root(self.lie_type, row, col))

    @property
    def labels(self) -> list[str]:
        return [r.label for r in self.roots]


def default_good_ordering(lie_type: LieType) -> GoodOrdering:
    n = lie_type.rank
    if lie_type.family is Family.A:
        # rows of the staircase by decreasing height: a[1,n]; a[1,n-1], a[2,n]; ...
        roots = [
            _type_a_root(n, i, i + length - 1)
            for length in range(n, 0, -1)
            for i in range(1, n - length + 2)
        ]
    elif lie_type.family is Family.C:
        roots = []
        # a[1,1bar]; a[1,2bar], a[2,2bar]; ...; a[1,nbar], ..., a[n,nbar]
        for j in range(1, n + 1):
            roots.extend(_type_c_root(n, i, 2 * n - j) for i in range(1, j + 1))
        # a[1,n-1], ..., a[n-1,n-1]; ...; a[1,1]
        for j in range(n - 1, 0, -1):
            roots.extend(_type_c_root(n, i, j) for i in range(1, j + 1))
    else:
        roots = positive_roots(lie_type)
    return GoodOrdering(lie_type, tuple(roots))


def validate_good_ordering(ordering: GoodOrdering) -> tuple[bool, tuple[PositiveRoot, PositiveRoot] | None]:
    """Check that larger roots come first.

    Returns ``(True, None)`` or ``(False, (big, small))`` where ``big``
    dominates ``small`` but is placed after it.
    """
    expected = positive_roots(ordering.lie_type)
    if len(ordering.roots) != len(expected) or set(ordering.roots) != set(expected):
        raise ValueError("ordering is not a permutation of the positive roots")
    roots = ordering.roots
    for i, j in combinations(range(len(roots)), 2):
        if roots[j].dominates(roots[i]):
            return False, (roots[j], roots[i])
    return True, None


# -- multi-exponents and the homogeneous reverse lexicographic order --------


def monomial_key(p: Sequence[int]) -> tuple:
    """Sort key realizing the degrevlex order: total degree first, then the
    exponent vector is larger when its last differing entry is smaller."""
    return (sum(p), tuple(-x for x in reversed(p)))


def monomial_compare(p: Sequence[int], q: Sequence[int]) -> int:
    """Return -1, 0 or 1 as p is less than, equal to or greater than q."""
    if len(p) != len(q):
        raise ValueError(f"length mismatch: {len(p)} vs {len(q)}")
    dp, dq = sum(p), sum(q)
    if dp != dq:
        return -1 if dp < dq else 1
    for a, b in zip(reversed(p), reversed(q)):
        if a != b:
            return 1 if a < b else -1
    return 0


def compositions(n: int, degree: int) -> Iterator[tuple[int, ...]]:
    """All exponent vectors of length n and the given total degree."""
    if n == 1:
        yield (degree,)
        return
    for first in range(degree + 1):
        for rest in compositions(n - 1, degree - first):
            yield (first,) + rest


def exponents_of_degree(n: int, degree: int) -> list[tuple[int, ...]]:
    """Exponents of one total degree, increasing in the monomial order."""
    # within one degree the order is reverse lex on reversed tuples: sort by
    # the reversed vector, descending
    return sorted(compositions(n, degree), key=lambda p: tuple(reversed(p)), reverse=True)


def enumerate_multiexponents(n: int, max_degree: int) -> Iterator[tuple[int, ...]]:
    if n < 1 or max_degree < 0:
        raise ValueError("need n >= 1 and max_degree >= 0")
    for d in range(max_degree + 1):
        yield from exponents_of_degree(n, d)


def count_multiexponents(n: int, max_degree: int) -> int:
    return comb(n + max_degree, max_degree)


def unit(n: int, i: int, times: int = 1) -> tuple[int, ...]:
    return tuple(times if k == i else 0 for k in range(n))


def add(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(p, q))


def exponent_label(p: Sequence[int], labels: Sequence[str]) -> str:
    """Pretty monomial such as ``f_a[1,3]*f_a[2,2]^2`` (``1`` for zero)."""
    parts = []
    for e, name in zip(p, labels):
        if e == 1:
            parts.append(f"f_{name}")
        elif e > 1:
            parts.append(f"f_{name}^{e}")
    return "*".join(parts) or "1"


# -- weights and the Weyl dimension formula --------------------------------


def check_weight(lie_type: LieType, weight: Sequence[int]) -> tuple[int, ...]:
    weight = tuple(int(m) for m in weight)
    if len(weight) != lie_type.rank:
        raise ValueError(f"weight {weight} has wrong length for {lie_type}")
    if any(m < 0 for m in weight):
        raise ValueError(f"weight {weight} is not dominant")
    return weight


def fundamental_weight(lie_type: LieType, i: int) -> tuple[int, ...]:
    if not 1 <= i <= lie_type.rank:
        raise ValueError(f"no fundamental weight omega_{i} in {lie_type}")
    return unit(lie_type.rank, i - 1)


def _half_lengths(lie_type: LieType) -> tuple[int, ...]:
    # (alpha_i, alpha_i) / 2 with short roots normalized to 1
    n = lie_type.rank
    if lie_type.family is Family.A:
        return (1,) * n
    if lie_type.family is Family.C:
        return (1,) * (n - 1) + (2,)
    return (1, 3)


def weyl_dim(lie_type: LieType, weight: Sequence[int]) -> int:
    """Dimension of the irreducible module V(weight).

    Uses prod over positive roots of (weight + rho, alpha) / (rho, alpha);
    with (omega_i, alpha_j) = delta_ij d_j both pairings are integers.
    """
    weight = check_weight(lie_type, weight)
    d = _half_lengths(lie_type)
    num = den = 1
    for root in positive_roots(lie_type):
        num *= sum(c * (m + 1) * dj for c, m, dj in zip(root.coords, weight, d))
        den *= sum(c * dj for c, dj in zip(root.coords, d))
    q, r = divmod(num, den)
    assert r == 0, "Weyl product is not an integer"
    return q
