"""Exact rational linear algebra.

Vectors are handled sparsely as ``{index: Fraction}`` dictionaries; dense
sequences are accepted everywhere and converted on entry.  Nothing here ever
touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping, Sequence, Union

Rational = Fraction
VectorLike = Union[Mapping[int, object], Sequence[object]]


def as_sparse(v: VectorLike, dim: int | None = None) -> dict[int, Fraction]:
    if isinstance(v, Mapping):
        items = v.items()
    else:
        if dim is not None and len(v) != dim:
            raise ValueError(f"dimension mismatch: expected {dim}, got {len(v)}")
        items = enumerate(v)
    out = {}
    for i, x in items:
        if dim is not None and not 0 <= i < dim:
            raise ValueError(f"index {i} outside ambient dimension {dim}")
        if x:
            out[i] = Fraction(x)
    return out


def as_dense(v: Mapping[int, object], dim: int) -> list[Fraction]:
    out = [Fraction(0)] * dim
    for i, x in v.items():
        out[i] = Fraction(x)
    return out


def axpy(y: dict, a, x: Mapping) -> dict:
    """In place y += a*x, dropping cancelled entries."""
    for i, xi in x.items():
        s = y.get(i, 0) + a * xi
        if s:
            y[i] = s
        else:
            y.pop(i, None)
    return y


class EchelonBasis:
    """Reduced row echelon basis that grows one vector at a time.

    Each stored row has a 1 at its pivot and zeros at every other pivot.  The
    rows also remember how they are written in terms of the inserted
    (independent) vectors, so :meth:`coordinates` returns coefficients in the
    basis formed by the inserted vectors themselves, keyed by their labels.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.labels: list[Hashable] = []
        self._rows: dict[int, dict[int, Fraction]] = {}
        # pivot -> row as a combination of inserted vectors (by insertion index)
        self._combo: dict[int, dict[int, Fraction]] = {}
        self._pivot_of: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def rows(self) -> list[tuple[int, list[Fraction], Hashable]]:
        """(pivot, dense reduced row, label of the vector that added it)."""
        label_of = dict(zip(self._pivot_of, self.labels))
        return [(p, as_dense(self._rows[p], self.dim), label_of[p]) for p in self.pivots]

    def _eliminate(self, w: dict, combo: dict | None = None) -> None:
        # rows are zero at foreign pivots, so one pass over w's pivots suffices
        for p in [p for p in w if p in self._rows]:
            c = w[p]
            axpy(w, -c, self._rows[p])
            if combo is not None:
                axpy(combo, -c, self._combo[p])

    def reduce(self, v: VectorLike) -> dict[int, Fraction]:
        """Residue of v modulo the span of the basis."""
        w = as_sparse(v, self.dim)
        self._eliminate(w)
        return w

    def contains(self, v: VectorLike) -> bool:
        return not self.reduce(v)

    def insert(self, v: VectorLike, label: Hashable = None) -> bool:
        """Add v if it is independent of the basis; report whether it was."""
        w = as_sparse(v, self.dim)
        combo = {len(self.labels): Fraction(1)}
        self._eliminate(w, combo)
        if not w:
            return False
        pivot = min(w)
        scale = 1 / w[pivot]
        w = {i: x * scale for i, x in w.items()}
        combo = {k: x * scale for k, x in combo.items()}
        for p, row in self._rows.items():
            c = row.get(pivot)
            if c:
                axpy(row, -c, w)
                axpy(self._combo[p], -c, combo)
        self._rows[pivot] = w
        self._combo[pivot] = combo
        self._pivot_of.append(pivot)
        self.labels.append(label)
        return True

    def coordinates(self, v: VectorLike) -> dict[Hashable, Fraction]:
        """Write v in the basis of inserted vectors: ``{label: coefficient}``.

        Raises ``ValueError`` if v is not in the span.
        """
        w = as_sparse(v, self.dim)
        by_index: dict[int, Fraction] = {}
        for p in [p for p in w if p in self._rows]:
            axpy(by_index, w[p], self._combo[p])
        self._eliminate(w)
        if w:
            raise ValueError("vector is not in the span of the basis")
        return {self.labels[k]: c for k, c in by_index.items()}


def insert_vector(basis: EchelonBasis, v: VectorLike, label: Hashable = None) -> bool:
    return basis.insert(v, label)


def solve_square(a: Sequence[Sequence[object]], b: Sequence[object]) -> list[Fraction] | None:
    """Solve a x = b exactly; ``None`` when a is singular."""
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("solve_square needs an n x n matrix and a length-n vector")
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        prow = [x * inv for x in m[col]]
        m[col] = prow
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], prow)]
    return [row[n] for row in m]


def rank(vectors: Sequence[VectorLike], dim: int) -> int:
    basis = EchelonBasis(dim)
    for v in vectors:
        basis.insert(v)
    return basis.rank


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)
