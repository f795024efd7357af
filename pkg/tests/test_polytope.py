from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from favourable.polytope import (
    Inequality,
    LatticeSet,
    PolytopeSpec,
    UnboundedError,
    build_polytope,
    check_minkowski_decomposition,
    check_normality,
    dilate,
    dyck_paths,
    fundamental_polytope,
    gob_generators,
    lattice_points,
    minkowski_power,
    minkowski_sum,
    vertices,
)
from favourable.rootsys import Family, LieType, monomial_key, weyl_dim

A2, A3 = LieType(Family.A, 2), LieType(Family.A, 3)
C2, C3 = LieType(Family.C, 2), LieType(Family.C, 3)
G2 = LieType(Family.G2, 2)


def box_points(poly, bound):
    return LatticeSet(x for x in product(range(bound + 1), repeat=poly.dim) if poly.contains(x))


def test_dyck_path_counts():
    assert [len(dyck_paths(t)) for t in (A2, A3, C2, C3)] == [3, 7, 4, 12]
    assert [p.roots for p in dyck_paths(A2)][-1] == tuple(r for r in dyck_paths(A2)[-1].roots)
    with pytest.raises(ValueError):
        dyck_paths(G2)


def test_paths_are_monotone():
    for t in (A3, C3):
        for path in dyck_paths(t):
            assert path.start.is_simple
            for a, b in zip(path.roots, path.roots[1:]):
                assert (b.row, b.col) in {(a.row, a.col + 1), (a.row + 1, a.col)}


def test_a2_polytope():
    poly = build_polytope(A2, (1, 1))
    assert sorted((q.coeffs, q.rhs) for q in poly.inequalities) == [
        ((0, 0, 1), 1), ((0, 1, 0), 1), ((1, 1, 1), 2)]
    assert poly.to_ieqs().splitlines()[:3] == ["1 0 -1 0", "1 0 0 -1", "2 -1 -1 -1"]
    assert len(lattice_points(poly)) == 8


def test_g2_fundamental():
    poly = build_polytope(G2, (1, 0))
    assert len(poly.inequalities) <= 7
    assert len(lattice_points(poly)) == 7
    assert len(lattice_points(dilate(poly, 2))) == 27


@pytest.mark.parametrize("lie_type,weight,bound", [
    (A2, (2, 1), 3), (A3, (1, 0, 1), 2), (C2, (1, 1), 3), (G2, (1, 0), 2), (G2, (0, 1), 2)])
def test_lattice_points_match_brute_force(lie_type, weight, bound):
    poly = build_polytope(lie_type, weight)
    pts = lattice_points(poly)
    assert pts == box_points(poly, bound)
    assert list(pts) == sorted(pts, key=monomial_key)


def test_unbounded_and_bad_input():
    with pytest.raises(UnboundedError):
        lattice_points(PolytopeSpec(2, (Inequality((1, 0), 2),)))
    with pytest.raises(ValueError):
        PolytopeSpec(2, (Inequality((1,), 2),))
    with pytest.raises(ValueError):
        build_polytope(A2, (1, -1))


def test_lattice_set_ops():
    s = LatticeSet([(1, 0), (0, 1), (1, 0)])
    t = LatticeSet([(0, 0)])
    assert len(s) == 2 and (0, 1) in s
    assert minkowski_sum(s, t) == s
    assert minkowski_power(s, 0) == t
    assert len(minkowski_power(s, 2)) == 3
    assert (s - LatticeSet([(1, 0)])).points == ((0, 1),)
    with pytest.raises(ValueError):
        minkowski_sum(s, LatticeSet([(0, 0, 0)]))


def test_dilate_and_scaled_membership():
    poly = build_polytope(A2, (1, 1))
    d = dilate(poly, 3)
    assert d.weight == (3, 3)
    for x in lattice_points(d):
        assert poly.contains_scaled(x, 3)
    with pytest.raises(ValueError):
        dilate(poly, 0)


def test_normality_reports_witness_for_non_normal():
    # rational vertex (1/2, .): 2P has (1, 0) but P + P does not
    poly = PolytopeSpec(2, (Inequality((2, 0), 1), Inequality((0, 1), 1)))
    check = check_normality(poly, 2)
    assert not check
    assert check.witness == (1, 0) and check.info["n"] == 2
    assert check_normality(build_polytope(A2, (1, 1)), 3)


@pytest.mark.parametrize("lie_type,weight", [(A3, (1, 1, 0)), (C2, (1, 1)), (C3, (0, 1, 1)), (G2, (1, 1))])
def test_minkowski_decomposition(lie_type, weight):
    assert check_minkowski_decomposition(lie_type, weight)


def test_vertices():
    v = vertices(build_polytope(A2, (1, 1)))
    assert len(v) == 7
    assert all(x.denominator == 1 for p in v for x in p)
    assert (Fraction(2), Fraction(0), Fraction(0)) in v
    assert vertices(PolytopeSpec(1, (Inequality((2,), 1),))) == [(Fraction(0),), (Fraction(1, 2),)]


def test_gob_generators():
    assert gob_generators(LieType(Family.A, 1)) == [((Fraction(0),), 1), ((Fraction(1),), 1)]
    assert len(gob_generators(A2)) == 6
    assert len(gob_generators(G2)) == 20


small_weights = st.sampled_from([A2, C2, G2]).flatmap(
    lambda t: st.tuples(st.just(t), st.tuples(st.integers(0, 2), st.integers(0, 2)),
                        st.tuples(st.integers(0, 1), st.integers(0, 1))))


@settings(max_examples=25, deadline=None)
@given(small_weights)
def test_dimension_and_minkowski_laws(case):
    lie_type, lam, mu = case
    s_lam = lattice_points(build_polytope(lie_type, lam))
    assert len(s_lam) == weyl_dim(lie_type, lam)
    total = tuple(a + b for a, b in zip(lam, mu))
    s_total = lattice_points(build_polytope(lie_type, total))
    assert minkowski_sum(s_lam, lattice_points(build_polytope(lie_type, mu))) == s_total
    # monotone in the weight
    assert len(s_total) >= len(s_lam)


def test_fundamental_polytope():
    assert fundamental_polytope(C3, 2).weight == (0, 1, 0)
    with pytest.raises(ValueError):
        fundamental_polytope(C3, 4)
