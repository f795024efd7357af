from fractions import Fraction

import pytest

from favourable.polytope import LatticeSet, build_polytope, lattice_points
from favourable.repmod import sl2_rep, wedge_rep_sl
from favourable.essential import essential_semigroup_layer
from favourable.rootsys import Family, LieType
from favourable.toric import (
    Ray,
    automorphism_summary,
    demazure_count_formula,
    demazure_roots,
    facet_normals,
    fan_rays_A_regular,
    hilbert_function,
    is_demazure_root,
    lowest_term_valuation,
    newton_okounkov_check,
    primitive,
    valuation_semigroup_layer,
    verify_fan_rays,
)

A2 = LieType(Family.A, 2)


def test_hilbert_function_of_a_segment():
    s = LatticeSet([(0,), (1,)])
    assert [hilbert_function(s, n) for n in range(4)] == [1, 2, 3, 4]
    with pytest.raises(ValueError):
        hilbert_function(s, -1)


def test_hilbert_function_matches_dilates():
    s = lattice_points(build_polytope(A2, (1, 0)))
    assert [hilbert_function(s, n) for n in (1, 2, 3)] == [3, 6, 10]


def test_lowest_term_valuation():
    assert lowest_term_valuation({(1, 0): 2, (0, 1): 1, (0, 2): 0}) == (0, 1)
    assert lowest_term_valuation({(0, 0): Fraction(1, 3), (1, 0): 1}) == (0, 0)
    with pytest.raises(ValueError):
        lowest_term_valuation({(1, 0): 0})


def test_valuation_layers_sl2():
    m = sl2_rep(2)
    assert valuation_semigroup_layer(m, 1) == LatticeSet([(0,), (1,), (2,)])
    assert valuation_semigroup_layer(m, 2) == essential_semigroup_layer(m, 2)
    with pytest.raises(ValueError):
        valuation_semigroup_layer(m, 0)


def test_valuation_equals_essential_radical():
    m = wedge_rep_sl(3, 2, radical=True)
    for n in (1, 2):
        assert valuation_semigroup_layer(m, n) == essential_semigroup_layer(m, n)


def test_newton_okounkov_check():
    check = newton_okounkov_check(A2, (1, 1), 2)
    assert check and check.info["layer_sizes"] == {1: 8, 2: 27}


def test_primitive():
    assert primitive([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)
    assert primitive([0, 0]) == (0, 0)
    assert primitive([4, 6]) == (2, 3)


def test_fan_rays():
    rays = fan_rays_A_regular(2)
    assert [r.vector for r in rays if r.kind == "path"] == [(0, -1, 0), (0, 0, -1), (-1, -1, -1)]
    for n in (1, 2):
        assert verify_fan_rays(n, (1,) * n)
    normals = facet_normals(build_polytope(A2, (1, 1)))
    assert len(normals) == 6
    with pytest.raises(ValueError):
        verify_fan_rays(2, (1, 0))


def test_demazure_roots_a2():
    rays = fan_rays_A_regular(2)
    roots = demazure_roots(rays)
    assert sorted(r.m for r in roots) == [
        (-1, 0, 0), (0, -1, 0), (0, 0, -1), (1, -1, 0), (1, 0, -1), (1, 0, 0)]
    for r in roots:
        assert is_demazure_root(r.m, r.ray, rays)
    assert not is_demazure_root((0, 0, 0), rays[0], rays)
    assert demazure_roots([]) == []
    with pytest.raises(ValueError):
        demazure_roots(rays, 0)


def test_demazure_formula_and_summary():
    assert [demazure_count_formula(n) for n in (1, 2, 3, 4)] == [2, 6, 13, 23]
    summary = automorphism_summary(2)
    assert summary["demazure_roots"] == summary["formula"] == 6
    assert summary["semisimple_roots"] == 2 and summary["rays"] == 6
    with pytest.raises(ValueError):
        demazure_count_formula(0)


def test_ray_is_hashable():
    assert len({Ray((1, 0), "coordinate"), Ray((1, 0), "coordinate")}) == 1
