from fractions import Fraction
from math import comb, factorial, prod

import pytest

from favourable.exactla import EchelonBasis
from favourable.repmod import (
    MonomialVectors,
    _in_sp,
    _sp_root_matrix,
    apply_monomial,
    cartan_tensor,
    exp_orbit_product,
    exp_orbit_sum,
    matvec,
    rep_sp,
    sl2_rep,
    symplectic_form,
    tensor_power,
    trivial_module,
    wedge_rep_sl,
)
from favourable.rootsys import Family, LieType, default_good_ordering


def mat(module, i):
    return [[Fraction(x) for x in row] for row in module.matrix(i)]


def mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def bracket(a, b):
    ab, ba = mul(a, b), mul(b, a)
    return [[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)]


def flat(m):
    return [x for row in m for x in row]


def assert_homomorphism(standard, other):
    """Commutators in ``other`` follow the structure constants read off ``standard``."""
    n = standard.num_operators
    span = EchelonBasis(standard.dim ** 2)
    for i in range(n):
        assert span.insert(flat(mat(standard, i)), i)
    for i in range(n):
        for j in range(n):
            coords = span.coordinates(flat(bracket(mat(standard, i), mat(standard, j))))
            lhs = bracket(mat(other, i), mat(other, j))
            rhs = [[Fraction(0)] * other.dim for _ in range(other.dim)]
            for k, c in coords.items():
                m = mat(other, k)
                rhs = [[x + c * y for x, y in zip(r, s)] for r, s in zip(rhs, m)]
            assert lhs == rhs, (i, j)


@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (3, 2), (4, 2), (4, 3)])
def test_wedge_dimensions(n, k):
    m = wedge_rep_sl(n, k)
    assert m.dim == comb(n + 1, k)
    assert m.num_operators == n * (n + 1) // 2
    assert m.labels[m.cyclic_index] == "w[" + ",".join(map(str, range(1, k + 1))) + "]"


def test_radical_roots():
    m = wedge_rep_sl(3, 2, radical=True)
    assert m.root_labels == ["a[1,3]", "a[1,2]", "a[2,3]", "a[2,2]"]
    with pytest.raises(ValueError):
        wedge_rep_sl(3, 4)


def test_sp_dimensions_and_form():
    assert [rep_sp(2, 1).dim, rep_sp(2, 2).dim, rep_sp(3, 1).dim, rep_sp(3, 2).dim] == [4, 5, 6, 14]
    for n in (1, 2, 3):
        form = symplectic_form(n)
        for r in default_good_ordering(LieType(Family.C, n)):
            assert _in_sp(_sp_root_matrix(n, r, form), form)
    with pytest.raises(ValueError):
        rep_sp(1, 2)
    with pytest.raises(ValueError):
        rep_sp(4, 1)


@pytest.mark.parametrize("module", [wedge_rep_sl(3, 2), rep_sp(2, 2), rep_sp(3, 2), sl2_rep(3)])
def test_operators_nilpotent(module):
    for i in range(module.num_operators):
        m = mat(module, i)
        power = m
        for _ in range(module.dim):
            power = mul(power, m)
        assert not any(flat(power))


def test_representations_respect_brackets():
    assert_homomorphism(wedge_rep_sl(3, 1), wedge_rep_sl(3, 2))
    assert_homomorphism(rep_sp(2, 1), rep_sp(2, 2))


def test_tensor_is_leibniz():
    m1, m2 = wedge_rep_sl(2, 1), wedge_rep_sl(2, 2)
    t = cartan_tensor(m1, m2)
    assert t.dim == 9 and not t.full_cyclic
    assert t.cyclic_index == m1.cyclic_index * 3 + m2.cyclic_index
    for i in range(t.num_operators):
        for a in range(3):
            for b in range(3):
                expect = {}
                for r, x in m1.act(i, {a: 1}).items():
                    expect[r * 3 + b] = expect.get(r * 3 + b, 0) + x
                for r, x in m2.act(i, {b: 1}).items():
                    expect[a * 3 + r] = expect.get(a * 3 + r, 0) + x
                assert t.act(i, {a * 3 + b: 1}) == {k: v for k, v in expect.items() if v}
    assert tensor_power(m1, 2).dim == 9
    with pytest.raises(ValueError):
        cartan_tensor(m1, wedge_rep_sl(3, 1))


def test_monomial_application_order():
    # roots (a[1,2], a[1,1], a[2,2]); f_a[2,2] acts first, killing w1, while
    # the other order would reach w3
    m = wedge_rep_sl(2, 1)
    assert m.root_labels == ["a[1,2]", "a[1,1]", "a[2,2]"]
    vecs = MonomialVectors(m)
    assert vecs((0, 1, 1)) == {}
    assert m.act(2, m.act(1, {0: 1})) == {2: 1}
    assert apply_monomial(m, (0, 0, 0)) == [1, 0, 0]
    assert apply_monomial(m, (1, 0, 0)) == [0, 0, 1]


def test_trivial_and_sl2():
    t = trivial_module(LieType(Family.A, 2))
    assert t.dim == 1 and all(not op for op in t.operators)
    m = sl2_rep(2)
    assert matvec(m.operators[0], {0: 1}) == {1: 1}


def test_exp_orbit_sl2():
    poly = exp_orbit_product(sl2_rep(2))
    assert poly.terms == {(0,): {0: 1}, (1,): {1: 1}, (2,): {2: Fraction(1, 2)}}
    assert poly.at_zero() == {0: 1}
    assert poly.pair(lambda v: v.get(2, 0)) == {(2,): Fraction(1, 2)}


def test_orbit_product_and_sum_agree_in_low_degree():
    m = wedge_rep_sl(2, 1)
    a, b = exp_orbit_product(m), exp_orbit_sum(m)
    for e in set(a.terms) | set(b.terms):
        if sum(e) <= 1:
            assert a.coefficient(e) == b.coefficient(e)


def test_abelian_radical_orbit():
    # commuting operators: both orbits are sum f^p v / p!
    m = wedge_rep_sl(3, 2, radical=True)
    a, b = exp_orbit_product(m), exp_orbit_sum(m)
    vecs = MonomialVectors(m)
    assert {e: v for e, v in a.terms.items()} == {e: v for e, v in b.terms.items()}
    for e, v in a.terms.items():
        scale = Fraction(1, prod(factorial(x) for x in e))
        assert v == {i: x * scale for i, x in vecs(e).items()}
