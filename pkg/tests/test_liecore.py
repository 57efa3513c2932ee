import pytest
from hypothesis import given

from lieforge.exactlin import GF, QQ, Matrix, Subspace, unit_vector
from lieforge.liecore import (
    JacobiFails,
    LieAlgebra,
    NotAlternating,
    NotAnIdeal,
    NotAntisymmetric,
    bracket_subspaces,
    direct_sum,
    ideal_closure,
    quotient,
    subalgebra_closure,
)
from lieforge.structure import center
from strategies import algebra_with_elements


def e(L, i):
    return unit_vector(L.field, L.dim, i)


# -- validation --------------------------------------------------------------


def test_abelian_is_valid():
    L = LieAlgebra.abelian(4)
    assert L.dim == 4 and bracket_subspaces(L, L.full(), L.full()).is_zero()


def test_h3_validates(h3):
    assert h3.bracket_coords(e(h3, 0), e(h3, 1)) == e(h3, 2)


def test_jacobi_failure_detected():
    with pytest.raises(JacobiFails):
        LieAlgebra.from_brackets(QQ, 3, {(0, 1): {0: 1}, (1, 2): {1: 1}, (2, 0): {2: 1}})


def test_not_alternating():
    zero = (0, 0)
    c = [[(1, 0), zero], [zero, zero]]
    with pytest.raises(NotAlternating):
        LieAlgebra(QQ, c)


def test_not_antisymmetric():
    c = [[(0, 0), (1, 0)], [(1, 0), (0, 0)]]
    with pytest.raises(NotAntisymmetric):
        LieAlgebra(QQ, c)


def test_char2_alternation_differs_from_antisymmetry():
    # [x,x] = x is antisymmetric in char 2 but not alternating
    with pytest.raises(NotAlternating):
        LieAlgebra(GF(2), [[(1,)]])


# -- brackets and ad ---------------------------------------------------------


def test_sl2_brackets(sl2):
    h, x, y = (e(sl2, i) for i in range(3))
    assert sl2.bracket_coords(x, y) == h
    assert sl2.bracket_coords(h, x) == tuple(2 * a for a in x)


def test_ad_matrices(h3, sl2):
    assert h3.ad_matrix(h3.zero().coords).is_zero()
    ad = h3.ad_matrix(e(h3, 0))
    assert ad.apply(e(h3, 1)) == e(h3, 2)
    assert ad.apply(e(h3, 0)) == ad.apply(e(h3, 2)) == (0, 0, 0)
    assert sl2.ad_matrix(e(sl2, 0)) == Matrix.from_rows(QQ, [[0, 0, 0], [0, 2, 0], [0, 0, -2]])


def test_bracket_subspaces(h3, sl2):
    assert bracket_subspaces(h3, h3.full(), h3.zero_space()).is_zero()
    assert bracket_subspaces(h3, h3.full(), h3.full()) == h3.span([e(h3, 2)])
    assert bracket_subspaces(sl2, sl2.full(), sl2.full()) == sl2.full()


def test_closures(h3, sl2):
    assert subalgebra_closure(sl2, sl2.span([e(sl2, 1), e(sl2, 2)])).space == sl2.full()
    assert subalgebra_closure(h3, h3.span([e(h3, 0), e(h3, 1)])).space == h3.full()
    borel = sl2.span([e(sl2, 0), e(sl2, 1)])
    assert subalgebra_closure(sl2, borel).space == borel
    assert ideal_closure(h3, h3.span([e(h3, 0)])).space == h3.span([e(h3, 0), e(h3, 2)])
    assert ideal_closure(h3, h3.zero_space()).space.is_zero()
    assert ideal_closure(sl2, sl2.span([e(sl2, 0)])).space == sl2.full()


def test_classify(sl2, h3):
    assert sl2.classify(sl2.span([e(sl2, 0), e(sl2, 1)])).kind == "subalgebra"
    assert sl2.classify(sl2.span([e(sl2, 1), e(sl2, 2)])).kind == "subspace"
    assert h3.classify(h3.span([e(h3, 2)])).kind == "ideal"


# -- quotients and sums ------------------------------------------------------


def test_quotient_examples(h3):
    q = quotient(h3, h3.span([e(h3, 2)]))
    assert q.algebra.dim == 2
    assert bracket_subspaces(q.algebra, q.algebra.full(), q.algebra.full()).is_zero()
    assert quotient(h3, h3.zero_space()).algebra.c == h3.c
    assert quotient(h3, h3.full()).algebra.dim == 0


def test_quotient_needs_ideal(sl2):
    with pytest.raises(NotAnIdeal):
        quotient(sl2, sl2.span([e(sl2, 0)]))


def test_direct_sum(h3):
    s = direct_sum(h3, LieAlgebra.abelian(1))
    assert s.dim == 4 and center(s).dim == 2
    ab = direct_sum(LieAlgebra.abelian(2), LieAlgebra.abelian(3))
    assert center(ab) == ab.full()


# -- properties --------------------------------------------------------------


@given(algebra_with_elements())
def test_bracket_alternating_and_antisymmetric(data):
    L, (x, y, _) = data
    f = L.field
    assert all(a == 0 for a in L.bracket_coords(x, x))
    assert L.bracket_coords(x, y) == tuple(f.neg(a) for a in L.bracket_coords(y, x))


@given(algebra_with_elements())
def test_jacobi_on_random_elements(data):
    L, (x, y, z) = data
    f, b = L.field, L.bracket_coords
    total = [f.add(f.add(p, q), r) for p, q, r in zip(b(x, b(y, z)), b(y, b(z, x)), b(z, b(x, y)))]
    assert all(a == 0 for a in total)


@given(algebra_with_elements())
def test_ad_is_a_homomorphism(data):
    L, (x, y, _) = data
    lhs = L.ad_matrix(L.bracket_coords(x, y))
    ax, ay = L.ad_matrix(x), L.ad_matrix(y)
    assert lhs == ax @ ay - ay @ ax


@given(algebra_with_elements())
def test_quotient_projection_preserves_bracket(data):
    L, (x, y, _) = data
    d = bracket_subspaces(L, L.full(), L.full())
    for ideal in (d, center(L)):
        q = quotient(L, ideal)
        assert q.project(L.bracket_coords(x, y)) == q.algebra.bracket_coords(q.project(x), q.project(y))
        assert q.project(q.lift(q.project(x))) == q.project(x)


@given(algebra_with_elements())
def test_closures_are_closed(data):
    L, (x, y, _) = data
    s = L.span([x, y])
    sub = subalgebra_closure(L, s).space
    assert s <= sub and L.is_subalgebra(sub)
    idl = ideal_closure(L, s).space
    assert sub <= idl and L.is_ideal(idl)


def test_element_arithmetic(h3):
    x, y, z = h3.basis()
    assert x.bracket(y) == z
    assert (x + y) * 2 - y * 2 == x * 2
    assert (-x).bracket(y) == -z
    assert h3.zero().is_zero()


def test_subspace_from_other_algebra_rejected(h3, sl2):
    with pytest.raises(Exception):
        h3.is_ideal(Subspace.full(QQ, 4))
