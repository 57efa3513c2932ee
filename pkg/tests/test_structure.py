import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieforge.exactlin import QQ, Subspace, unit_vector
from lieforge.liecore import LieAlgebra, LieAlgebraError, NotAnIdeal, bracket_subspaces
from lieforge.randgen import sample_subalgebras
from lieforge.structure import (
    center,
    centralizer,
    centralizer_finite_witness,
    check_keystone,
    check_lemma_cent_it_1,
    check_lemma_cent_it_2,
    check_normalizer_lemma,
    check_three_subgroups,
    derived_series,
    ideals_from_series,
    is_nilpotent,
    is_solvable,
    iterated_centralizer,
    iterated_centralizer_of_ideal,
    iterated_centralizer_tower,
    lower_central_series,
    normalizer,
    upper_central_series,
    zf_witnesses,
)
from strategies import algebras


def e(L, i):
    return unit_vector(L.field, L.dim, i)


def span(L, *idx):
    return L.span([e(L, i) for i in idx])


# -- centralizers and normalizers --------------------------------------------


def test_centralizer_examples(h3, sl2):
    assert centralizer(h3, []).space == h3.full()
    assert centralizer(h3, [e(h3, 0)]).space == span(h3, 0, 2)
    assert centralizer(sl2, [e(sl2, 0)]).space == span(sl2, 0)


def test_centralizer_of_subspace_matches_basis(h3):
    s = span(h3, 0, 1)
    assert centralizer(h3, s).space == centralizer(h3, s.basis).space == center(h3)


def test_normalizer_examples(h3, sl2):
    assert normalizer(h3, span(h3, 2)).space == h3.full()
    assert normalizer(sl2, span(sl2, 1)).space == span(sl2, 0, 1)
    assert normalizer(sl2, sl2.zero_space()).space == sl2.full()


# -- iterated centralizers ---------------------------------------------------


def test_iterated_centralizer_examples(h3):
    assert iterated_centralizer(h3, h3.full(), None, 0).space.is_zero()
    assert iterated_centralizer(h3, h3.full(), None, 1).space == span(h3, 2)
    assert iterated_centralizer(h3, h3.full(), None, 2).space == h3.full()


def test_kernel_formula_examples(h3):
    assert iterated_centralizer_of_ideal(h3, h3.full(), 0).space.is_zero()
    assert iterated_centralizer_of_ideal(h3, h3.full(), 1).space == span(h3, 2)
    assert iterated_centralizer_of_ideal(h3, h3.full(), 2).space == h3.full()


def test_iterated_centralizer_with_h(h3):
    z = span(h3, 2)
    tower = iterated_centralizer_tower(h3, h3.full(), z, 2)
    assert tower[0].space == z and tower[1].space == h3.full()


def test_iterated_centralizer_preconditions(sl2):
    with pytest.raises(LieAlgebraError):
        iterated_centralizer(sl2, span(sl2, 1, 2), None, 1)
    with pytest.raises(LieAlgebraError):
        iterated_centralizer(sl2, span(sl2, 0, 1), span(sl2, 0), 1)
    with pytest.raises(NotAnIdeal):
        iterated_centralizer_of_ideal(sl2, span(sl2, 1), 1)


def test_kernel_formula_on_centerless(sl2):
    for n in range(4):
        assert iterated_centralizer_of_ideal(sl2, sl2.full(), n).space.is_zero()


# -- series ------------------------------------------------------------------


def test_upper_central_examples(abelian3, h3, sl2):
    assert upper_central_series(abelian3).terms == (abelian3.zero_space(), abelian3.full())
    assert upper_central_series(h3).terms == (h3.zero_space(), span(h3, 2), h3.full())
    assert upper_central_series(sl2).terms == (sl2.zero_space(),)


def test_lower_central_examples(abelian3, h3, aff1):
    assert lower_central_series(abelian3)[1].is_zero()
    lcs = lower_central_series(h3)
    assert lcs[1] == span(h3, 2) and lcs[2].is_zero()
    s = lower_central_series(aff1)
    assert not s.reaches_zero() and s.limit == span(aff1, 1)
    d = derived_series(aff1)
    assert d.reaches_zero() and len(d) - 1 == 2


def test_nilpotency_class(abelian3, h3, sl2, load):
    assert is_nilpotent(abelian3) == 1
    assert is_nilpotent(h3) == 2
    assert is_nilpotent(load("filiform-4")) == 3
    assert is_nilpotent(sl2) is None and is_solvable(sl2) is None
    assert is_nilpotent(LieAlgebra.abelian(0)) == 0


# -- finite witnesses --------------------------------------------------------


def test_finite_witness_examples(h3, abelian3):
    assert centralizer_finite_witness(h3, h3.zero_space()) == []
    assert centralizer_finite_witness(abelian3, abelian3.full()) == []
    wit = centralizer_finite_witness(h3, h3.full())
    assert len(wit) <= 2
    assert centralizer(h3, [w.coords for w in wit]).space == span(h3, 2)


def test_zf_witnesses_h3(h3):
    wits = zf_witnesses(h3)
    assert len(wits) == len(upper_central_series(h3))
    assert all(len(w) <= h3.dim for w in wits)


# -- lemma checks ------------------------------------------------------------


def test_cent_it_1_examples(h3, abelian3, sl2):
    assert check_lemma_cent_it_1(h3, h3.full(), 3).passed
    assert check_lemma_cent_it_1(abelian3, abelian3.full(), 3).passed
    assert check_lemma_cent_it_1(sl2, span(sl2, 0, 1), 2).passed


def test_three_subgroups_examples(h3):
    z = span(h3, 2)
    full = h3.full()
    assert check_three_subgroups(h3, full, full, full, full).passed
    zero = h3.zero_space()
    assert check_three_subgroups(h3, zero, zero, zero, zero).passed
    rng = random.Random(3)
    for _ in range(30):
        vs = [tuple(QQ(rng.randint(-2, 2)) for _ in range(3)) for _ in range(3)]
        x, y, w = (h3.span([v]) for v in vs)
        assert check_three_subgroups(h3, x, y, w, z).passed


def test_cent_it_2_not_applicable_when_not_contained(h3):
    r = check_lemma_cent_it_2(h3, span(h3, 0), span(h3, 1), 1)
    assert r.checked == 0 and r.not_applicable == 1


def test_cent_it_2_on_center_extension(h3):
    k = span(h3, 0)
    h = span(h3, 0, 2)
    for j in range(1, 4):
        r = check_lemma_cent_it_2(h3, k, h, j)
        assert r.checked == 1 and r.passed


def test_keystone_on_corpus_ideals(load):
    for name in ("h3", "filiform-4", "aff1", "rotation-5"):
        L = load(name)
        for ideal in ideals_from_series(L):
            assert check_keystone(L, ideal).passed


def test_keystone_on_weighted_torus_action():
    # [t, a] = a, [t, b] = -b
    L = LieAlgebra.from_brackets(QQ, 3, {(0, 1): {1: 1}, (0, 2): {2: -1}})
    for ideal in ideals_from_series(L):
        assert check_keystone(L, ideal).passed


# -- properties --------------------------------------------------------------


@given(algebras(), st.integers(0, 1000))
@settings(max_examples=25)
def test_iterated_centralizers_are_subalgebras(L, seed):
    h = sample_subalgebras(L, random.Random(seed), 3)[-1]
    tower = iterated_centralizer_tower(L, h, None, 3)
    for t in tower[1:]:
        assert L.is_subalgebra(t.space)
    assert check_normalizer_lemma(L, h, 3).passed
    assert check_lemma_cent_it_1(L, h, 3).passed


@given(algebras())
@settings(max_examples=25)
def test_upper_series_equals_iterated_centers(L):
    ucs = upper_central_series(L)
    tower = [t.space for t in iterated_centralizer_tower(L, L.full(), None, len(ucs) - 1)]
    assert tower == list(ucs.terms)


@given(algebras())
@settings(max_examples=25)
def test_series_are_ideals_and_descend(L):
    for s in (lower_central_series(L), derived_series(L)):
        for a, b in zip(s.terms, s.terms[1:]):
            assert b < a and L.is_ideal(b)
    for a, b in zip(upper_central_series(L).terms, upper_central_series(L).terms[1:]):
        assert a < b
        assert bracket_subspaces(L, L.full(), b) <= a


@given(algebras())
@settings(max_examples=25)
def test_nilpotent_iff_upper_reaches_full(L):
    assert (is_nilpotent(L) is not None) == upper_central_series(L).reaches_full()


@given(algebras())
@settings(max_examples=20)
def test_center_is_first_iterated_centralizer(L):
    assert iterated_centralizer(L, L.full(), None, 1).space == center(L)
    assert iterated_centralizer_of_ideal(L, L.full(), 1).space == center(L)


def test_subspace_input_types(h3):
    s = span(h3, 0)
    assert centralizer(h3, h3.classify(s)).space == centralizer(h3, s).space
    assert isinstance(centralizer(h3, [e(h3, 0)]).space, Subspace)
