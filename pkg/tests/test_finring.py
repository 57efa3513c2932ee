import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieforge import corpus
from lieforge.finring import (
    FiniteLieRing,
    OrderCapExceeded,
    RingError,
    Subgroup,
    all_ideals,
    all_subgroups,
    centralizer_exhaustive,
    centralizer_lattice,
    enumerate_elements,
    finite_witness,
    fitting_bruteforce,
    generate,
    is_nilpotent_subring,
    iterated_centralizers,
    kernel_formula,
    lower_central_series,
    random_ring,
    upper_central_series,
    verify_paper_suite,
    whole,
)
from lieforge.suites import oracle_agreement


@pytest.fixture(scope="module")
def heis2():
    return corpus.load("heis2-ring")


@pytest.fixture(scope="module")
def z4z2():
    return corpus.load("z4z2-ring")


def elems(*xs):
    return frozenset(tuple(x) for x in xs)


def test_enumeration_examples():
    assert len(list(enumerate_elements(FiniteLieRing((2, 2))))) == 4
    assert len(list(enumerate_elements(FiniteLieRing((4, 2))))) == 8
    with pytest.raises(OrderCapExceeded):
        list(enumerate_elements(FiniteLieRing((3,) * 9)))


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("LIEFORGE_CAP", str(3**9))
    assert len(list(enumerate_elements(FiniteLieRing((3,) * 9)))) == 3**9
    monkeypatch.setenv("LIEFORGE_CAP", "4")
    with pytest.raises(OrderCapExceeded):
        list(enumerate_elements(FiniteLieRing((2, 2, 2))))


def test_ring_validation():
    with pytest.raises(RingError):
        FiniteLieRing((2, 2), {(0, 0): (1, 0)})
    # [g1, g2] must have order dividing gcd(4, 2)
    with pytest.raises(RingError):
        FiniteLieRing((4, 2), {(0, 1): (1, 0)})


def test_centralizer_examples(heis2):
    abelian = FiniteLieRing((2, 2))
    assert centralizer_exhaustive(abelian, [(1, 0)]) == whole(abelian)
    assert centralizer_exhaustive(heis2, [(1, 0, 0)]).elements == elems((0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 0, 1))
    assert centralizer_exhaustive(heis2, []) == whole(heis2)


def test_lattice_heisenberg(heis2):
    lat = centralizer_lattice(heis2)
    # L, C(g1), C(g2), C(g1+g2) and the center Z = {0, g3}
    assert [n.order for n in lat.nodes] == [2, 4, 4, 4, 8]
    assert lat.max_chain == 3


def test_lattice_trivial_rings():
    assert len(centralizer_lattice(FiniteLieRing((2, 2, 2))).nodes) == 1
    assert len(centralizer_lattice(FiniteLieRing((5,))).nodes) == 1


def test_fitting_examples(heis2, z4z2):
    assert fitting_bruteforce(heis2) == whole(heis2)
    assert fitting_bruteforce(FiniteLieRing((3, 3))) == whole(FiniteLieRing((3, 3)))
    # [x, y] = 2(ad - bc) g1, so [L, L] = {0, 2g1} is central
    assert [s.order for s in lower_central_series(z4z2)] == [8, 2, 1]
    assert fitting_bruteforce(z4z2) == whole(z4z2)


def test_fitting_of_non_nilpotent_ring():
    # over GF(3): [t, y] = y, the affine line
    r = FiniteLieRing((3, 3), {(0, 1): (0, 1)})
    assert not is_nilpotent_subring(r, whole(r))
    assert fitting_bruteforce(r).elements == elems((0, 0), (0, 1), (0, 2))


def test_subgroup_counts():
    # (Z/2)^2 has 5 subgroups, Z/4 x Z/2 has 8
    assert len(all_subgroups(FiniteLieRing((2, 2)))) == 5
    assert len(all_subgroups(FiniteLieRing((4, 2)))) == 8


def test_iterated_centralizers_heisenberg(heis2):
    full = whole(heis2)
    tower = iterated_centralizers(heis2, full, 2)
    assert [t.order for t in tower] == [1, 2, 8]
    assert tower == upper_central_series(heis2)
    for ideal in all_ideals(heis2):
        for n in range(1, 4):
            assert iterated_centralizers(heis2, ideal, n)[n] == kernel_formula(heis2, ideal, n)


def test_finite_witness(heis2):
    ucs = upper_central_series(heis2)
    wit = finite_witness(heis2, ucs[0], ucs[1])
    assert len(wit) == 2
    assert centralizer_exhaustive(heis2, wit) == ucs[1]


@pytest.mark.parametrize("name", ["heis2-ring", "heis3-ring", "z4z2-ring"])
def test_bundled_rings_pass_suite(name):
    rep = verify_paper_suite(corpus.load(name), seed=0)
    assert rep.passed, rep.violations
    assert rep.checks["keystone"] > 0 and rep.checks["lemma-cent-it-2"] > 0


def test_suite_report_json(heis2):
    j = verify_paper_suite(heis2).to_json()
    assert j["passed"] and list(j["checks"]) == sorted(j["checks"])


@pytest.mark.parametrize("name", ["h3-f3", "sl2-f3", "filiform-4-f3"])
def test_oracle_agreement_with_structure(name):
    L = corpus.load(name)
    assert oracle_agreement(L, seed=1, samples=10).passed


def test_from_algebra_matches_bundled_ring():
    r = FiniteLieRing.from_algebra(corpus.load("h3-f3"))
    ring = corpus.load("heis3-ring")
    pts = list(enumerate_elements(r))
    assert all(r.bracket(x, y) == ring.bracket(x, y) for x in pts[::5] for y in pts[::7])


# -- properties --------------------------------------------------------------

shapes = st.sampled_from([(2, 2, 2), (3, 3), (4, 2), (2, 2), (9,)])


@given(shapes, st.integers(0, 10**6))
@settings(max_examples=15)
def test_random_rings_satisfy_jacobi(shape, seed):
    r = random_ring(shape, random.Random(seed))
    pts = list(enumerate_elements(r))
    rng = random.Random(seed)
    for _ in range(20):
        x, y, z = (rng.choice(pts) for _ in range(3))
        j = r.add(r.add(r.bracket(x, r.bracket(y, z)), r.bracket(y, r.bracket(z, x))), r.bracket(z, r.bracket(x, y)))
        assert j == r.zero()
        assert r.bracket(x, x) == r.zero()


@given(shapes, st.integers(0, 10**6))
@settings(max_examples=10)
def test_random_rings_pass_suite(shape, seed):
    r = random_ring(shape, random.Random(seed))
    rep = verify_paper_suite(r, seed=seed)
    assert rep.passed, rep.violations
    assert all(len(w) <= r.rank for w in rep.zf_witnesses)


@given(shapes, st.integers(0, 10**6))
@settings(max_examples=10)
def test_fitting_is_maximal(shape, seed):
    r = random_ring(shape, random.Random(seed))
    F = fitting_bruteforce(r)
    for ideal in all_ideals(r):
        if is_nilpotent_subring(r, ideal):
            assert ideal <= F


def test_subgroup_algebra(heis2):
    a = generate(heis2, [(1, 0, 0)])
    b = generate(heis2, [(0, 1, 0)])
    assert (a & b).order == 1 and (a + b).order == 4
    assert isinstance(a + b, Subgroup)
