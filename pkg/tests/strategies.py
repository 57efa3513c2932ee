"""Hypothesis strategies for exact vectors, matrices and subspaces."""

from fractions import Fraction

from hypothesis import strategies as st

from lieforge.exactlin import GF, QQ, Matrix, Subspace

fields = st.sampled_from([QQ, GF(2), GF(3), GF(5)])
small_rationals = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


def scalars(f):
    if f.characteristic == 0:
        return small_rationals
    return st.integers(0, f.characteristic - 1)


def vectors(f, n):
    return st.lists(scalars(f), min_size=n, max_size=n).map(lambda v: tuple(f(a) for a in v))


def matrices(f, nrows, ncols):
    return st.lists(vectors(f, ncols), min_size=nrows, max_size=nrows).map(lambda rows: Matrix.from_rows(f, rows, ncols))


def subspaces(f, n, max_gens=4):
    return st.lists(vectors(f, n), max_size=max_gens).map(lambda vs: Subspace.span(f, n, vs))


@st.composite
def field_and_dim(draw, max_dim=4):
    return draw(fields), draw(st.integers(1, max_dim))


@st.composite
def coordinates(draw, L, spread=3):
    return tuple(L.field(draw(st.integers(-spread, spread))) for _ in range(L.dim))


def _corpus_algebras():
    from lieforge import corpus

    return [corpus.load(n) for n in corpus.names() if corpus.definition(n).kind == "algebra"]


def _random_solvable(seed, max_dim):
    import random

    from lieforge.randgen import random_solvable_algebra

    return random_solvable_algebra(random.Random(seed), max_dim=max_dim)


def algebras(max_dim=4, char0=False):
    """Corpus algebras and small seeded random solvable ones."""
    pool = [L for L in _corpus_algebras() if not char0 or L.field.characteristic == 0]
    return st.one_of(st.sampled_from(pool), st.integers(0, 10**6).map(lambda s: _random_solvable(s, max_dim)))


@st.composite
def algebra_with_elements(draw, count=3, char0=False, max_dim=4):
    L = draw(algebras(max_dim, char0))
    return L, [draw(coordinates(L)) for _ in range(count)]
