"""Seeded random objects for sweeps: solvable algebras, subalgebras,
modules for the bound experiment."""

from __future__ import annotations

import random

from .constructions import Representation, semidirect_product
from .exactlin import QQ, Field, Matrix, Subspace, kernel, solve, unit_vector
from .liecore import LieAlgebra, bracket_subspaces, subalgebra_closure


def random_vector(L: LieAlgebra, rng: random.Random, spread: int = 2, density: float = 0.6) -> tuple:
    return tuple(L.field(rng.randint(-spread, spread) if rng.random() < density else 0) for _ in range(L.dim))


def random_element_of(L: LieAlgebra, s: Subspace, rng: random.Random, spread: int = 2) -> tuple:
    f = L.field
    out = [f.zero] * L.dim
    for row in s.basis:
        c = f(rng.randint(-spread, spread))
        out = [f.add(a, f.mul(c, b)) for a, b in zip(out, row)]
    return tuple(out)


def random_subalgebra(L: LieAlgebra, rng: random.Random, max_gens: int = 2) -> Subspace:
    gens = [random_vector(L, rng) for _ in range(rng.randint(1, max_gens))]
    return subalgebra_closure(L, L.span(gens)).space


def sample_subalgebras(L: LieAlgebra, rng: random.Random, count: int, attempts: int = 20) -> list[Subspace]:
    """``count`` subalgebras, distinct where the algebra allows it."""
    out: list[Subspace] = [L.zero_space(), L.full()] if L.dim else [L.zero_space()]
    tries = 0
    while len(out) < count and tries < attempts * count:
        tries += 1
        s = random_subalgebra(L, rng)
        if s not in out:
            out.append(s)
    while len(out) < count:
        out.append(random_subalgebra(L, rng))
    return out[:count] if len(out) > count else out


def _abelianization_functionals(L: LieAlgebra) -> list[tuple]:
    """Basis of linear functionals vanishing on ``[L, L]``."""
    d = bracket_subspaces(L, L.full(), L.full())
    if d.is_zero():
        return [unit_vector(L.field, L.dim, i) for i in range(L.dim)]
    return list(kernel(Matrix.from_rows(L.field, d.basis, L.dim)).basis)


def _commuting_family(f: Field, m: int, count: int, rng: random.Random, nilpotent: bool) -> list[Matrix]:
    """Polynomials without constant term in one random upper-triangular matrix."""
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            if j > i:
                row.append(rng.randint(-1, 2) if rng.random() < 0.7 else 0)
            elif j == i and not nilpotent:
                row.append(rng.randint(-2, 2))
            else:
                row.append(0)
        rows.append(row)
    t = Matrix.from_rows(f, rows, m)
    powers = [t]
    for _ in range(m - 1):
        powers.append(powers[-1] @ t)
    fam = []
    for _ in range(count):
        acc = Matrix.zeros(f, m, m)
        for p in powers:
            c = rng.randint(-1, 1)
            if c:
                acc = acc + p.scale(c)
        fam.append(acc)
    return fam


def random_module(L: LieAlgebra, rng: random.Random, dim: int, nilpotent: bool = False) -> Representation:
    """Either the adjoint module or one factoring through ``L/[L,L]``."""
    if rng.random() < 0.3 and L.dim == dim:
        return Representation.adjoint(L)
    funcs = _abelianization_functionals(L)
    fam = _commuting_family(L.field, dim, len(funcs), rng, nilpotent)
    phi = []
    for i in range(L.dim):
        acc = Matrix.zeros(L.field, dim, dim)
        for lam, m in zip(funcs, fam):
            if lam[i] != 0:
                acc = acc + m.scale(lam[i])
        phi.append(acc)
    return Representation(L, dim, tuple(phi))


def change_basis(L: LieAlgebra, rng: random.Random) -> LieAlgebra:
    """Same algebra in a random unimodular-ish integer basis."""
    n, f = L.dim, L.field
    while True:
        p = Matrix.from_rows(f, [[rng.randint(-1, 1) if i != j else 1 for j in range(n)] for i in range(n)], n)
        if p.rank() == n:
            break
    cols = p.columns
    # coordinates in the new basis: solve P y = v
    ident = Matrix.identity(f, n)
    pinv = Matrix.from_columns(f, [solve(p, ident.column(j)) for j in range(n)], n)
    c = [[pinv.apply(L.bracket_coords(cols[i], cols[j])) for j in range(n)] for i in range(n)]
    return LieAlgebra(f, c, L.name + "'")


def random_solvable_algebra(rng: random.Random, max_dim: int = 6, field: Field = QQ, name: str = "solvable") -> LieAlgebra:
    """Iterated semidirect products starting from an abelian algebra."""
    L = LieAlgebra.abelian(rng.randint(1, 2), field)
    steps = rng.randint(1, 3)
    for _ in range(steps):
        room = max_dim - L.dim
        if room <= 0:
            break
        m = rng.randint(1, room)
        if rng.random() < 0.3 and L.dim <= room:
            m = L.dim
        rep = random_module(L, rng, m, nilpotent=rng.random() < 0.4)
        L = semidirect_product(rep)
    if rng.random() < 0.5:
        L = change_basis(L, rng)
    return LieAlgebra(L.field, L.c, name)


def random_bound_construction(rng: random.Random) -> tuple[Representation, tuple]:
    """Abelian L of dimension <= 3 acting by commuting nilpotents, and a
    vector v; every index on v is at most 4."""
    k = rng.randint(1, 3)
    L = LieAlgebra.abelian(k)
    family = rng.choice(("polynomial", "tensor"))
    if family == "tensor" and k >= 2:
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        ja = _shift(a)
        jb = _shift(b)
        x1 = _kron(ja, Matrix.identity(QQ, b))
        x2 = _kron(Matrix.identity(QQ, a), jb)
        mats = [x1, x2]
        while len(mats) < k:
            mats.append(x1.scale(rng.randint(-1, 1)) + x2.scale(rng.randint(-1, 1)) + (x1 @ x2).scale(rng.randint(-1, 1)))
        m = a * b
    else:
        m = rng.randint(1, 4)
        mats = _commuting_family(QQ, m, k, rng, nilpotent=True)
    rep = Representation(L, m, tuple(mats))
    v = tuple(QQ(rng.randint(-2, 2)) for _ in range(m))
    return rep, v


def _shift(a: int) -> Matrix:
    return Matrix.from_rows(QQ, [[1 if j == i + 1 else 0 for j in range(a)] for i in range(a)], a)


def _kron(x: Matrix, y: Matrix) -> Matrix:
    rows = []
    for i in range(x.nrows):
        for k in range(y.nrows):
            rows.append([x[i, j] * y[k, l] for j in range(x.ncols) for l in range(y.ncols)])
    return Matrix.from_rows(x.field, rows, x.ncols * y.ncols)


def random_fp_algebra(rng: random.Random, p: int, max_dim: int = 4) -> LieAlgebra:
    """Random solvable algebra over GF(p)."""
    return random_solvable_algebra(rng, max_dim, Field(p), name=f"solvable-f{p}")


__all__ = [
    "change_basis",
    "random_bound_construction",
    "random_element_of",
    "random_fp_algebra",
    "random_module",
    "random_solvable_algebra",
    "random_subalgebra",
    "random_vector",
    "sample_subalgebras",
]
