"""Inner automorphisms ``exp(ad_x)``, semidirect products and the
nilpotency-bound experiment for abelian algebras acting on modules."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .exactlin import Matrix, Subspace, is_zero_vector, solve, unit_vector, vec, zero_vector
from .liecore import Element, LieAlgebra, LieAlgebraError, _coords
from .radicals import WrongCharacteristic, ad_nilpotency_index
from .structure import _as_space, centralizer, centralizer_finite_witness


class NotAdNilpotent(LieAlgebraError):
    pass


class InvalidRepresentation(LieAlgebraError):
    pass


class PreconditionError(LieAlgebraError):
    pass


# -- representations ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Representation:
    """``phi: L -> End(V)`` given on the basis of L; checked to be a Lie
    homomorphism on every basis pair."""

    algebra: LieAlgebra
    dim: int
    phi: tuple  # of Matrix, one per basis vector of L
    name: str = "V"

    def __post_init__(self):
        L = self.algebra
        if len(self.phi) != L.dim:
            raise InvalidRepresentation(f"need {L.dim} matrices, got {len(self.phi)}")
        for m in self.phi:
            if (m.nrows, m.ncols) != (self.dim, self.dim) or m.field != L.field:
                raise InvalidRepresentation("matrix of wrong shape or field")
        for i in range(L.dim):
            for j in range(i + 1, L.dim):
                lhs = self.image(L.c[i][j])
                rhs = self.phi[i] @ self.phi[j] - self.phi[j] @ self.phi[i]
                if lhs != rhs:
                    raise InvalidRepresentation(f"phi([e{i + 1}, e{j + 1}]) != [phi(e{i + 1}), phi(e{j + 1})]")

    def image(self, x) -> Matrix:
        f = self.algebra.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for a, m in zip(_coords(x), self.phi):
            if a != 0:
                out = out + m.scale(a)
        return out

    @classmethod
    def zero(cls, L: LieAlgebra, dim: int) -> Representation:
        return cls(L, dim, tuple(Matrix.zeros(L.field, dim, dim) for _ in range(L.dim)))

    @classmethod
    def adjoint(cls, L: LieAlgebra) -> Representation:
        return cls(L, L.dim, tuple(L.ad_basis()), "ad")


def semidirect_product(rep: Representation, name: str | None = None) -> LieAlgebra:
    """``L x V`` with ``[(g,v),(g',v')] = ([g,g'], phi(g)v' - phi(g')v)``.

    Basis: ``e_1..e_n`` of L followed by ``v_1..v_m`` of V.
    """
    L, m = rep.algebra, rep.dim
    f, n = L.field, L.dim
    zero = zero_vector(f, n + m)
    c = [[zero] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            c[i][j] = tuple(L.c[i][j]) + zero_vector(f, m)
        for a in range(m):
            col = rep.phi[i].column(a)
            c[i][n + a] = zero_vector(f, n) + col
            c[n + a][i] = zero_vector(f, n) + tuple(f.neg(x) for x in col)
    return LieAlgebra(f, c, name or f"{L.name}x{rep.name}")


def embedded_module(A: LieAlgebra, source_dim: int) -> Subspace:
    return A.span(unit_vector(A.field, A.dim, k) for k in range(source_dim, A.dim))


def embedded_source(A: LieAlgebra, source_dim: int) -> Subspace:
    return A.span(unit_vector(A.field, A.dim, k) for k in range(source_dim))


# -- exp(ad) -----------------------------------------------------------------


@dataclass(frozen=True)
class InnerAutomorphism:
    algebra: LieAlgebra
    matrix: Matrix
    word: tuple  # generator coordinate vectors, applied right to left

    def __call__(self, x) -> tuple:
        return self.matrix.apply(_coords(x))

    def __mul__(self, other: InnerAutomorphism) -> InnerAutomorphism:
        return InnerAutomorphism(self.algebra, self.matrix @ other.matrix, self.word + other.word)

    def is_automorphism(self) -> bool:
        L, g = self.algebra, self.matrix
        if g.rank() != L.dim:
            return False
        cols = g.columns
        for i in range(L.dim):
            for j in range(i + 1, L.dim):
                if g.apply(L.c[i][j]) != L.bracket_coords(cols[i], cols[j]):
                    return False
        return True


def _require_char0(L: LieAlgebra):
    if L.field.characteristic != 0:
        raise WrongCharacteristic("exp(ad_x) needs characteristic 0")


def exp_nilpotent(d: Matrix, index: int) -> Matrix:
    """``sum_{i < index} d^i / i!`` for a matrix with ``d^index = 0``."""
    out = Matrix.identity(d.field, d.nrows)
    power = Matrix.identity(d.field, d.nrows)
    for i in range(1, index):
        power = power @ d
        out = out + power.scale(Fraction(1, factorial(i)))
    return out


def exp_ad(L: LieAlgebra, x) -> InnerAutomorphism:
    _require_char0(L)
    x = vec(L.field, _coords(x))
    k = ad_nilpotency_index(L, x)
    if k is None:
        raise NotAdNilpotent(f"ad_x is not nilpotent for x = {x}")
    g = InnerAutomorphism(L, exp_nilpotent(L.ad_matrix(x), k), (x,))
    if not g.is_automorphism():
        raise AssertionError("exp(ad_x) failed to preserve the bracket")
    return g


def conjugate_subspace(a: Subspace, g: InnerAutomorphism) -> Subspace:
    return a.image(g.matrix)


def check_normalization_lemma(L: LieAlgebra, b, a) -> dict:
    """``[b, A] <= A`` iff ``exp(ad_b)(A) = A``."""
    a = _as_space(L, a)
    g = exp_ad(L, b)
    normalizes = all(a.contains(L.bracket_coords(_coords(b), v)) for v in a.basis)
    stabilized = conjugate_subspace(a, g) == a
    return {"normalizes": normalizes, "exp_stabilizes": stabilized, "holds": normalizes == stabilized}


def hartley_coefficients(d: Matrix, index: int) -> tuple:
    """``a_1..a_k`` with ``d = sum_n a_n exp(n d)`` when ``d^k = 0``.

    Comparing coefficients of ``d^i`` gives the Vandermonde-type system
    ``sum_n a_n n^i / i! = [i == 1]`` for ``i = 0..k-1``.
    """
    f = d.field
    k = index
    rows = [[Fraction(nn**i, factorial(i)) for nn in range(1, k + 1)] for i in range(k)]
    rhs = [1 if i == 1 else 0 for i in range(k)]
    sol = solve(Matrix.from_rows(f, rows, k), rhs)
    if sol is None:
        raise AssertionError("Vandermonde system is singular")
    return sol


def check_hartley_identity(L: LieAlgebra, x) -> dict:
    _require_char0(L)
    k = ad_nilpotency_index(L, x)
    if k is None:
        raise NotAdNilpotent(str(x))
    d = L.ad_matrix(x)
    coeffs = hartley_coefficients(d, k)
    total = Matrix.zeros(L.field, L.dim, L.dim)
    for nn, a in enumerate(coeffs, start=1):
        total = total + exp_nilpotent(d.scale(nn), k).scale(a)
    return {"index": k, "coefficients": [str(a) for a in coeffs], "holds": total == d}


def check_conjugation_centralizer(L: LieAlgebra, s, g: InnerAutomorphism) -> bool:
    """``g(C_L(S)) = C_L(g(S))``."""
    s = _as_space(L, s)
    lhs = conjugate_subspace(centralizer(L, s).space, g)
    rhs = centralizer(L, conjugate_subspace(s, g)).space
    return lhs == rhs


# -- the bound experiment ----------------------------------------------------


def _nilpotency_on(m: Matrix, v: Sequence, limit: int) -> int | None:
    """Least n with ``m^n v = 0``."""
    cur = tuple(v)
    for n in range(0, limit + 1):
        if is_zero_vector(cur):
            return n
        cur = m.apply(cur)
    return None


def _annihilates(gens: Sequence[Matrix], v: Sequence, length: int) -> bool:
    """Every ordered product of ``length`` generators kills ``v``.

    Words are expanded level by level; identical intermediate vectors are
    merged, which does not change the set of word values reached.
    """
    zero = tuple(zero_vector(gens[0].field, len(v))) if gens else ()
    level = {tuple(v)} - {zero}
    for _ in range(length):
        level = {g.apply(u) for g in gens for u in level} - {zero}
    return not level


@dataclass
class BoundReport:
    witnesses: list
    indices: list
    m: int
    annihilated: bool
    minimal_length: int | None

    def to_json(self) -> dict:
        return {
            "witnesses": [[str(a) for a in w] for w in self.witnesses],
            "indices": self.indices,
            "m": self.m,
            "annihilated_at_m": self.annihilated,
            "minimal_annihilating_length": self.minimal_length,
        }


def semidirect_bound_experiment(rep: Representation, v: Sequence) -> BoundReport:
    """``[L,_m v] = 0`` with ``m = 1 + sum (n_i - 1)`` for witnesses
    ``x_1..x_k`` of ``C_V(L)`` and ``phi(x_i)^{n_i} v = 0``."""
    L = rep.algebra
    if any(not is_zero_vector(L.c[i][j]) for i in range(L.dim) for j in range(L.dim)):
        raise PreconditionError("source algebra must be abelian")
    v = vec(L.field, v)
    A = semidirect_product(rep)
    n = L.dim
    wit = centralizer_finite_witness(A, embedded_source(A, n))
    xs = [w.coords[:n] for w in wit]
    indices = []
    for x in xs:
        k = _nilpotency_on(rep.image(x), v, rep.dim)
        if k is None:
            raise PreconditionError("a witness does not act nilpotently on v")
        indices.append(max(k, 1))
    m = 1 + sum(k - 1 for k in indices)
    gens = list(rep.phi)
    minimal = next((ell for ell in range(0, m + 1) if _annihilates(gens, v, ell)), None)
    return BoundReport([tuple(x) for x in xs], indices, m, _annihilates(gens, v, m), minimal)
