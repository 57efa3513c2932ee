"""Lie algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exactlin import (
    QQ,
    Field,
    FieldMismatch,
    Matrix,
    Subspace,
    check_same_field,
    is_zero_vector,
    unit_vector,
    vec,
    zero_vector,
)


class LieAlgebraError(ValueError):
    pass


class NotAlternating(LieAlgebraError):
    def __init__(self, i: int):
        self.i = i
        super().__init__(f"[e{i + 1}, e{i + 1}] != 0")


class NotAntisymmetric(LieAlgebraError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"[e{i + 1}, e{j + 1}] != -[e{j + 1}, e{i + 1}]")


class JacobiFails(LieAlgebraError):
    def __init__(self, i: int, j: int, k: int, value=None):
        self.i, self.j, self.k = i, j, k
        self.value = value
        super().__init__(f"Jacobi identity fails on (e{i + 1}, e{j + 1}, e{k + 1})")


class NotAnIdeal(LieAlgebraError):
    pass


class NotASubalgebra(LieAlgebraError):
    pass


def _coords(x) -> tuple:
    return x.coords if isinstance(x, Element) else tuple(x)


class LieAlgebra:
    """A finite-dimensional Lie algebra with basis ``e_0 .. e_{n-1}``.

    ``c[i][j]`` is the coordinate vector of ``[e_i, e_j]``.  The three Lie
    identities are checked on construction.
    """

    __slots__ = ("name", "field", "dim", "c")

    def __init__(self, field: Field, c: Sequence, name: str = "L", *, check: bool = True):
        n = len(c)
        tensor = tuple(tuple(vec(field, c[i][j]) for j in range(n)) for i in range(n))
        for i in range(n):
            for j in range(n):
                if len(tensor[i][j]) != n:
                    raise LieAlgebraError(f"bracket [e{i + 1}, e{j + 1}] has wrong length")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "c", tensor)
        if check:
            _validate_tensor(self)

    def __setattr__(self, key, value):
        raise AttributeError("LieAlgebra is immutable")

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and (self.field, self.c) == (other.field, other.c)

    def __hash__(self):
        return hash((self.field, self.c))

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, over {self.field})"

    @classmethod
    def from_brackets(
        cls,
        field: Field,
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, object] | Sequence],
        name: str = "L",
    ) -> LieAlgebra:
        """Build from ``{(i, j): {k: coeff}}`` (0-based) for ``i < j``; the
        other half of the table is filled by antisymmetry."""
        f = field
        c = [[list(zero_vector(f, dim)) for _ in range(dim)] for _ in range(dim)]
        for (i, j), val in brackets.items():
            if isinstance(val, Mapping):
                v = list(zero_vector(f, dim))
                for k, a in val.items():
                    v[k] = f.add(v[k], f(a))
            else:
                v = list(vec(f, val))
            c[i][j] = v
            if i != j:
                c[j][i] = [f.neg(a) for a in v]
        return cls(f, c, name)

    @classmethod
    def abelian(cls, dim: int, field: Field = QQ, name: str | None = None) -> LieAlgebra:
        return cls(field, [[zero_vector(field, dim)] * dim for _ in range(dim)], name or f"abelian-{dim}")

    # elements

    def element(self, coords: Iterable) -> Element:
        coords = vec(self.field, coords)
        if len(coords) != self.dim:
            raise LieAlgebraError(f"expected {self.dim} coordinates, got {len(coords)}")
        return Element(self, coords)

    def basis(self) -> list[Element]:
        return [Element(self, unit_vector(self.field, self.dim, i)) for i in range(self.dim)]

    def zero(self) -> Element:
        return Element(self, zero_vector(self.field, self.dim))

    # brackets

    def bracket_coords(self, x: Sequence, y: Sequence) -> tuple:
        f, n = self.field, self.dim
        out = [0] * n
        for i, a in enumerate(x):
            if a == 0:
                continue
            ci = self.c[i]
            for j, b in enumerate(y):
                if b == 0:
                    continue
                ab = a * b
                for k, ck in enumerate(ci[j]):
                    if ck:
                        out[k] += ab * ck
        return vec(f, out)

    def bracket(self, x, y):
        if isinstance(x, Element) and isinstance(y, Element):
            if x.algebra is not y.algebra and x.algebra != y.algebra:
                raise LieAlgebraError("elements of different algebras")
            return Element(self, self.bracket_coords(x.coords, y.coords))
        return self.bracket_coords(_coords(x), _coords(y))

    def ad_matrix(self, x) -> Matrix:
        """Matrix of ``y -> [x, y]``; column ``j`` is ``[x, e_j]``."""
        x = _coords(x)
        n = self.dim
        cols = [self.bracket_coords(x, unit_vector(self.field, n, j)) for j in range(n)]
        return Matrix.from_columns(self.field, cols, n)

    def ad_basis(self) -> list[Matrix]:
        return [self.ad_matrix(unit_vector(self.field, self.dim, i)) for i in range(self.dim)]

    # subspaces

    def span(self, vectors: Iterable) -> Subspace:
        return Subspace.span(self.field, self.dim, (_coords(v) for v in vectors))

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def _own(self, s: Subspace):
        check_same_field(self.field, s.field)
        if s.ambient_dim != self.dim:
            raise LieAlgebraError(f"subspace of ambient {s.ambient_dim} in algebra of dim {self.dim}")

    def is_subalgebra(self, s: Subspace) -> bool:
        self._own(s)
        return all(s.contains(self.bracket_coords(u, v)) for u in s.basis for v in s.basis)

    def is_ideal(self, s: Subspace, within: Subspace | None = None) -> bool:
        self._own(s)
        outer = self.full() if within is None else within
        return all(s.contains(self.bracket_coords(u, v)) for u in outer.basis for v in s.basis)

    def classify(self, s: Subspace) -> SubStructure:
        if self.is_ideal(s):
            kind = "ideal"
        elif self.is_subalgebra(s):
            kind = "subalgebra"
        else:
            kind = "subspace"
        return SubStructure(self, s, kind)


@dataclass(frozen=True, eq=False)
class Element:
    algebra: LieAlgebra
    coords: tuple

    def _lift(self, other) -> tuple:
        if isinstance(other, Element):
            if other.algebra != self.algebra:
                raise LieAlgebraError("elements of different algebras")
            return other.coords
        return vec(self.algebra.field, other)

    def __add__(self, other):
        f = self.algebra.field
        return Element(self.algebra, tuple(f.add(a, b) for a, b in zip(self.coords, self._lift(other))))

    def __sub__(self, other):
        f = self.algebra.field
        return Element(self.algebra, tuple(f.sub(a, b) for a, b in zip(self.coords, self._lift(other))))

    def __neg__(self):
        f = self.algebra.field
        return Element(self.algebra, tuple(f.neg(a) for a in self.coords))

    def __mul__(self, c):
        f = self.algebra.field
        c = f(c)
        return Element(self.algebra, tuple(f.mul(c, a) for a in self.coords))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra == other.algebra and self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def bracket(self, other) -> Element:
        return Element(self.algebra, self.algebra.bracket_coords(self.coords, self._lift(other)))

    def is_zero(self) -> bool:
        return is_zero_vector(self.coords)

    def __repr__(self):
        terms = [f"{a}*e{i + 1}" for i, a in enumerate(self.coords) if a != 0]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class SubStructure:
    algebra: LieAlgebra
    space: Subspace
    kind: str  # "subspace" | "subalgebra" | "ideal"

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def is_ideal(self) -> bool:
        return self.kind == "ideal"

    @property
    def is_subalgebra(self) -> bool:
        return self.kind in ("ideal", "subalgebra")


def _validate_tensor(L: LieAlgebra):
    n, c, f = L.dim, L.c, L.field
    for i in range(n):
        if not is_zero_vector(c[i][i]):
            raise NotAlternating(i)
    for i in range(n):
        for j in range(i + 1, n):
            if any(f.add(a, b) != 0 for a, b in zip(c[i][j], c[j][i])):
                raise NotAntisymmetric(i, j)
    # Trilinearity plus alternation: Jacobi on basis triples i < j < k suffices.
    e = [unit_vector(f, n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = [0] * n
                for a, b, d in ((i, j, k), (k, i, j), (j, k, i)):
                    t = L.bracket_coords(e[a], c[b][d])
                    s = [x + y for x, y in zip(s, t)]
                s = vec(f, s)
                if not is_zero_vector(s):
                    raise JacobiFails(i, j, k, s)


def validate(field: Field, c: Sequence, name: str = "L") -> LieAlgebra:
    return LieAlgebra(field, c, name)


def bracket(x: Element, y: Element) -> Element:
    return x.bracket(y)


def ad_matrix(x: Element) -> Matrix:
    return x.algebra.ad_matrix(x)


def bracket_subspaces(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of ``[u, v]`` over ``u`` in ``a``, ``v`` in ``b``.

    By bilinearity the brackets of basis pairs already span it.
    """
    L._own(a)
    L._own(b)
    return L.span(L.bracket_coords(u, v) for u in a.basis for v in b.basis)


def subalgebra_closure(L: LieAlgebra, s: Subspace) -> SubStructure:
    L._own(s)
    cur = s
    for _ in range(L.dim + 1):
        nxt = cur + bracket_subspaces(L, cur, cur)
        if nxt == cur:
            return L.classify(cur)
        cur = nxt
    raise AssertionError("subalgebra closure did not stabilize")


def ideal_closure(L: LieAlgebra, s: Subspace, within: Subspace | None = None) -> SubStructure:
    """Smallest subspace containing ``s`` and stable under ``ad`` of
    ``within`` (default: all of L)."""
    L._own(s)
    outer = L.full() if within is None else within
    cur = s
    for _ in range(L.dim + 1):
        nxt = cur + bracket_subspaces(L, outer, cur)
        if nxt == cur:
            return L.classify(cur)
        cur = nxt
    raise AssertionError("ideal closure did not stabilize")


@dataclass(frozen=True)
class Quotient:
    algebra: LieAlgebra  # the quotient algebra
    ideal: Subspace
    projection: Matrix  # (n - dim I) x n
    coordinates: tuple  # ambient indices kept as quotient basis

    def project(self, x) -> tuple:
        return self.projection.apply(_coords(x))

    def lift(self, y: Sequence) -> tuple:
        """The representative supported on the kept coordinates."""
        parent = self.ideal
        v = [parent.field.zero] * parent.ambient_dim
        for k, a in zip(self.coordinates, y):
            v[k] = a
        return tuple(v)

    def preimage(self, s: Subspace) -> Subspace:
        return self.ideal + Subspace.span(self.ideal.field, self.ideal.ambient_dim, (self.lift(v) for v in s.basis))


def quotient(L: LieAlgebra, ideal: Subspace | SubStructure) -> Quotient:
    """``L / I`` on the non-pivot coordinates of I's RREF basis."""
    space = ideal.space if isinstance(ideal, SubStructure) else ideal
    L._own(space)
    if not L.is_ideal(space):
        raise NotAnIdeal("quotient requires an ideal")
    keep = space.complement_coordinates()
    cols = [space.residual(unit_vector(L.field, L.dim, j)) for j in range(L.dim)]
    # residual vanishes on pivot coordinates, so keep the rest
    proj = Matrix.from_columns(L.field, [tuple(col[k] for k in keep) for col in cols], len(keep))
    c = []
    for a in keep:
        row = []
        for b in keep:
            v = L.c[a][b]
            row.append(proj.apply(v))
        c.append(row)
    name = f"{L.name}/I" if space.dim else L.name
    return Quotient(LieAlgebra(L.field, c, name), space, proj, keep)


def direct_sum(a: LieAlgebra, b: LieAlgebra, name: str | None = None) -> LieAlgebra:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    f = a.field
    n, m = a.dim, b.dim
    zero = zero_vector(f, n + m)
    c = [[zero] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            c[i][j] = tuple(a.c[i][j]) + zero_vector(f, m)
    for i in range(m):
        for j in range(m):
            c[n + i][n + j] = zero_vector(f, n) + tuple(b.c[i][j])
    return LieAlgebra(f, c, name or f"{a.name}+{b.name}")
