"""Exact linear algebra over the rationals and prime fields.

Scalars are plain Python numbers: :class:`fractions.Fraction` over Q and
``int`` residues in ``[0, p)`` over GF(p).  The field is carried by every
container (:class:`Matrix`, :class:`Subspace`) and mixing fields raises
:class:`FieldMismatch`.

Subspaces are stored as their reduced row echelon basis, so two equal
subspaces compare equal as values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence


class FieldMismatch(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Q when ``characteristic == 0``, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, value) -> Fraction | int:
        """Coerce an int, Fraction or ``"a/b"`` string into this field."""
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value)
        if p == 0:
            if isinstance(value, float):
                raise TypeError("floats are not exact scalars")
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({p})")
            return value.numerator * pow(value.denominator, -1, p) % p
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into GF({p})")
        return value % p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def add(self, a, b):
        return a + b if self.characteristic == 0 else (a + b) % self.characteristic

    def sub(self, a, b):
        return a - b if self.characteristic == 0 else (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b if self.characteristic == 0 else (a * b) % self.characteristic

    def neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return 1 / Fraction(a) if p == 0 else pow(a, -1, p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def dot(self, u: Sequence, v: Sequence):
        s = sum(a * b for a, b in zip(u, v))
        return Fraction(s) if self.characteristic == 0 else s % self.characteristic

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def check_same_field(*fields: Field) -> Field:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatch(f"{first} vs {f}")
    return first


# -- vectors -----------------------------------------------------------------

Vector = tuple


def vec(field: Field, values: Iterable) -> Vector:
    return tuple(field(v) for v in values)


def zero_vector(field: Field, n: int) -> Vector:
    return (field.zero,) * n


def unit_vector(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if k == i else field.zero for k in range(n))


def vec_add(field: Field, u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"{len(u)} vs {len(v)}")
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field: Field, u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"{len(u)} vs {len(v)}")
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field: Field, c, v: Sequence) -> Vector:
    c = field(c)
    return tuple(field.mul(c, a) for a in v)


def is_zero_vector(v: Sequence) -> bool:
    return all(a == 0 for a in v)


# -- elimination -------------------------------------------------------------


def _rref_rational(rows: list[list[Fraction]], ncols: int):
    # Fraction-free: scale each row to primitive integers, eliminate with
    # integer combinations, divide by the pivot only at the very end.
    work = []
    for row in rows:
        den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in row), 1)
        ints = [int(x * den) for x in row]
        if any(ints):
            work.append(ints)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pr = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        prow = work[r]
        pv = prow[c]
        for i in range(len(work)):
            if i == r or work[i][c] == 0:
                continue
            a = work[i][c]
            g = gcd(pv, a)
            s, t = pv // g, a // g
            row = [s * x - t * y for x, y in zip(work[i], prow)]
            cont = reduce(gcd, row, 0)
            if cont > 1:
                row = [x // cont for x in row]
            work[i] = row
        pivots.append(c)
        r += 1
    out = []
    for row, c in zip(work[: len(pivots)], pivots):
        pv = row[c]
        out.append(tuple(Fraction(x, pv) for x in row))
    return out, tuple(pivots)


def _rref_modp(rows: list[list[int]], ncols: int, p: int):
    work = [list(row) for row in rows if any(row)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pr = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = pow(work[r][c], -1, p)
        prow = [x * inv % p for x in work[r]]
        work[r] = prow
        for i in range(len(work)):
            a = work[i][c]
            if i != r and a:
                work[i] = [(x - a * y) % p for x, y in zip(work[i], prow)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in work[: len(pivots)]], tuple(pivots)


def rref_rows(field: Field, rows: Iterable[Sequence], ncols: int):
    """RREF of a list of rows; returns ``(nonzero rows, pivot columns)``."""
    rows = [list(row) for row in rows]
    for row in rows:
        if len(row) != ncols:
            raise DimensionMismatch(f"row of length {len(row)} in {ncols}-column matrix")
    if field.characteristic == 0:
        return _rref_rational(rows, ncols)
    return _rref_modp(rows, ncols, field.characteristic)


# -- matrices ----------------------------------------------------------------


@dataclass(frozen=True)
class Matrix:
    field: Field
    nrows: int
    ncols: int
    rows: tuple

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
        rows = tuple(vec(field, row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatch("ragged matrix")
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        return cls(field, nrows, ncols, tuple(zero_vector(field, ncols) for _ in range(nrows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls(field, n, n, tuple(unit_vector(field, n, i) for i in range(n)))

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int) -> Matrix:
        rows = tuple(tuple(col[i] for col in columns) for i in range(nrows))
        return cls(field, nrows, len(columns), rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    @property
    def columns(self) -> tuple:
        return tuple(self.column(j) for j in range(self.ncols))

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.ncols, self.nrows, self.columns)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"{self.ncols}-column matrix applied to length {len(v)}")
        return tuple(self.field.dot(row, v) for row in self.rows)

    def __matmul__(self, other: Matrix) -> Matrix:
        check_same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        if self.field.characteristic == 0:
            return self._matmul_rational(other)
        cols = other.columns
        rows = tuple(tuple(self.field.dot(row, col) for col in cols) for row in self.rows)
        return Matrix(self.field, self.nrows, other.ncols, rows)

    def _integral(self) -> tuple[list[list[int]], int]:
        den = 1
        for row in self.rows:
            for a in row:
                d = a.denominator
                if d != 1:
                    den = den * d // gcd(den, d)
        return [[a.numerator * (den // a.denominator) for a in row] for row in self.rows], den

    def _matmul_rational(self, other: Matrix) -> Matrix:
        # clear denominators once, multiply in int, rescale
        a, da = self._integral()
        b, db = other._integral()
        cols = list(zip(*b)) if b else [() for _ in range(other.ncols)]
        den = da * db
        if den == 1:
            rows = tuple(tuple(Fraction(sum(x * y for x, y in zip(row, col))) for col in cols) for row in a)
        else:
            rows = tuple(tuple(Fraction(sum(x * y for x, y in zip(row, col)), den) for col in cols) for row in a)
        return Matrix(self.field, self.nrows, other.ncols, rows)

    def _entrywise(self, other: Matrix, op) -> Matrix:
        check_same_field(self.field, other.field)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shape mismatch")
        rows = tuple(tuple(op(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __add__(self, other: Matrix) -> Matrix:
        return self._entrywise(other, self.field.add)

    def __sub__(self, other: Matrix) -> Matrix:
        return self._entrywise(other, self.field.sub)

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def scale(self, c) -> Matrix:
        c = self.field(c)
        rows = tuple(tuple(self.field.mul(c, a) for a in row) for row in self.rows)
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __pow__(self, k: int) -> Matrix:
        if self.nrows != self.ncols or k < 0:
            raise ValueError("only non-negative powers of square matrices")
        out = Matrix.identity(self.field, self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def trace(self):
        s = sum(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))
        return self.field(s) if self.field.characteristic else Fraction(s)

    def is_zero(self) -> bool:
        return all(is_zero_vector(row) for row in self.rows)

    def flatten(self) -> Vector:
        return tuple(a for row in self.rows for a in row)

    @classmethod
    def unflatten(cls, field: Field, flat: Sequence, nrows: int, ncols: int) -> Matrix:
        rows = tuple(tuple(flat[i * ncols : (i + 1) * ncols]) for i in range(nrows))
        return cls(field, nrows, ncols, rows)

    def rank(self) -> int:
        return len(rref(self)[1])

    def tolist(self) -> list[list[str]]:
        return [[str(a) for a in row] for row in self.rows]


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form (zero rows dropped) and its pivot columns."""
    rows, pivots = rref_rows(m.field, m.rows, m.ncols)
    return Matrix(m.field, len(rows), m.ncols, tuple(rows)), pivots


def stack(field: Field, ncols: int, matrices: Iterable[Matrix]) -> Matrix:
    rows = []
    for m in matrices:
        check_same_field(field, m.field)
        if m.ncols != ncols:
            raise DimensionMismatch("cannot stack matrices with different column counts")
        rows.extend(m.rows)
    return Matrix(field, len(rows), ncols, tuple(rows))


# -- subspaces ---------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field ** ambient_dim`` held in canonical RREF."""

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> Subspace:
        rows, pivots = rref_rows(field, (vec(field, v) for v in vectors), ambient_dim)
        return cls(field, ambient_dim, tuple(rows), pivots)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> Subspace:
        return cls.span(field, ambient_dim, (unit_vector(field, ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def _check(self, other: Subspace):
        check_same_field(self.field, other.field)
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient {self.ambient_dim} vs {other.ambient_dim}")

    def residual(self, v: Sequence) -> Vector:
        """Reduce ``v`` against the basis; zero iff ``v`` lies in the subspace."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        f = self.field
        out = list(vec(f, v))
        for row, c in zip(self.basis, self.pivots):
            a = out[c]
            if a != 0:
                out = [f.sub(x, f.mul(a, y)) for x, y in zip(out, row)]
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return is_zero_vector(self.residual(v))

    __contains__ = contains

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` on the basis rows (``v`` must lie in the subspace)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(self.field(v[c]) for c in self.pivots)

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __lt__(self, other: Subspace) -> bool:
        return self <= other and self.dim < other.dim

    def __ge__(self, other: Subspace) -> bool:
        return other <= self

    def __gt__(self, other: Subspace) -> bool:
        return other < self

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def complement_coordinates(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.ambient_dim) if i not in self.pivots)

    def image(self, m: Matrix) -> Subspace:
        check_same_field(self.field, m.field)
        if m.ncols != self.ambient_dim:
            raise DimensionMismatch("matrix does not act on this ambient space")
        return Subspace.span(self.field, m.nrows, (m.apply(v) for v in self.basis))

    def residual_matrix(self) -> Matrix:
        """Matrix of ``v -> residual(v)``, whose kernel is exactly this subspace."""
        n = self.ambient_dim
        cols = [self.residual(unit_vector(self.field, n, j)) for j in range(n)]
        return Matrix.from_columns(self.field, cols, n)

    def elements(self):
        """Every vector of the subspace (finite fields only)."""
        p = self.field.characteristic
        if p == 0:
            raise ValueError("a rational subspace is infinite")
        from itertools import product

        for coeffs in product(range(p), repeat=self.dim):
            v = [0] * self.ambient_dim
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [(x + c * y) % p for x, y in zip(v, row)]
            yield tuple(v)

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(str(a) for a in row) + ")" for row in self.basis)
        return f"Subspace<{self.field}^{self.ambient_dim}>[{rows}]"


def kernel(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}`` as a subspace of the domain."""
    f = m.field
    rows, pivots = rref_rows(f, m.rows, m.ncols)
    free = [j for j in range(m.ncols) if j not in pivots]
    vectors = []
    for j in free:
        v = [f.zero] * m.ncols
        v[j] = f.one
        for row, c in zip(rows, pivots):
            v[c] = f.neg(row[j])
        vectors.append(v)
    return Subspace.span(f, m.ncols, vectors)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus intersection: reduce ``[[a, a], [b, 0]]`` and keep the rows
    whose left half vanished."""
    a._check(b)
    f, n = a.field, a.ambient_dim
    zeros = zero_vector(f, n)
    rows = [tuple(v) + tuple(v) for v in a.basis] + [tuple(v) + zeros for v in b.basis]
    red, pivots = rref_rows(f, rows, 2 * n)
    meet = [row[n:] for row, c in zip(red, pivots) if c >= n]
    return Subspace.span(f, n, meet)


def contains(s: Subspace, v: Sequence) -> bool:
    return s.contains(v)


def intersect_all(spaces: Iterable[Subspace], field: Field, n: int) -> Subspace:
    out = Subspace.full(field, n)
    for s in spaces:
        out = out & s
    return out


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """One solution of ``m x = b`` or None when inconsistent."""
    f = m.field
    aug = [tuple(row) + (f(bi),) for row, bi in zip(m.rows, b)]
    rows, pivots = rref_rows(f, aug, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [f.zero] * m.ncols
    for row, c in zip(rows, pivots):
        x[c] = row[-1]
    return tuple(x)
