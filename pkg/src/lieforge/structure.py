"""Centralizers, normalizers, iterated centralizers and the classical series."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exactlin import Matrix, Subspace, kernel, rref_rows, stack, unit_vector
from .liecore import (
    Element,
    LieAlgebra,
    LieAlgebraError,
    NotAnIdeal,
    SubStructure,
    _coords,
    bracket_subspaces,
    quotient,
)


def _kernel_of_stack(L: LieAlgebra, maps: Iterable[Matrix]) -> Subspace:
    maps = list(maps)
    if not maps:
        return L.full()
    return kernel(stack(L.field, L.dim, maps))


def _as_space(L: LieAlgebra, a) -> Subspace:
    if isinstance(a, SubStructure):
        return a.space
    if isinstance(a, Subspace):
        return a
    return L.span(a)


def centralizer(L: LieAlgebra, xs) -> SubStructure:
    """``C_L(X)``; ``xs`` is an iterable of elements or a Subspace (whose
    basis is then used, which gives the same centralizer)."""
    if isinstance(xs, (Subspace, SubStructure)):
        xs = _as_space(L, xs).basis
    space = _kernel_of_stack(L, (L.ad_matrix(x) for x in xs))
    return L.classify(space)


def center(L: LieAlgebra) -> Subspace:
    return centralizer(L, L.full()).space


def normalizer(L: LieAlgebra, a) -> SubStructure:
    """``N_L(A) = {x : [x, A] <= A}``: kernel of ``x -> [x, a_k] mod A``
    stacked over the basis vectors ``a_k``."""
    a = _as_space(L, a)
    L._own(a)
    r = a.residual_matrix()
    # [x, a_k] = -ad_{a_k}(x)
    maps = [r @ L.ad_matrix(v) for v in a.basis]
    return L.classify(_kernel_of_stack(L, maps))


def relative_centralizer(L: LieAlgebra, a: Subspace, target: Subspace) -> Subspace:
    """``{x : [x, A] <= target}``."""
    r = target.residual_matrix()
    return _kernel_of_stack(L, (r @ L.ad_matrix(v) for v in a.basis))


def iterated_centralizer(L: LieAlgebra, a, h=None, n: int = 1) -> SubStructure:
    """``C^n_L(A/H)`` by the recursive definition, ``C^0 = H``.

    ``C^{m+1}`` is the set of x normalizing every earlier term
    ``C^0 .. C^m`` with ``[x, A] <= C^m``.
    """
    return iterated_centralizer_tower(L, a, h, n)[n]


def iterated_centralizer_tower(L: LieAlgebra, a, h=None, n: int = 1) -> list[SubStructure]:
    a = _as_space(L, a)
    h = L.zero_space() if h is None else _as_space(L, h)
    if not L.is_subalgebra(a):
        raise LieAlgebraError("A must be a subalgebra")
    if not h <= a or not L.is_ideal(h, within=a):
        raise LieAlgebraError("H must be an ideal of A")
    terms = [h]
    normalizers: list[Subspace] = []
    for _ in range(n):
        normalizers.append(normalizer(L, terms[-1]).space)
        cond = relative_centralizer(L, a, terms[-1])
        for nz in normalizers:
            cond = cond & nz
        terms.append(cond)
    return [L.classify(t) for t in terms]


def _word_span(L: LieAlgebra, gens: Sequence[Matrix], length: int) -> list[Matrix]:
    """Basis of the span of all products ``g_1 ... g_length`` of generators."""
    n, f = L.dim, L.field
    if length == 0:
        return [Matrix.identity(f, n)]
    cur = gens
    for _ in range(length - 1):
        rows, _ = rref_rows(f, ((g @ w).flatten() for g in gens for w in cur), n * n)
        cur = [Matrix.unflatten(f, row, n, n) for row in rows]
        if not cur:
            break
    rows, _ = rref_rows(f, (w.flatten() for w in cur), n * n)
    return [Matrix.unflatten(f, row, n, n) for row in rows]


def iterated_centralizer_of_ideal(L: LieAlgebra, ideal, n: int) -> SubStructure:
    """``{x : [I,_n x] = 0}``: the common kernel of every composite
    ``ad_{a_1} ... ad_{a_n}`` with ``a_i`` running over a basis of I."""
    space = _as_space(L, ideal)
    if not L.is_ideal(space):
        raise NotAnIdeal("iterated_centralizer_of_ideal needs an ideal")
    gens = [L.ad_matrix(v) for v in space.basis]
    if n == 0:
        return L.classify(L.zero_space())
    if not gens:
        return L.classify(L.full())
    return L.classify(_kernel_of_stack(L, _word_span(L, gens, n)))


@dataclass(frozen=True)
class Series:
    kind: str
    terms: tuple
    stabilized: bool = True

    @property
    def limit(self) -> Subspace:
        return self.terms[-1]

    def reaches_zero(self) -> bool:
        return self.limit.is_zero()

    def reaches_full(self) -> bool:
        return self.limit.is_full()

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]


def _iterate(kind: str, start: Subspace, step, bound: int) -> Series:
    terms = [start]
    for _ in range(bound + 1):
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            return Series(kind, tuple(terms), True)
        terms.append(nxt)
    raise AssertionError(f"{kind} series failed to stabilize")


def lower_central_series(L: LieAlgebra) -> Series:
    """``L^0 = L``, ``L^{k+1} = [L, L^k]``; stops at the first repeat."""
    full = L.full()
    return _iterate("lower-central", full, lambda t: bracket_subspaces(L, full, t), L.dim)


def derived_series(L: LieAlgebra) -> Series:
    return _iterate("derived", L.full(), lambda t: bracket_subspaces(L, t, t), L.dim)


def upper_central_series(L: LieAlgebra) -> Series:
    """``Z_0 = 0`` and ``Z_{i+1}`` the preimage of the center of ``L/Z_i``."""

    def step(z: Subspace) -> Subspace:
        q = quotient(L, z)
        return q.preimage(center(q.algebra))

    return _iterate("upper-central", L.zero_space(), step, L.dim)


def lower_central_series_of(L: LieAlgebra, h) -> Series:
    """Lower central series of a subalgebra H computed inside L."""
    h = _as_space(L, h)
    return _iterate("lower-central", h, lambda t: bracket_subspaces(L, h, t), L.dim)


def is_nilpotent(L: LieAlgebra) -> int | None:
    """Nilpotency class (0 for the zero algebra) or None."""
    s = lower_central_series(L)
    return len(s) - 1 if s.reaches_zero() else None


def is_solvable(L: LieAlgebra) -> int | None:
    """Derived length or None."""
    s = derived_series(L)
    return len(s) - 1 if s.reaches_zero() else None


def nilpotency_class_of(L: LieAlgebra, h) -> int | None:
    s = lower_central_series_of(L, h)
    return len(s) - 1 if s.reaches_zero() else None


def centralizer_finite_witness(L: LieAlgebra, s) -> list[Element]:
    """Finitely many elements of ``s`` with the same centralizer as ``s``.

    Greedy: each round adds the basis vector of ``s`` giving the smallest
    centralizer (lowest index on ties) until nothing shrinks it further.
    """
    s = _as_space(L, s)
    chosen: list[tuple] = []
    current = L.full()
    while True:
        best = None
        for v in s.basis:
            cand = current & centralizer(L, [v]).space
            if cand.dim < current.dim and (best is None or cand.dim < best[1].dim):
                best = (v, cand)
        if best is None:
            break
        chosen.append(best[0])
        current = best[1]
    assert current == centralizer(L, s).space
    return [L.element(v) for v in chosen]


# -- checks ------------------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    not_applicable: int = 0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, ok: bool, witness=None):
        self.checked += 1
        if not ok:
            self.violations.append(witness)

    def merge(self, other: CheckReport) -> CheckReport:
        self.checked += other.checked
        self.violations.extend(other.violations)
        self.not_applicable += other.not_applicable
        for k, v in other.notes.items():
            self.notes[k] = self.notes.get(k, 0) + v if isinstance(v, int) else v
        return self

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "not_applicable": self.not_applicable,
            "passed": self.passed,
            "violations": self.violations,
            **({"notes": dict(sorted(self.notes.items()))} if self.notes else {}),
        }


def _rows(s: Subspace) -> list[list[str]]:
    return [[str(a) for a in row] for row in s.basis]


def check_lemma_cent_it_1(L: LieAlgebra, h, bound: int) -> CheckReport:
    """``[H^i, C^j(H)] <= C^{j-i-1}(H)`` for ``0 <= i < j <= bound``."""
    h = _as_space(L, h)
    report = CheckReport("lemma-cent-it-1")
    lcs = list(lower_central_series_of(L, h).terms)
    tower = [t.space for t in iterated_centralizer_tower(L, h, None, bound)]
    for j in range(1, bound + 1):
        for i in range(j):
            hi = lcs[min(i, len(lcs) - 1)]
            lhs = bracket_subspaces(L, hi, tower[j])
            ok = lhs <= tower[j - i - 1]
            report.record(ok, None if ok else {"H": _rows(h), "i": i, "j": j, "bracket": _rows(lhs)})
    return report


def check_lemma_cent_it_2(L: LieAlgebra, k, h, j: int) -> CheckReport:
    """If ``K <= H`` and ``C(K^i) = C(H^i)`` for ``i < j`` then ``C^j(K) = C^j(H)``."""
    k, h = _as_space(L, k), _as_space(L, h)
    report = CheckReport("lemma-cent-it-2")
    if not k <= h:
        report.not_applicable += 1
        return report
    lk = list(lower_central_series_of(L, k).terms)
    lh = list(lower_central_series_of(L, h).terms)

    def term(s, i):
        return s[min(i, len(s) - 1)]

    premise = all(centralizer(L, term(lk, i)).space == centralizer(L, term(lh, i)).space for i in range(j))
    if not premise:
        report.not_applicable += 1
        return report
    ck = iterated_centralizer(L, k, None, j).space
    chh = iterated_centralizer(L, h, None, j).space
    ok = ck == chh
    report.record(ok, None if ok else {"K": _rows(k), "H": _rows(h), "j": j})
    return report


def check_three_subgroups(L: LieAlgebra, x, y, z, h) -> CheckReport:
    """If ``[[X,Y],Z] <= H`` and ``[[Y,Z],X] <= H`` then ``[[Z,X],Y] <= H``."""
    x, y, z, h = (_as_space(L, s) for s in (x, y, z, h))
    report = CheckReport("three-subgroups")
    b = lambda u, v: bracket_subspaces(L, u, v)  # noqa: E731
    if b(b(x, y), z) <= h and b(b(y, z), x) <= h:
        ok = b(b(z, x), y) <= h
        report.record(ok, None if ok else {"X": _rows(x), "Y": _rows(y), "Z": _rows(z), "H": _rows(h)})
    else:
        report.not_applicable += 1
    return report


def check_keystone(L: LieAlgebra, ideal, bound: int | None = None) -> CheckReport:
    """Recursive iterated centralizer of an ideal against the kernel formula."""
    space = _as_space(L, ideal)
    bound = L.dim if bound is None else bound
    report = CheckReport("keystone")
    tower = iterated_centralizer_tower(L, space, None, bound)
    for n in range(bound + 1):
        lhs = tower[n].space
        rhs = iterated_centralizer_of_ideal(L, space, n).space
        ok = lhs == rhs and tower[n].is_ideal
        report.record(ok, None if ok else {"I": _rows(space), "n": n, "recursive": _rows(lhs), "kernel": _rows(rhs)})
    return report


def check_normalizer_lemma(L: LieAlgebra, a, bound: int | None = None) -> CheckReport:
    """``N_L(A) <= N_L(C^n(A))``."""
    a = _as_space(L, a)
    bound = L.dim if bound is None else bound
    report = CheckReport("normalizer-tower")
    na = normalizer(L, a).space
    for n, t in enumerate(iterated_centralizer_tower(L, a, None, bound)):
        ok = na <= normalizer(L, t.space).space
        report.record(ok, None if ok else {"A": _rows(a), "n": n})
    return report


def zf_witnesses(L: LieAlgebra) -> list[list[Element]]:
    """For each ``Z_i``, finitely many elements whose relative centralizer
    modulo ``Z_i`` is ``Z_{i+1}``."""
    out = []
    ucs = upper_central_series(L)
    for zi in ucs.terms:
        q = quotient(L, zi)
        wit = centralizer_finite_witness(q.algebra, q.algebra.full())
        out.append([L.element(q.lift(w.coords)) for w in wit])
    return out


def ideals_from_series(L: LieAlgebra) -> list[Subspace]:
    """The ideals produced by the series and centralizers; used to drive checks."""
    found: list[Subspace] = []
    for s in (lower_central_series(L), derived_series(L), upper_central_series(L)):
        found.extend(s.terms)
    found.append(center(L))
    for t in list(found):
        found.append(centralizer(L, t).space)
    unique: list[Subspace] = []
    for s in found:
        if s not in unique and L.is_ideal(s):
            unique.append(s)
    return unique


def basis_vector(L: LieAlgebra, i: int) -> tuple:
    return unit_vector(L.field, L.dim, i)
