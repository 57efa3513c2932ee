"""Ad-nilpotency, the associative envelope of ad(L), the Fitting ideal in
characteristic zero, and subideal / Baer-radical checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .exactlin import Matrix, Subspace, kernel, rref_rows
from .liecore import (
    LieAlgebra,
    LieAlgebraError,
    NotASubalgebra,
    SubStructure,
    _coords,
    bracket_subspaces,
    ideal_closure,
    quotient,
)
from .structure import _as_space, derived_series, is_nilpotent, lower_central_series_of


class WrongCharacteristic(LieAlgebraError):
    pass


class PostVerificationError(AssertionError):
    """The Fitting computation produced something that is not the nilradical."""


def _require_char0(L: LieAlgebra):
    if L.field.characteristic != 0:
        raise WrongCharacteristic(f"{L.name} is over {L.field}; need characteristic 0")


def ad_nilpotency_index(L: LieAlgebra, x) -> int | None:
    """Least ``k >= 1`` with ``ad_x^k = 0``, or None when ``ad_x`` is not nilpotent."""
    ad = L.ad_matrix(_coords(x))
    power = ad
    for k in range(1, max(L.dim, 1) + 1):
        if power.is_zero():
            return k
        power = power @ ad
    return None


@dataclass(frozen=True)
class Envelope:
    size: int
    basis: tuple  # of Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, m: Matrix) -> bool:
        space = Subspace.span(m.field, self.size**2, (b.flatten() for b in self.basis)) if self.basis else None
        if space is None:
            return m.is_zero()
        return space.contains(m.flatten())


def associative_envelope(L: LieAlgebra) -> Envelope:
    """Span of all nonempty words in the matrices ``ad_{e_i}``.

    Closing the span under left multiplication by the generators already
    yields every word, hence a subalgebra of ``End(L)``.
    """
    n, f = L.dim, L.field
    gens = [m for m in L.ad_basis() if not m.is_zero()]
    rows, _ = rref_rows(f, (g.flatten() for g in gens), n * n)
    frontier = [Matrix.unflatten(f, r, n, n) for r in rows]
    while True:
        cand = [m.flatten() for m in frontier] + [(g @ b).flatten() for g in gens for b in frontier]
        new_rows, _ = rref_rows(f, cand, n * n)
        if len(new_rows) == len(frontier):
            break
        frontier = [Matrix.unflatten(f, r, n, n) for r in new_rows]
    return Envelope(n, tuple(frontier))


@dataclass(frozen=True)
class TraceRadical:
    """``R = {a in A : tr(ab) = 0 for all b in A}`` for the envelope A."""

    envelope: Envelope
    basis: tuple  # of Matrix

    def is_ideal(self) -> bool:
        if not self.basis:
            return True
        n = self.envelope.size
        f = self.basis[0].field
        space = Subspace.span(f, n * n, (r.flatten() for r in self.basis))
        return all(
            space.contains((a @ r).flatten()) and space.contains((r @ a).flatten())
            for a in self.envelope.basis
            for r in self.basis
        )

    def nilpotency_index(self) -> int | None:
        """Least k with ``R^k = 0``; a nilpotent algebra of n x n matrices has
        ``R^n = 0``, so the search stops there."""
        if not self.basis:
            return 1
        n = self.envelope.size
        f = self.basis[0].field
        power = list(self.basis)
        for k in range(2, n + 2):
            rows, _ = rref_rows(f, ((p @ r).flatten() for p in power for r in self.basis), n * n)
            if not rows:
                return k
            power = [Matrix.unflatten(f, row, n, n) for row in rows]
        return None


def trace_radical(env: Envelope) -> TraceRadical:
    if not env.basis:
        return TraceRadical(env, ())
    f = env.basis[0].field
    n = env.size
    gram = Matrix.from_rows(f, [[(a @ b).trace() for a in env.basis] for b in env.basis])
    ker = kernel(gram)
    mats = []
    for coeffs in ker.basis:
        flat = [f.zero] * (n * n)
        for c, b in zip(coeffs, env.basis):
            if c:
                flat = [f.add(x, f.mul(c, y)) for x, y in zip(flat, b.flatten())]
        mats.append(Matrix.unflatten(f, flat, n, n))
    return TraceRadical(env, tuple(mats))


def _fitting_candidate(L: LieAlgebra, env: Envelope | None = None) -> Subspace:
    # x is kept iff tr(ad_x b) = 0 for every envelope basis element b
    env = associative_envelope(L) if env is None else env
    ads = L.ad_basis()
    rows = [[(a @ b).trace() for a in ads] for b in env.basis]
    if not rows:
        return L.full()
    return kernel(Matrix.from_rows(L.field, rows, L.dim))


def fitting_ideal(L: LieAlgebra) -> SubStructure:
    """Largest nilpotent ideal via the trace form of the envelope.

    Post-verified: the result is an ideal, it is nilpotent, and the trace
    radical of the envelope is a nilpotent two-sided ideal.  The last point
    makes it the Jacobson radical, which contains ``ad(J)`` for every
    nilpotent ideal J, so nothing larger is nilpotent.
    """
    _require_char0(L)
    env = associative_envelope(L)
    f = _fitting_candidate(L, env)
    if not L.is_ideal(f):
        raise PostVerificationError(f"Fitting candidate of {L.name} is not an ideal")
    if not lower_central_series_of(L, f).reaches_zero():
        raise PostVerificationError(f"Fitting candidate of {L.name} is not nilpotent")
    rad = trace_radical(env)
    if not rad.is_ideal() or rad.nilpotency_index() is None:
        raise PostVerificationError(f"trace radical of the envelope of {L.name} is not a nilpotent ideal")
    return SubStructure(L, f, "ideal")


def quotient_fitting_dim(L: LieAlgebra) -> int:
    """Dimension of ``F(L/F(L))``; reported, not required to vanish."""
    q = quotient(L, fitting_ideal(L).space)
    return _fitting_candidate(q.algebra).dim


@dataclass
class EngelVerdict:
    every_element_ad_nilpotent: bool
    nilpotent: bool
    nilpotency_class: int | None

    @property
    def consistent(self) -> bool:
        return self.every_element_ad_nilpotent == self.nilpotent

    def to_json(self) -> dict:
        return {
            "F_equals_L": self.every_element_ad_nilpotent,
            "nilpotent": self.nilpotent,
            "class": self.nilpotency_class,
            "equivalence_holds": self.consistent,
        }


def engel_check(L: LieAlgebra) -> EngelVerdict:
    _require_char0(L)
    p = fitting_ideal(L).space.is_full()
    c = is_nilpotent(L)
    return EngelVerdict(p, c is not None, c)


def is_subideal(L: LieAlgebra, h) -> list[Subspace] | None:
    """Chain ``H = K_r <| ... <| K_0 = L`` or None.

    ``K_{i+1}`` is the ideal closure of H inside ``K_i``; H is a subideal
    exactly when this descending series reaches H.
    """
    h = _as_space(L, h)
    if not L.is_subalgebra(h):
        raise NotASubalgebra("is_subideal needs a subalgebra")
    chain = [L.full()]
    for _ in range(L.dim + 1):
        if chain[-1] == h:
            return list(reversed(chain))
        nxt = ideal_closure(L, h, within=chain[-1]).space
        if nxt == chain[-1]:
            return None
        chain.append(nxt)
    return None


def verify_chain(L: LieAlgebra, chain: list[Subspace]) -> bool:
    return all(L.is_ideal(a, within=b) and a <= b for a, b in zip(chain, chain[1:]))


@dataclass
class BaerReport:
    fitting: Subspace
    subideal_in_f: int = 0
    rejected_outside_f: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "fitting_dim": self.fitting.dim,
            "basis_of_F_generating_subideals": self.subideal_in_f,
            "outside_F_not_subideal": self.rejected_outside_f,
            "passed": self.passed,
            "failures": self.failures,
        }


def _random_vector(L: LieAlgebra, rng: random.Random, spread: int = 3):
    return tuple(L.field(rng.randint(-spread, spread)) for _ in range(L.dim))


def baer_consistency(L: LieAlgebra, samples: int = 50, seed: int = 0) -> BaerReport:
    """Every basis vector of F spans a subideal, sampled elements outside F
    do not."""
    _require_char0(L)
    F = fitting_ideal(L).space
    report = BaerReport(F)
    for v in F.basis:
        chain = is_subideal(L, L.span([v]))
        if chain is not None and verify_chain(L, chain):
            report.subideal_in_f += 1
        else:
            report.failures.append({"kind": "in-F-not-subideal", "x": [str(a) for a in v]})
    if F.is_full():
        return report
    outside = [e.coords for e in L.basis() if not F.contains(e.coords)]
    rng = random.Random(seed)
    drawn = 0
    attempts = 0
    while drawn < samples and attempts < 100 * samples:
        attempts += 1
        v = _random_vector(L, rng)
        if not F.contains(v):
            outside.append(v)
            drawn += 1
    for v in outside:
        if is_subideal(L, L.span([v])) is None:
            report.rejected_outside_f += 1
        else:
            report.failures.append({"kind": "outside-F-subideal", "x": [str(a) for a in v]})
    return report


@dataclass
class FittingCertificate:
    fitting: Subspace
    is_ideal: bool
    derived_length: int | None
    ad_nilpotent_basis: bool
    nilpotency_class: int | None

    @property
    def valid(self) -> bool:
        return (
            self.is_ideal
            and self.derived_length is not None
            and self.ad_nilpotent_basis
            and self.nilpotency_class is not None
        )

    def to_json(self) -> dict:
        return {
            "fitting": [[str(a) for a in row] for row in self.fitting.basis],
            "is_ideal": self.is_ideal,
            "derived_length": self.derived_length,
            "basis_ad_nilpotent": self.ad_nilpotent_basis,
            "nilpotency_class": self.nilpotency_class,
            "valid": self.valid,
        }


def fitting_nilpotent_certificate(L: LieAlgebra) -> FittingCertificate:
    F = fitting_ideal(L).space
    # derived series of F computed inside L
    terms = [F]
    for _ in range(L.dim + 1):
        nxt = bracket_subspaces(L, terms[-1], terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    dl = len(terms) - 1 if terms[-1].is_zero() else None
    nil_basis = all(ad_nilpotency_index(L, v) is not None for v in F.basis)
    lcs = lower_central_series_of(L, F)
    cls = len(lcs) - 1 if lcs.reaches_zero() else None
    return FittingCertificate(F, L.is_ideal(F), dl, nil_basis, cls)


def solvable_radical_length(L: LieAlgebra) -> int | None:
    s = derived_series(L)
    return len(s) - 1 if s.reaches_zero() else None
