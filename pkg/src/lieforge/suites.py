"""Verification suites shared by ``lieforge check`` and the acceptance run.

Each suite maps an algebra (or ring) plus a seed to a list of
:class:`CheckReport`; a suite that does not apply returns reports with only
``not_applicable`` counts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .constructions import (
    Representation,
    check_conjugation_centralizer,
    check_hartley_identity,
    check_normalization_lemma,
    exp_ad,
    semidirect_bound_experiment,
)
from .exactlin import Matrix, is_zero_vector, unit_vector
from .finring import FiniteLieRing, Subgroup, verify_paper_suite
from . import finring as fr
from .liecore import LieAlgebra, subalgebra_closure
from .radicals import (
    ad_nilpotency_index,
    baer_consistency,
    engel_check,
    fitting_ideal,
    fitting_nilpotent_certificate,
)
from .randgen import random_element_of, random_vector, sample_subalgebras
from .structure import (
    CheckReport,
    center,
    centralizer,
    check_keystone,
    check_lemma_cent_it_1,
    check_lemma_cent_it_2,
    check_normalizer_lemma,
    check_three_subgroups,
    derived_series,
    ideals_from_series,
    iterated_centralizer_tower,
    lower_central_series,
    lower_central_series_of,
    upper_central_series,
    zf_witnesses,
)

SUITES = ("jacobi", "centralizers", "lemma-cent-it", "radicals", "exp", "semidirect", "finring")
CENT_IT_BOUND = 4


@dataclass
class Target:
    """What a suite runs on: an algebra (with optional modules) or a ring."""

    name: str
    algebra: LieAlgebra | None = None
    ring: FiniteLieRing | None = None
    reps: list = field(default_factory=list)

    @property
    def char0(self) -> bool:
        return self.algebra is not None and self.algebra.field.characteristic == 0


def _skip(name: str, why: str) -> CheckReport:
    return CheckReport(name, not_applicable=1, notes={"skipped": why})


def _rows(vectors) -> list[list[str]]:
    return [[str(a) for a in v] for v in vectors]


# -- jacobi -------------------------------------------------------------------


def suite_jacobi(t: Target, seed: int, samples: int) -> list[CheckReport]:
    if t.ring is not None:
        rep = CheckReport("jacobi-ring")
        r = t.ring
        gens = [r.generator(i) for i in range(r.rank)]
        rng = random.Random(seed)
        elems = r.elements()
        triples = [(a, b, c) for a in gens for b in gens for c in gens]
        triples += [tuple(rng.choice(elems) for _ in range(3)) for _ in range(samples)]
        for a, b, c in triples:
            s = r.add(r.add(r.bracket(a, r.bracket(b, c)), r.bracket(b, r.bracket(c, a))), r.bracket(c, r.bracket(a, b)))
            rep.record(s == r.zero(), None if s == r.zero() else {"x": list(a), "y": list(b), "z": list(c)})
        return [rep]
    L = t.algebra
    f = L.field
    rep = CheckReport("jacobi")
    rng = random.Random(seed)
    for _ in range(samples):
        x, y, z = (random_vector(L, rng) for _ in range(3))
        b = L.bracket_coords
        total = [f.add(f.add(p, q), s) for p, q, s in zip(b(x, b(y, z)), b(y, b(z, x)), b(z, b(x, y)))]
        ok = is_zero_vector(total)
        rep.record(ok, None if ok else {"x": _rows([x])[0], "y": _rows([y])[0], "z": _rows([z])[0]})
    anti = CheckReport("antisymmetry")
    for _ in range(samples):
        x, y = random_vector(L, rng), random_vector(L, rng)
        ok = is_zero_vector([f.add(p, q) for p, q in zip(L.bracket_coords(x, y), L.bracket_coords(y, x))])
        anti.record(ok, None if ok else {"x": _rows([x])[0], "y": _rows([y])[0]})
    return [rep, anti]


# -- centralizers -------------------------------------------------------------


def suite_centralizers(t: Target, seed: int, samples: int) -> list[CheckReport]:
    if t.algebra is None:
        return [_skip("centralizers", "rings are covered by the finring suite")]
    L = t.algebra
    rng = random.Random(seed)
    keystone = CheckReport("keystone")
    for ideal in ideals_from_series(L):
        keystone.merge(check_keystone(L, ideal))
    subs = sample_subalgebras(L, rng, samples)
    norm = CheckReport("normalizer-tower")
    for h in subs:
        norm.merge(check_normalizer_lemma(L, h))
    three = CheckReport("three-subgroups")
    z = center(L)
    for _ in range(samples):
        x, y, w = (rng.choice(subs) for _ in range(3))
        for h in (z, L.zero_space(), L.full()):
            three.merge(check_three_subgroups(L, x, y, w, h))
    zf = CheckReport("zf-witness")
    ucs = upper_central_series(L)
    for i, wit in enumerate(zf_witnesses(L)):
        zf.record(len(wit) <= L.dim, None if len(wit) <= L.dim else {"i": i, "length": len(wit)})
    tower = [s.space for s in iterated_centralizer_tower(L, L.full(), None, len(ucs) - 1)]
    upper = CheckReport("iterated-centers-match-upper-series")
    ok = tower == list(ucs.terms)
    upper.record(ok, None if ok else {"tower": [s.dim for s in tower], "upper": ucs.dims})
    return [keystone, norm, three, zf, upper]


# -- lemma-cent-it ------------------------------------------------------------


def centered_pairs(L: LieAlgebra, rng: random.Random, count: int) -> list[tuple]:
    """Pairs ``K <= H`` with ``H`` the subalgebra generated by ``K`` and the
    center.  Then ``H^i = K^i`` for ``i >= 1`` and ``C(H) = C(K)``, so the
    premise of the second lemma holds for every ``j``."""
    z = center(L)
    out = []
    for k in sample_subalgebras(L, rng, count):
        h = subalgebra_closure(L, k + z).space
        out.append((k, h))
    return out


def random_pairs(L: LieAlgebra, rng: random.Random, count: int) -> list[tuple]:
    """``K`` generated by random elements of a random subalgebra ``H``."""
    out = []
    for h in sample_subalgebras(L, rng, count):
        gens = [random_element_of(L, h, rng) for _ in range(rng.randint(1, 2))]
        out.append((subalgebra_closure(L, L.span(gens)).space, h))
    return out


def suite_lemma_cent_it(t: Target, seed: int, samples: int) -> list[CheckReport]:
    if t.algebra is None:
        return [_skip("lemma-cent-it", "rings are covered by the finring suite")]
    L = t.algebra
    rng = random.Random(seed)
    one = CheckReport("lemma-cent-it-1")
    for h in sample_subalgebras(L, rng, samples):
        one.merge(check_lemma_cent_it_1(L, h, CENT_IT_BOUND))
    two = CheckReport("lemma-cent-it-2")
    nontrivial = 0
    for k, h in centered_pairs(L, rng, samples) + random_pairs(L, rng, samples):
        for j in range(1, CENT_IT_BOUND + 1):
            r = check_lemma_cent_it_2(L, k, h, j)
            two.merge(r)
            if r.checked and k != h:
                nontrivial += 1
    two.notes["instances_with_K_ne_H"] = nontrivial
    return [one, two]


# -- radicals -----------------------------------------------------------------


def suite_radicals(t: Target, seed: int, samples: int) -> list[CheckReport]:
    if not t.char0:
        return [_skip("radicals", "the trace method needs characteristic 0")]
    L = t.algebra
    fit = CheckReport("fitting-post-verified")
    try:
        F = fitting_ideal(L).space
        fit.record(True)
    except AssertionError as e:
        fit.record(False, {"error": str(e)})
        return [fit]
    cert = fitting_nilpotent_certificate(L)
    c = CheckReport("fitting-certificate")
    c.record(cert.valid, None if cert.valid else cert.to_json())
    engel = CheckReport("engel-equivalence")
    v = engel_check(L)
    engel.record(v.consistent, None if v.consistent else v.to_json())
    baer = CheckReport("baer-equals-fitting")
    b = baer_consistency(L, samples=samples, seed=seed)
    baer.record(b.passed, None if b.passed else b.to_json())
    baer.notes["fitting_dim"] = F.dim
    return [fit, c, engel, baer]


# -- exp ----------------------------------------------------------------------


def ad_nilpotent_elements(L: LieAlgebra, rng: random.Random, samples: int) -> list[tuple]:
    """Ad-nilpotent basis vectors, the basis of F, and random elements of F."""
    F = fitting_ideal(L).space
    cands = [unit_vector(L.field, L.dim, i) for i in range(L.dim)] + list(F.basis)
    cands += [random_element_of(L, F, rng) for _ in range(samples if F.dim else 0)]
    out = []
    for x in cands:
        if not is_zero_vector(x) and x not in out and ad_nilpotency_index(L, x) is not None:
            out.append(x)
    return out


def suite_exp(t: Target, seed: int, samples: int) -> list[CheckReport]:
    if not t.char0:
        return [_skip("exp", "exp(ad_x) needs characteristic 0")]
    L = t.algebra
    rng = random.Random(seed)
    xs = ad_nilpotent_elements(L, rng, min(samples, 10))
    subs = sample_subalgebras(L, rng, min(samples, 10))
    auto = CheckReport("exp-automorphism")
    inv = CheckReport("exp-inverse")
    norm = CheckReport("normalize-iff-exp-stabilize")
    hart = CheckReport("hartley-identity")
    conj = CheckReport("conjugate-centralizer")
    ident = Matrix.identity(L.field, L.dim)
    for x in xs:
        g = exp_ad(L, x)
        auto.record(g.is_automorphism(), None if g.is_automorphism() else {"x": _rows([x])[0]})
        minus = exp_ad(L, tuple(L.field.neg(a) for a in x))
        ok = (g * minus).matrix == ident and (minus * g).matrix == ident
        inv.record(ok, None if ok else {"x": _rows([x])[0]})
        h = check_hartley_identity(L, x)
        hart.record(h["holds"], None if h["holds"] else {"x": _rows([x])[0], **h})
        for a in subs:
            r = check_normalization_lemma(L, x, a)
            norm.record(r["holds"], None if r["holds"] else {"x": _rows([x])[0], "A": _rows(a.basis), **r})
            ok = check_conjugation_centralizer(L, a, g)
            conj.record(ok, None if ok else {"x": _rows([x])[0], "S": _rows(a.basis)})
    return [auto, inv, norm, hart, conj]


# -- semidirect ---------------------------------------------------------------


def _is_abelian(L: LieAlgebra) -> bool:
    return all(is_zero_vector(L.c[i][j]) for i in range(L.dim) for j in range(L.dim))


def check_bound(rep: Representation, v) -> CheckReport:
    report = CheckReport("semidirect-bound")
    r = semidirect_bound_experiment(rep, v)
    report.record(r.annihilated, None if r.annihilated else {"v": _rows([v])[0], **r.to_json()})
    return report


def suite_semidirect(t: Target, seed: int, samples: int) -> list[CheckReport]:
    if not t.char0 or not _is_abelian(t.algebra) or not t.reps:
        return [_skip("semidirect-bound", "needs an abelian algebra over Q with a module block")]
    rng = random.Random(seed)
    out = CheckReport("semidirect-bound")
    for rep in t.reps:
        vs = [unit_vector(rep.algebra.field, rep.dim, i) for i in range(rep.dim)]
        vs += [tuple(rep.algebra.field(rng.randint(-2, 2)) for _ in range(rep.dim)) for _ in range(samples)]
        for v in vs:
            try:
                out.merge(check_bound(rep, v))
            except Exception as e:  # a witness acting non-nilpotently on v
                if type(e).__name__ != "PreconditionError":
                    raise
                out.not_applicable += 1
    return [out]


# -- finring ------------------------------------------------------------------


def _as_group(r: FiniteLieRing, s) -> Subgroup:
    return Subgroup(r, frozenset(s.elements()))


def oracle_agreement(L: LieAlgebra, seed: int, samples: int) -> CheckReport:
    """Series and centralizers over GF(p) against finring exhaustion."""
    report = CheckReport("fp-oracle-agreement")
    r = FiniteLieRing.from_algebra(L)

    def cmp(label, spaces, groups):
        a = [frozenset(s.elements()) for s in spaces]
        b = [g.elements for g in groups]
        report.record(a == b, None if a == b else {"object": label})

    cmp("lower-central", lower_central_series(L).terms, fr.lower_central_series(r))
    cmp("derived", derived_series(L).terms, fr.derived_series(r))
    cmp("upper-central", upper_central_series(L).terms, fr.upper_central_series(r))
    for i in range(L.dim):
        e = unit_vector(L.field, L.dim, i)
        cmp(f"C(e{i + 1})", [centralizer(L, [e]).space], [fr.centralizer_exhaustive(r, [e])])
    rng = random.Random(seed)
    for h in sample_subalgebras(L, rng, samples):
        g = _as_group(r, h)
        cmp("C(H)", [centralizer(L, h).space], [fr.centralizer_exhaustive(r, g.generators())])
        cmp("H-lower-central", lower_central_series_of(L, h).terms, fr.lower_central_series(r, g))
        cmp(
            "C^n(H)",
            [s.space for s in iterated_centralizer_tower(L, h, None, CENT_IT_BOUND)],
            fr.iterated_centralizers(r, g, CENT_IT_BOUND),
        )
    return report


def suite_finring(t: Target, seed: int, samples: int) -> list[CheckReport]:
    if t.ring is not None:
        sr = verify_paper_suite(t.ring, seed=seed)
        out = []
        for name, count in sorted(sr.checks.items()):
            rep = CheckReport(name)
            rep.checked = count
            rep.violations = [v["counterexample"] for v in sr.violations if v["check"] == name]
            out.append(rep)
        return out
    if t.algebra is not None and t.algebra.field.characteristic:
        return [oracle_agreement(t.algebra, seed, min(samples, 20))]
    return [_skip("finring", "needs a ring or an algebra over GF(p)")]


RUNNERS = {
    "jacobi": suite_jacobi,
    "centralizers": suite_centralizers,
    "lemma-cent-it": suite_lemma_cent_it,
    "radicals": suite_radicals,
    "exp": suite_exp,
    "semidirect": suite_semidirect,
    "finring": suite_finring,
}


def run_suite(name: str, t: Target, seed: int = 0, samples: int = 50) -> list[CheckReport]:
    names = SUITES if name == "all" else (name,)
    out: list[CheckReport] = []
    for n in names:
        out.extend(RUNNERS[n](t, seed, samples))
    return out
