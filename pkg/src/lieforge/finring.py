"""Finite Lie rings on ``Z/m_1 x ... x Z/m_r``, analysed by exhaustion.

Elements are tuples ``(a_1, ..., a_r)`` with ``0 <= a_i < m_i``.  The
bracket is determined by its values on generator pairs.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterable, Iterator, Mapping, Sequence

DEFAULT_CAP = 2**12
SUBGROUP_CAP = 2**16
SUBRING_SAMPLE_THRESHOLD = 2**10


class RingError(ValueError):
    pass


class OrderCapExceeded(RingError):
    pass


def order_cap() -> int:
    return int(os.environ.get("LIEFORGE_CAP", DEFAULT_CAP))


Elt = tuple


class FiniteLieRing:
    """``table[(i, j)]`` is ``[g_i, g_j]`` as a group element."""

    def __init__(self, factors: Sequence[int], table: Mapping[tuple[int, int], Sequence[int]] | None = None, name: str = "R"):
        self.factors = tuple(int(m) for m in factors)
        if any(m < 2 for m in self.factors):
            raise RingError("invariant factors must be >= 2")
        self.name = name
        r = self.rank
        table = dict(table or {})
        full = {}
        for i in range(r):
            for j in range(r):
                full[i, j] = self.normalize(table.get((i, j), (0,) * r))
        for (i, j), v in table.items():
            if (j, i) not in table:
                full[j, i] = self.neg(self.normalize(v))
        self.table = full
        self._validate()

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        return prod(self.factors)

    def __repr__(self):
        return f"FiniteLieRing({self.name!r}, factors={self.factors})"

    # group structure

    def normalize(self, x: Sequence[int]) -> Elt:
        if len(x) != self.rank:
            raise RingError(f"element {tuple(x)} has wrong length")
        return tuple(a % m for a, m in zip(x, self.factors))

    def zero(self) -> Elt:
        return (0,) * self.rank

    def add(self, x: Elt, y: Elt) -> Elt:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.factors))

    def neg(self, x: Elt) -> Elt:
        return tuple((-a) % m for a, m in zip(x, self.factors))

    def scale(self, k: int, x: Elt) -> Elt:
        return tuple((k * a) % m for a, m in zip(x, self.factors))

    def generator(self, i: int) -> Elt:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def element_order(self, x: Elt) -> int:
        o = 1
        for a, m in zip(x, self.factors):
            ai = m // gcd(a, m)
            o = o * ai // gcd(o, ai)
        return o

    def bracket(self, x: Elt, y: Elt) -> Elt:
        out = [0] * self.rank
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                t = self.table[i, j]
                ab = a * b
                for k in range(self.rank):
                    out[k] += ab * t[k]
        return self.normalize(out)

    def _validate(self):
        r = self.rank
        for i in range(r):
            if any(self.table[i, i]):
                raise RingError(f"[g{i + 1}, g{i + 1}] != 0")
            for j in range(r):
                if self.add(self.table[i, j], self.table[j, i]) != self.zero():
                    raise RingError(f"[g{i + 1}, g{j + 1}] != -[g{j + 1}, g{i + 1}]")
                # well defined on Z/m_i x Z/m_j: the order must divide gcd(m_i, m_j)
                g = gcd(self.factors[i], self.factors[j])
                if self.scale(g, self.table[i, j]) != self.zero():
                    raise RingError(f"[g{i + 1}, g{j + 1}] has order not dividing {g}")
        gens = [self.generator(i) for i in range(r)]
        for i, j, k in itertools.product(range(r), repeat=3):
            x, y, z = gens[i], gens[j], gens[k]
            s = self.add(
                self.add(self.bracket(x, self.bracket(y, z)), self.bracket(z, self.bracket(x, y))),
                self.bracket(y, self.bracket(z, x)),
            )
            if s != self.zero():
                raise RingError(f"Jacobi fails on (g{i + 1}, g{j + 1}, g{k + 1})")

    # enumeration

    def elements(self, cap: int | None = None) -> list[Elt]:
        return list(enumerate_elements(self, cap))

    @classmethod
    def from_algebra(cls, L) -> FiniteLieRing:
        """The additive group of an GF(p)-algebra with its bracket."""
        p = L.field.characteristic
        if p == 0:
            raise RingError("only algebras over GF(p) are finite rings")
        table = {(i, j): tuple(L.c[i][j]) for i in range(L.dim) for j in range(L.dim)}
        return cls((p,) * L.dim, table, L.name)


def enumerate_elements(r: FiniteLieRing, cap: int | None = None) -> Iterator[Elt]:
    cap = order_cap() if cap is None else cap
    if r.order > cap:
        raise OrderCapExceeded(f"order {r.order} exceeds cap {cap}")
    return itertools.product(*(range(m) for m in r.factors))


# -- subgroups ---------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    ring: FiniteLieRing = field(repr=False, compare=False, hash=False)
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.elements

    def __le__(self, other: Subgroup) -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: Subgroup) -> bool:
        return self.elements < other.elements

    def __and__(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.ring, self.elements & other.elements)

    def __add__(self, other: Subgroup) -> Subgroup:
        return generate(self.ring, self.generators() + other.generators())

    def key(self) -> tuple:
        return tuple(sorted(self.elements))

    def generators(self) -> list[Elt]:
        """A small generating set, chosen greedily in sorted order."""
        gens: list[Elt] = []
        current = {self.ring.zero()}
        for x in sorted(self.elements):
            if x not in current:
                gens.append(x)
                current = set(generate(self.ring, gens).elements)
                if len(current) == len(self.elements):
                    break
        return gens

    def to_json(self) -> list[list[int]]:
        return [list(x) for x in self.generators()]


def generate(r: FiniteLieRing, gens: Iterable[Elt]) -> Subgroup:
    """Additive subgroup generated by ``gens``."""
    elems = {r.zero()}
    for g in gens:
        g = r.normalize(g)
        if g in elems:
            continue
        multiples = [r.zero()]
        m = r.scale(1, g)
        while m != r.zero():
            multiples.append(m)
            m = r.add(m, g)
        elems = {r.add(a, b) for a in elems for b in multiples}
    return Subgroup(r, frozenset(elems))


def whole(r: FiniteLieRing) -> Subgroup:
    return Subgroup(r, frozenset(enumerate_elements(r)))


def trivial(r: FiniteLieRing) -> Subgroup:
    return Subgroup(r, frozenset([r.zero()]))


def bracket_subgroups(r: FiniteLieRing, a: Subgroup, b: Subgroup) -> Subgroup:
    # bi-additivity: brackets of generators generate
    return generate(r, (r.bracket(x, y) for x in a.generators() for y in b.generators()))


def is_subring(r: FiniteLieRing, s: Subgroup) -> bool:
    return bracket_subgroups(r, s, s) <= s


def is_ideal(r: FiniteLieRing, s: Subgroup, within: Subgroup | None = None) -> bool:
    outer = whole(r) if within is None else within
    return bracket_subgroups(r, outer, s) <= s


def subring_generated(r: FiniteLieRing, gens: Iterable[Elt]) -> Subgroup:
    s = generate(r, gens)
    while True:
        nxt = s + bracket_subgroups(r, s, s)
        if nxt == s:
            return s
        s = nxt


def centralizer_exhaustive(r: FiniteLieRing, xs: Iterable[Elt]) -> Subgroup:
    xs = [r.normalize(x) for x in xs]
    zero = r.zero()
    return Subgroup(r, frozenset(y for y in enumerate_elements(r) if all(r.bracket(y, x) == zero for x in xs)))


def normalizer_exhaustive(r: FiniteLieRing, a: Subgroup) -> Subgroup:
    gens = a.generators()
    return Subgroup(r, frozenset(y for y in enumerate_elements(r) if all(r.bracket(y, g) in a for g in gens)))


def relative_centralizer(r: FiniteLieRing, a: Subgroup, target: Subgroup) -> Subgroup:
    gens = a.generators()
    return Subgroup(r, frozenset(y for y in enumerate_elements(r) if all(r.bracket(y, g) in target for g in gens)))


def all_subgroups(r: FiniteLieRing, cap: int = SUBGROUP_CAP) -> list[Subgroup]:
    """Every additive subgroup, by closing under one extra generator at a time."""
    elems = list(enumerate_elements(r))
    seen = {trivial(r).elements}
    frontier = [trivial(r)]
    while frontier:
        nxt = []
        for s in frontier:
            for x in elems:
                if x in s.elements:
                    continue
                t = generate(r, s.generators() + [x])
                if t.elements not in seen:
                    seen.add(t.elements)
                    nxt.append(t)
                    if len(seen) > cap:
                        raise OrderCapExceeded(f"more than {cap} subgroups")
        frontier = nxt
    return sorted((Subgroup(r, e) for e in seen), key=lambda s: (s.order, s.key()))


def all_subrings(r: FiniteLieRing) -> list[Subgroup]:
    return [s for s in all_subgroups(r) if is_subring(r, s)]


def all_ideals(r: FiniteLieRing) -> list[Subgroup]:
    return [s for s in all_subgroups(r) if is_ideal(r, s)]


# -- series ------------------------------------------------------------------


def lower_central_series(r: FiniteLieRing, h: Subgroup | None = None) -> list[Subgroup]:
    h = whole(r) if h is None else h
    terms = [h]
    while True:
        nxt = bracket_subgroups(r, h, terms[-1])
        if nxt == terms[-1]:
            return terms
        terms.append(nxt)


def derived_series(r: FiniteLieRing) -> list[Subgroup]:
    terms = [whole(r)]
    while True:
        nxt = bracket_subgroups(r, terms[-1], terms[-1])
        if nxt == terms[-1]:
            return terms
        terms.append(nxt)


def is_nilpotent_subring(r: FiniteLieRing, h: Subgroup) -> bool:
    return lower_central_series(r, h)[-1].order == 1


def iterated_centralizers(r: FiniteLieRing, a: Subgroup, n: int, h: Subgroup | None = None) -> list[Subgroup]:
    """``C^0 .. C^n`` of ``A/H``: ``C^{m+1}`` normalizes ``C^0 .. C^m`` and
    brackets A into ``C^m``."""
    terms = [trivial(r) if h is None else h]
    norms: list[Subgroup] = []
    for _ in range(n):
        norms.append(normalizer_exhaustive(r, terms[-1]))
        t = relative_centralizer(r, a, terms[-1])
        for nz in norms:
            t = t & nz
        terms.append(t)
    return terms


def upper_central_series(r: FiniteLieRing) -> list[Subgroup]:
    terms = [trivial(r)]
    full = whole(r)
    while True:
        nxt = relative_centralizer(r, full, terms[-1])
        if nxt == terms[-1]:
            return terms
        terms.append(nxt)


def kernel_formula(r: FiniteLieRing, ideal: Subgroup, n: int) -> Subgroup:
    """``{x : [I,_n x] = 0}`` by expanding every word in generators of I."""
    gens = ideal.generators()
    zero = r.zero()

    def killed(x: Elt) -> bool:
        level = {x}
        for _ in range(n):
            level = {r.bracket(a, u) for a in gens for u in level} - {zero}
            if not level:
                return True
        return not (level - {zero})

    return Subgroup(r, frozenset(x for x in enumerate_elements(r) if killed(x)))


# -- lattice and Fitting -----------------------------------------------------


@dataclass
class CentralizerLattice:
    nodes: list
    covers: list  # (lower index, upper index) Hasse edges
    max_chain: int

    def to_json(self) -> dict:
        return {
            "nodes": [n.to_json() for n in self.nodes],
            "orders": [n.order for n in self.nodes],
            "covers": [list(e) for e in self.covers],
            "max_chain": self.max_chain,
        }


def centralizer_lattice(r: FiniteLieRing) -> CentralizerLattice:
    """All subgroups ``C(X)``, closed under intersection from the
    single-element centralizers."""
    elems = list(enumerate_elements(r))
    found = {whole(r).elements}
    for x in elems:
        found.add(centralizer_exhaustive(r, [x]).elements)
    changed = True
    while changed:
        changed = False
        cur = list(found)
        for a, b in itertools.combinations(cur, 2):
            c = a & b
            if c not in found:
                found.add(c)
                changed = True
    nodes = sorted((Subgroup(r, e) for e in found), key=lambda s: (s.order, s.key()))
    below = {i: [j for j in range(len(nodes)) if nodes[j] < nodes[i]] for i in range(len(nodes))}
    covers = []
    for i in range(len(nodes)):
        for j in below[i]:
            if not any(nodes[j] < nodes[k] for k in below[i]):
                covers.append((j, i))
    longest = [1] * len(nodes)
    for i in range(len(nodes)):  # nodes are sorted by order
        for j in below[i]:
            longest[i] = max(longest[i], longest[j] + 1)
    return CentralizerLattice(nodes, covers, max(longest) if nodes else 0)


def fitting_bruteforce(r: FiniteLieRing) -> Subgroup:
    """Sum of every nilpotent ideal, checked to be a nilpotent ideal itself."""
    nil = [s for s in all_ideals(r) if is_nilpotent_subring(r, s)]
    total = generate(r, (g for s in nil for g in s.generators()))
    if not is_ideal(r, total) or not is_nilpotent_subring(r, total):
        raise AssertionError(f"sum of nilpotent ideals of {r.name} is not a nilpotent ideal")
    return total


def finite_witness(r: FiniteLieRing, zi: Subgroup, target: Subgroup) -> list[Elt]:
    """Greedy ``x_1..x_k`` with ``{y : [y, x_t] in Z_i for all t} = target``.

    Each round adds the element giving the smallest relative centralizer
    (first in lexicographic order on ties).
    """
    elems = list(enumerate_elements(r))
    current = whole(r)
    chosen: list[Elt] = []
    while current != target:
        best = None
        for x in elems:
            cand = current & Subgroup(r, frozenset(y for y in current.elements if r.bracket(y, x) in zi))
            if cand.order < current.order and (best is None or cand.order < best[1].order):
                best = (x, cand)
        if best is None:
            raise AssertionError("no finite witness found")
        chosen.append(best[0])
        current = best[1]
    return chosen


# -- the exhaustive suite ----------------------------------------------------


@dataclass
class SuiteReport:
    ring: str
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    zf_witnesses: list = field(default_factory=list)
    sampled: bool = False
    notes: list = field(default_factory=list)

    def tick(self, name: str, ok: bool, witness=None):
        self.checks[name] = self.checks.get(name, 0) + 1
        if not ok:
            self.violations.append({"check": name, "counterexample": witness})

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "ring": self.ring,
            "checks": dict(sorted(self.checks.items())),
            "passed": self.passed,
            "violations": self.violations,
            "zf_witnesses": [[list(x) for x in w] for w in self.zf_witnesses],
            "sampled": self.sampled,
            "notes": self.notes,
        }


def _g(s: Subgroup) -> list:
    return s.to_json()


def verify_paper_suite(r: FiniteLieRing, seed: int = 0, bound: int = 4) -> SuiteReport:
    """Every centralizer statement checked exhaustively over all subrings
    (a seeded sample of 2**10 when there are more)."""
    rep = SuiteReport(r.name)
    rep.notes.append("at finite order locally nilpotent means nilpotent; the solubility theorem is only witnessed")
    subrings = all_subrings(r)
    if len(subrings) > SUBRING_SAMPLE_THRESHOLD:
        subrings = random.Random(seed).sample(subrings, SUBRING_SAMPLE_THRESHOLD)
        rep.sampled = True
    full = whole(r)
    ideals = [s for s in subrings if is_ideal(r, s)]
    towers = {}
    for h in subrings:
        tower = iterated_centralizers(r, h, bound)
        towers[h.elements] = tower
        nh = normalizer_exhaustive(r, h)
        lcs = lower_central_series(r, h)
        for n, t in enumerate(tower):
            rep.tick("iterated-centralizer-is-subring", is_subring(r, t), {"H": _g(h), "n": n})
            rep.tick("normalizer-tower", nh <= normalizer_exhaustive(r, t), {"H": _g(h), "n": n})
        for j in range(1, bound + 1):
            for i in range(j):
                hi = lcs[min(i, len(lcs) - 1)]
                ok = bracket_subgroups(r, hi, tower[j]) <= tower[j - i - 1]
                rep.tick("lemma-cent-it-1", ok, {"H": _g(h), "i": i, "j": j})
    for ideal in ideals:
        tower = towers[ideal.elements]
        for n, t in enumerate(tower):
            rep.tick("iterated-centralizer-of-ideal-is-ideal", is_ideal(r, t), {"I": _g(ideal), "n": n})
            if n:
                rep.tick("keystone", t == kernel_formula(r, ideal, n), {"I": _g(ideal), "n": n})
    for k in subrings:
        lk = lower_central_series(r, k)
        for h in subrings:
            if not k <= h:
                continue
            lh = lower_central_series(r, h)
            for j in range(1, bound + 1):
                premise = all(
                    centralizer_exhaustive(r, lk[min(i, len(lk) - 1)].generators())
                    == centralizer_exhaustive(r, lh[min(i, len(lh) - 1)].generators())
                    for i in range(j)
                )
                if premise:
                    ok = towers[k.elements][j] == towers[h.elements][j]
                    rep.tick("lemma-cent-it-2", ok, {"K": _g(k), "H": _g(h), "j": j})
    # three subgroups lemma over triples of subrings with H = the center
    z = relative_centralizer(r, full, trivial(r))
    rng = random.Random(seed)
    triples = [tuple(rng.choice(subrings) for _ in range(3)) for _ in range(min(200, len(subrings) ** 3))]
    for x, y, zz in triples:
        b = lambda u, v: bracket_subgroups(r, u, v)  # noqa: E731
        for h in (z, trivial(r), full):
            if b(b(x, y), zz) <= h and b(b(y, zz), x) <= h:
                rep.tick("three-subgroups", b(b(zz, x), y) <= h, {"X": _g(x), "Y": _g(y), "Z": _g(zz), "H": _g(h)})
    # Z_f: finite witnesses for every quotient center
    ucs = upper_central_series(r)
    for zi, znext in zip(ucs, ucs[1:]):
        wit = finite_witness(r, zi, znext)
        rep.zf_witnesses.append(wit)
        rep.tick("zf-witness-length", len(wit) <= r.rank, {"Z_i": _g(zi), "witness": [list(x) for x in wit]})
    rep.tick("iterated-centers-match-upper-series", iterated_centralizers(r, full, len(ucs) - 1) == ucs, None)
    fit = fitting_bruteforce(r)
    rep.tick("fitting-nilpotent-ideal", is_ideal(r, fit) and is_nilpotent_subring(r, fit), {"F": _g(fit)})
    rep.tick("finite-mc", centralizer_lattice(r).max_chain <= len(_prime_factors(r.order)) + 1, None)
    return rep


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- random rings ------------------------------------------------------------


def random_ring(factors: Sequence[int], rng: random.Random, max_tries: int = 10_000, name: str = "random") -> FiniteLieRing:
    """Random generator table, antisymmetrized, rejection-sampled on Jacobi."""
    factors = tuple(factors)
    r = len(factors)
    for _ in range(max_tries):
        table = {}
        for i in range(r):
            for j in range(i + 1, r):
                g = gcd(factors[i], factors[j])
                # entries killed by g: multiples of m_k / gcd(m_k, g) in coordinate k
                v = tuple(rng.randrange(gcd(m, g)) * (m // gcd(m, g)) for m in factors)
                table[i, j] = v
        try:
            return FiniteLieRing(factors, table, name)
        except RingError:
            continue
    raise RingError(f"no Jacobi-valid table found for {factors}")
