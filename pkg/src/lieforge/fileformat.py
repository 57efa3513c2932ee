"""Line-oriented definition files for algebras, rings and representations.

::

    # comments run to end of line
    algebra h3 over Q dim 3          # or: over Fp:5
    [1,2] = 3                        # [e1,e2] = e3
    [1,3] = 1/2*1 - 2*3

    rep V on dim 2
    phi 1 = [[0,1],[0,0]]

    ring heis2 factors 2,2,2
    [1,2] = 3

Indices are 1-based.  A bracket right-hand side is a sum of ``coeff*k``
terms (``k`` alone means coefficient 1, ``0`` means zero).  ``[j,i]`` is
filled in by antisymmetry; giving both with inconsistent values is an
error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .constructions import InvalidRepresentation, Representation
from .exactlin import GF, QQ, Field, Matrix
from .finring import FiniteLieRing, RingError
from .liecore import LieAlgebra, LieAlgebraError, NotAlternating


class DefinitionError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line, self.column = line, column
        loc = f"line {line}" + (f", column {column}" if column else "") if line else "definition"
        super().__init__(f"{loc}: {message}")


_ALGEBRA = re.compile(r"^algebra\s+(\S+)\s+over\s+(Q|Fp:(\d+))\s+dim\s+(\d+)$")
_RING = re.compile(r"^ring\s+(\S+)\s+factors\s+(\d+(?:\s*,\s*\d+)*)$")
_REP = re.compile(r"^rep\s+(\S+)\s+on\s+dim\s+(\d+)$")
_PHI = re.compile(r"^phi\s+(\d+)\s*=\s*(.+)$")
_BRACKET = re.compile(r"^\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*(.+)$")
_TERM = re.compile(r"^(?:(-?\d+(?:/\d+)?)\s*\*\s*)?(\d+)$")


@dataclass
class RepBlock:
    name: str
    dim: int
    phi: dict = field(default_factory=dict)  # 0-based generator -> rows of Fractions/ints
    line: int = 0


@dataclass
class DefinitionFile:
    kind: str  # "algebra" | "ring"
    name: str
    dim: int
    characteristic: int = 0  # algebras
    factors: tuple = ()  # rings
    brackets: dict = field(default_factory=dict)  # (i, j) with i < j -> {k: coeff}
    reps: list = field(default_factory=list)

    @property
    def field(self) -> Field:
        return GF(self.characteristic) if self.characteristic else QQ

    def build(self):
        if self.kind == "ring":
            table = {(i, j): _ring_vector(v, self.dim) for (i, j), v in self.brackets.items()}
            return FiniteLieRing(self.factors, table, self.name)
        return LieAlgebra.from_brackets(self.field, self.dim, self.brackets, self.name)

    def representations(self, algebra: LieAlgebra | None = None) -> list[Representation]:
        L = self.build() if algebra is None else algebra
        out = []
        for block in self.reps:
            mats = []
            for i in range(L.dim):
                rows = block.phi.get(i)
                mats.append(Matrix.zeros(L.field, block.dim, block.dim) if rows is None else Matrix.from_rows(L.field, rows, block.dim))
            out.append(Representation(L, block.dim, tuple(mats), block.name))
        return out


def _ring_vector(coeffs: dict, r: int) -> tuple:
    v = [0] * r
    for k, a in coeffs.items():
        v[k] += int(a)
    return tuple(v)


def _parse_rhs(text: str, dim: int, lineno: int, column: int, integral: bool) -> dict:
    out: dict[int, Fraction] = {}
    s = text.replace(" ", "").replace("\t", "")
    if s == "0":
        return out
    if not s:
        raise DefinitionError("empty right-hand side", lineno, column)
    if s[0] not in "+-":
        s = "+" + s
    for m in re.finditer(r"([+-])([^+-]+)", s):
        sign, body = m.group(1), m.group(2)
        tm = _TERM.match(body)
        if not tm:
            raise DefinitionError(f"cannot parse term {body!r}", lineno, column + m.start())
        coeff = Fraction(tm.group(1)) if tm.group(1) else Fraction(1)
        if integral and coeff.denominator != 1:
            raise DefinitionError("ring coefficients must be integers", lineno, column + m.start())
        k = int(tm.group(2)) - 1
        if not 0 <= k < dim:
            raise DefinitionError(f"basis index {k + 1} out of range 1..{dim}", lineno, column + m.start())
        if sign == "-":
            coeff = -coeff
        out[k] = out.get(k, Fraction(0)) + coeff
    if "".join(m.group(0) for m in re.finditer(r"([+-])([^+-]+)", s)) != s:
        raise DefinitionError("malformed right-hand side", lineno, column)
    return {k: a for k, a in out.items() if a != 0}


def _parse_matrix(text: str, dim: int, lineno: int, column: int) -> list[list[Fraction]]:
    s = text.replace(" ", "")
    if not (s.startswith("[[") and s.endswith("]]")):
        raise DefinitionError("matrix literal must look like [[a,b],[c,d]]", lineno, column)
    rows = s[2:-2].split("],[")
    if len(rows) != dim:
        raise DefinitionError(f"expected {dim} rows, got {len(rows)}", lineno, column)
    out = []
    for row in rows:
        entries = row.split(",")
        if len(entries) != dim:
            raise DefinitionError(f"expected {dim} entries per row", lineno, column)
        try:
            out.append([Fraction(e) for e in entries])
        except ValueError:
            raise DefinitionError(f"bad matrix entry in {row!r}", lineno, column) from None
    return out


def _canonical(coeffs: dict, field_or_factors, kind: str) -> tuple:
    """Comparable form used to detect antisymmetry conflicts."""
    if kind == "ring":
        return tuple(sorted((k, int(a) % field_or_factors[k]) for k, a in coeffs.items() if int(a) % field_or_factors[k]))
    f = field_or_factors
    return tuple(sorted((k, f(a)) for k, a in coeffs.items() if f(a) != 0))


def parse(text: str) -> DefinitionFile:
    """Parse and validate a definition; raises DefinitionError."""
    header: DefinitionFile | None = None
    header_line = 0
    rep: RepBlock | None = None
    seen: dict[tuple[int, int], tuple[int, dict]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        column = len(raw) - len(raw.lstrip()) + 1
        if m := _ALGEBRA.match(line):
            if header is not None:
                raise DefinitionError("only one algebra or ring per file", lineno, column)
            p = int(m.group(3)) if m.group(3) else 0
            try:
                GF(p) if p else QQ
            except ValueError as e:
                raise DefinitionError(str(e), lineno, column) from None
            header = DefinitionFile("algebra", m.group(1), int(m.group(4)), characteristic=p)
            header_line = lineno
            continue
        if m := _RING.match(line):
            if header is not None:
                raise DefinitionError("only one algebra or ring per file", lineno, column)
            factors = tuple(int(x) for x in m.group(2).split(","))
            header = DefinitionFile("ring", m.group(1), len(factors), factors=factors)
            header_line = lineno
            continue
        if header is None:
            raise DefinitionError("expected an 'algebra' or 'ring' header", lineno, column)
        if m := _REP.match(line):
            if header.kind != "algebra":
                raise DefinitionError("representations need an algebra", lineno, column)
            rep = RepBlock(m.group(1), int(m.group(2)), line=lineno)
            header.reps.append(rep)
            continue
        if m := _PHI.match(line):
            if rep is None:
                raise DefinitionError("'phi' outside a rep block", lineno, column)
            i = int(m.group(1)) - 1
            if not 0 <= i < header.dim:
                raise DefinitionError(f"generator index {i + 1} out of range", lineno, column)
            if i in rep.phi:
                raise DefinitionError(f"phi {i + 1} given twice", lineno, column)
            rep.phi[i] = _parse_matrix(m.group(2), rep.dim, lineno, column + m.start(2))
            continue
        if m := _BRACKET.match(line):
            if rep is not None:
                raise DefinitionError("bracket lines must precede rep blocks", lineno, column)
            i, j = int(m.group(1)) - 1, int(m.group(2)) - 1
            for idx in (i, j):
                if not 0 <= idx < header.dim:
                    raise DefinitionError(f"basis index {idx + 1} out of range 1..{header.dim}", lineno, column)
            coeffs = _parse_rhs(m.group(3), header.dim, lineno, column + m.start(3), header.kind == "ring")
            canon_key = header.factors if header.kind == "ring" else header.field
            if i == j:
                if _canonical(coeffs, canon_key, header.kind):
                    if header.kind == "algebra":
                        err = NotAlternating(i)
                        raise DefinitionError(f"NotAlternating: {err}", lineno, column)
                    raise DefinitionError(f"[g{i + 1}, g{i + 1}] must be 0", lineno, column)
                continue
            key = (min(i, j), max(i, j))
            oriented = coeffs if i < j else {k: -a for k, a in coeffs.items()}
            if key in seen:
                prev_line, prev = seen[key]
                if _canonical(prev, canon_key, header.kind) != _canonical(oriented, canon_key, header.kind):
                    raise DefinitionError(
                        f"antisymmetry conflict with line {prev_line} for [{key[0] + 1},{key[1] + 1}]", lineno, column
                    )
                continue
            seen[key] = (lineno, oriented)
            continue
        raise DefinitionError(f"unrecognized line {line!r}", lineno, column)
    if header is None:
        raise DefinitionError("empty definition")
    header.brackets = {k: v for k, (_, v) in sorted(seen.items())}
    try:
        obj = header.build()
        if header.kind == "algebra":
            header.representations(obj)
    except (LieAlgebraError, RingError, InvalidRepresentation) as e:
        raise DefinitionError(f"{type(e).__name__}: {e}", header_line) from None
    return header


def _fmt_coeff(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def _fmt_rhs(coeffs: dict) -> str:
    terms = []
    for k in sorted(coeffs):
        a = Fraction(coeffs[k])
        if a == 0:
            continue
        mag = abs(a)
        body = f"{k + 1}" if mag == 1 else f"{_fmt_coeff(mag)}*{k + 1}"
        terms.append(("- " if a < 0 else "+ ") + body)
    if not terms:
        return "0"
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def serialize(d: DefinitionFile) -> str:
    lines = []
    if d.kind == "ring":
        lines.append(f"ring {d.name} factors {','.join(str(m) for m in d.factors)}")
    else:
        over = "Q" if d.characteristic == 0 else f"Fp:{d.characteristic}"
        lines.append(f"algebra {d.name} over {over} dim {d.dim}")
    for (i, j), coeffs in sorted(d.brackets.items()):
        if any(Fraction(a) != 0 for a in coeffs.values()):
            lines.append(f"[{i + 1},{j + 1}] = {_fmt_rhs(coeffs)}")
    for block in d.reps:
        lines.append(f"rep {block.name} on dim {block.dim}")
        for i in sorted(block.phi):
            rows = ",".join("[" + ",".join(_fmt_coeff(Fraction(a)) for a in row) + "]" for row in block.phi[i])
            lines.append(f"phi {i + 1} = [{rows}]")
    return "\n".join(lines) + "\n"


def definition_from_algebra(L: LieAlgebra) -> DefinitionFile:
    brackets = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            v = L.c[i][j]
            coeffs = {k: Fraction(a) for k, a in enumerate(v) if a != 0}
            if coeffs:
                brackets[i, j] = coeffs
    return DefinitionFile("algebra", L.name, L.dim, characteristic=L.field.characteristic, brackets=brackets)


def load(path) -> DefinitionFile:
    from pathlib import Path

    return parse(Path(path).read_text(encoding="utf-8"))
