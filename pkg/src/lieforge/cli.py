"""``lieforge``: validate definitions, analyze them, run check suites.

Exit codes: 0 all checks pass, 1 a violation was found, 2 usage or parse
error.  Reports are JSON with sorted keys; ``--no-timing`` drops the only
non-deterministic field.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__, corpus
from . import finring as fr
from .exactlin import Subspace
from .fileformat import DefinitionError, DefinitionFile, parse
from .finring import FiniteLieRing, OrderCapExceeded
from .radicals import (
    baer_consistency,
    engel_check,
    fitting_ideal,
    fitting_nilpotent_certificate,
    quotient_fitting_dim,
)
from .structure import (
    center,
    centralizer,
    derived_series,
    is_nilpotent,
    is_solvable,
    iterated_centralizer_tower,
    lower_central_series,
    upper_central_series,
    zf_witnesses,
)
from .suites import SUITES, Target, run_suite

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _space(s: Subspace) -> dict:
    return {"dim": s.dim, "basis": [[str(a) for a in row] for row in s.basis]}


def _group(g: fr.Subgroup) -> dict:
    return {"order": g.order, "generators": g.to_json()}


def _load(path: str) -> tuple[DefinitionFile, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except UnicodeDecodeError:
        raise UsageError(f"{path} is not UTF-8 text") from None
    return parse(text), hashlib.sha256(text.encode("utf-8")).hexdigest()


def _target(d: DefinitionFile) -> Target:
    obj = d.build()
    if isinstance(obj, FiniteLieRing):
        return Target(d.name, ring=obj)
    return Target(d.name, algebra=obj, reps=d.representations(obj))


def _envelope(command: str, **fields) -> dict:
    return {"schema_version": SCHEMA_VERSION, "tool": {"name": "lieforge", "version": __version__}, "command": command, **fields}


def _emit(report: dict, args, started: float) -> None:
    if not getattr(args, "no_timing", False):
        report["timing_seconds"] = round(time.perf_counter() - started, 3)
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    path = getattr(args, "json", None)
    if path:
        Path(path).write_text(text, encoding="utf-8")
        print(render(report))
    else:
        sys.stdout.write(text)


def render(report: dict) -> str:
    """Short human summary of a report; reads only the JSON."""
    lines = []
    for entry in report.get("targets", []):
        status = "PASS" if entry.get("passed", True) else "FAIL"
        lines.append(f"{status} {entry['name']}")
        for c in entry.get("checks", []):
            mark = "ok " if c["passed"] else "BAD"
            na = f" (n/a {c['not_applicable']})" if c["not_applicable"] else ""
            lines.append(f"  {mark} {c['name']}: {c['checked']} checked{na}")
    if "analysis" in report:
        for key in sorted(report["analysis"]):
            lines.append(f"{key}: written")
    return "\n".join(lines) or "ok"


# -- analyze -----------------------------------------------------------------


def _series(s) -> dict:
    return {"dims": s.dims, "terms": [_space(t) for t in s.terms]}


def analyze_algebra(L, series: bool, cents: bool, radicals: bool) -> dict:
    out: dict = {"name": L.name, "dim": L.dim, "field": str(L.field)}
    if series:
        out["series"] = {
            "lower_central": _series(lower_central_series(L)),
            "derived": _series(derived_series(L)),
            "upper_central": _series(upper_central_series(L)),
            "nilpotency_class": is_nilpotent(L),
            "derived_length": is_solvable(L),
        }
    if cents:
        ucs = upper_central_series(L)
        out["centralizers"] = {
            "center": _space(center(L)),
            "of_basis_vectors": [_space(centralizer(L, [e.coords]).space) for e in L.basis()],
            "iterated_centers": [_space(t.space) for t in iterated_centralizer_tower(L, L.full(), None, len(ucs) - 1)],
            "zf_witnesses": [[[str(a) for a in w.coords] for w in wit] for wit in zf_witnesses(L)],
        }
    if radicals:
        if L.field.characteristic:
            out["radicals"] = {"skipped": "the trace method needs characteristic 0"}
        else:
            F = fitting_ideal(L).space
            out["radicals"] = {
                "fitting": _space(F),
                "fitting_of_quotient_dim": quotient_fitting_dim(L),
                "certificate": fitting_nilpotent_certificate(L).to_json(),
                "engel": engel_check(L).to_json(),
                "baer": baer_consistency(L, samples=20, seed=0).to_json(),
            }
    return out


def analyze_ring(r: FiniteLieRing, series: bool, cents: bool, radicals: bool) -> dict:
    out: dict = {"name": r.name, "factors": list(r.factors), "order": r.order}
    if series:
        out["series"] = {
            "lower_central": [_group(g) for g in fr.lower_central_series(r)],
            "derived": [_group(g) for g in fr.derived_series(r)],
            "upper_central": [_group(g) for g in fr.upper_central_series(r)],
        }
    if cents:
        lat = fr.centralizer_lattice(r)
        out["centralizers"] = {"lattice": lat.to_json(), "center": _group(fr.relative_centralizer(r, fr.whole(r), fr.trivial(r)))}
    if radicals:
        out["radicals"] = {"fitting": _group(fr.fitting_bruteforce(r))}
    return out


def cmd_analyze(args) -> int:
    started = time.perf_counter()
    d, digest = _load(args.file)
    everything = not (args.series or args.centralizers or args.radicals)
    flags = (args.series or everything, args.centralizers or everything, args.radicals or everything)
    t = _target(d)
    body = analyze_ring(t.ring, *flags) if t.ring is not None else analyze_algebra(t.algebra, *flags)
    _emit(_envelope("analyze", input={"file": Path(args.file).name, "sha256": digest}, analysis=body), args, started)
    return 0


# -- check / validate / corpus -----------------------------------------------


def _check_target(t: Target, suite: str, seed: int, samples: int) -> dict:
    reports = run_suite(suite, t, seed, samples)
    checks = [r.to_json() for r in reports]
    return {"name": t.name, "passed": all(c["passed"] for c in checks), "checks": checks}


def cmd_check(args) -> int:
    started = time.perf_counter()
    if args.corpus == bool(args.file):
        raise UsageError("give exactly one of FILE or --corpus")
    if args.corpus:
        targets = [(n, _target(corpus.definition(n)), None) for n in corpus.names()]
    else:
        d, digest = _load(args.file)
        targets = [(d.name, _target(d), digest)]
    entries = []
    for name, t, digest in targets:
        entry = _check_target(t, args.suite, args.seed, args.samples)
        if digest:
            entry["sha256"] = digest
        entries.append(entry)
    report = _envelope("check", suite=args.suite, seed=args.seed, samples=args.samples, targets=entries)
    report["passed"] = all(e["passed"] for e in entries)
    _emit(report, args, started)
    return 0 if report["passed"] else 1


def cmd_validate(args) -> int:
    d, digest = _load(args.file)
    summary = {"kind": d.kind, "name": d.name, "dim": d.dim, "sha256": digest}
    if d.kind == "algebra":
        summary["field"] = str(d.field)
        summary["representations"] = [r.name for r in d.reps]
    else:
        summary["factors"] = list(d.factors)
    print(json.dumps({"valid": True, **summary}, sort_keys=True))
    return 0


def cmd_corpus(args) -> int:
    if args.action == "list":
        for n in corpus.names():
            d = corpus.definition(n)
            where = f"factors {','.join(map(str, d.factors))}" if d.kind == "ring" else f"over {d.field} dim {d.dim}"
            print(f"{n:18} {d.kind:8} {where}")
        return 0
    if not args.name:
        raise UsageError("corpus show needs a NAME")
    if args.name not in corpus.names():
        raise UsageError(f"no corpus entry {args.name!r}")
    sys.stdout.write(corpus.text(args.name))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lieforge", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"lieforge {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="parse and validate a definition file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", help="series, centralizers and radicals of one definition")
    a.add_argument("file")
    a.add_argument("--series", action="store_true")
    a.add_argument("--centralizers", action="store_true")
    a.add_argument("--radicals", action="store_true")
    a.add_argument("--json", metavar="PATH")
    a.add_argument("--no-timing", action="store_true")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("check", help="run verification suites")
    c.add_argument("file", nargs="?")
    c.add_argument("--corpus", action="store_true", help="run on every bundled definition")
    c.add_argument("--suite", choices=SUITES + ("all",), default="all")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int, default=50)
    c.add_argument("--json", metavar="PATH")
    c.add_argument("--no-timing", action="store_true")
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("corpus", help="bundled definitions")
    k.add_argument("action", choices=("list", "show"))
    k.add_argument("name", nargs="?")
    k.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DefinitionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (UsageError, OrderCapExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
