"""The bundled definition files."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .fileformat import DefinitionFile, parse


def names() -> list[str]:
    files = resources.files("lieforge") / "corpus_data"
    return sorted(p.name[: -len(".lie")] for p in files.iterdir() if p.name.endswith(".lie"))


def text(name: str) -> str:
    return (resources.files("lieforge") / "corpus_data" / f"{name}.lie").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def definition(name: str) -> DefinitionFile:
    return parse(text(name))


def load(name: str):
    return definition(name).build()


def algebras(characteristic: int | None = None) -> list:
    out = []
    for n in names():
        d = definition(n)
        if d.kind == "algebra" and (characteristic is None or d.characteristic == characteristic):
            out.append(d.build())
    return out


def rings() -> list:
    return [definition(n).build() for n in names() if definition(n).kind == "ring"]
