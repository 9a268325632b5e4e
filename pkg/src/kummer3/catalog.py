"""The sixteen Z-classes of finite non-cyclic subgroups of SL(3, Z).

Generator matrices are row-major and listed in the published order; the
same data ships as JSON in `data/catalog.json` (generator-file format).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import InputError, UnknownGroup
from .intlinalg import Mat, as_mat
from .matgroup import FinMatGroup, IsoType, closure


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    generators: tuple[Mat, Mat]

    @property
    def iso(self) -> IsoType:
        return IsoType(self.name.split("(")[0])

    def group(self) -> FinMatGroup:
        return catalog_group(self.name)


@lru_cache(maxsize=None)
def catalog() -> tuple[CatalogEntry, ...]:
    text = resources.files("kummer3").joinpath("data/catalog.json").read_text()
    entries = []
    for item in json.loads(text):
        gens = tuple(as_mat(g) for g in item["generators"])
        entries.append(CatalogEntry(item["name"], gens))
    return tuple(entries)


def names() -> list[str]:
    return [e.name for e in catalog()]


def entry(name: str) -> CatalogEntry:
    key = normalize_name(name)
    for e in catalog():
        if e.name == key:
            return e
    raise UnknownGroup(f"unknown group {name!r}; known: {', '.join(names())}")


def normalize_name(name: str) -> str:
    """Accept 'S4(2)', 's4(2)', 'S4_2', 'D12' and similar spellings."""
    s = name.strip().upper().replace(" ", "")
    if "_" in s:
        base, idx = s.split("_", 1)
        s = f"{base}({idx})"
    return s


@lru_cache(maxsize=None)
def catalog_group(name: str) -> FinMatGroup:
    return closure(entry(name).generators)


def load_generator_file(path: str | Path) -> tuple[str, list[Mat]]:
    """Read a generator file: {"name": str, "generators": [[[..],[..],[..]], ...]}."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {p}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{p}: JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict) or "generators" not in data:
        raise InputError(f"{p}: expected an object with 'name' and 'generators'")
    gens = data["generators"]
    if not isinstance(gens, list):
        raise InputError(f"{p}: 'generators' must be a list")
    out = []
    for i, g in enumerate(gens):
        ok = (
            isinstance(g, list) and len(g) == 3
            and all(isinstance(r, list) and len(r) == 3 and all(isinstance(x, int) and not isinstance(x, bool) for x in r) for r in g)
        )
        if not ok:
            raise InputError(f"{p}: generator {i} is not a 3x3 integer array")
        out.append(as_mat(g))
    return str(data.get("name", p.stem)), out
