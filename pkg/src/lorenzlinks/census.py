"""
Census ingestion and batch invariant reports.

The bundled census file lists the simplest hyperbolic knots together with a
Lorenz vector where one is known (107 of 112 rows) and "?" where the question
is open.  Reports combine the invariant table with the torus-detection
verdict; batch reporting may fan out over worker threads, but results are
always merged back in input order, and a failing entry never aborts the rest
of the batch.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .errors import ParseError
from .invariants import InvariantReport, invariant_report
from .lorenz import LorenzVector, format_vector, parse_vector
from .torus import TorusVerdict, is_torus

REPORT_SCHEMA = "lorenzlinks.report/1"


@dataclass(frozen=True)
class CensusEntry:
    name: str
    vector: Optional[LorenzVector]  # None for "?" rows
    warnings: tuple[str, ...] = ()

    @property
    def known(self) -> bool:
        return self.vector is not None


def builtin_census_path() -> Path:
    return Path(resources.files("lorenzlinks").joinpath("data/census.txt"))


def builtin_knotscape_names() -> tuple[str, ...]:
    text = resources.files("lorenzlinks").joinpath(
        "data/knotscape_lorenz_16.txt"
    ).read_text()
    return tuple(
        line.strip() for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


def load_census(path: Union[str, Path, None] = None) -> list[CensusEntry]:
    """
    Parse a census file: one "name<ws>vector|?" entry per line, "#" comments.

    Raises ParseError with the offending line number on malformed input;
    duplicate names are rejected.  Vectors written out of order are sorted,
    recording the warning on the entry.
    """
    file = Path(path) if path is not None else builtin_census_path()
    entries: list[CensusEntry] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(file.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise ParseError(f"{file.name}:{lineno}: expected 'name vector'")
        name, body = parts[0], parts[1].strip()
        if name in seen:
            raise ParseError(f"{file.name}:{lineno}: duplicate name {name!r}")
        seen.add(name)
        if body == "?":
            entries.append(CensusEntry(name, None))
            continue
        try:
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                vector = parse_vector(body)
        except ParseError as exc:
            raise ParseError(f"{file.name}:{lineno}: {exc}") from exc
        notes = tuple(str(w.message) for w in caught)
        entries.append(CensusEntry(name, vector, notes))
    return entries


@dataclass(frozen=True)
class Report:
    """Everything the toolkit can say about one vector."""

    name: str
    vector: Optional[LorenzVector]
    invariants: Optional[InvariantReport]
    torus: Optional[TorusVerdict]
    warnings: tuple[str, ...] = ()
    error: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "name": self.name,
            "vector": None if self.vector is None else format_vector(self.vector),
            "invariants": None if self.invariants is None else self.invariants.to_dict(),
            "torus": None if self.torus is None else str(self.torus),
            "warnings": list(self.warnings),
            "error": self.error,
        }


def report(
    vector: LorenzVector, name: str = "", notes: Iterable[str] = ()
) -> Report:
    return Report(
        name=name,
        vector=vector,
        invariants=invariant_report(vector),
        torus=is_torus(vector),
        warnings=tuple(notes),
    )


def _entry_report(entry: CensusEntry) -> Report:
    if entry.vector is None:
        return Report(
            name=entry.name,
            vector=None,
            invariants=None,
            torus=None,
            warnings=entry.warnings,
            error="vector unknown",
        )
    try:
        return report(entry.vector, entry.name, entry.warnings)
    except Exception as exc:  # reported inline, never aborts the batch
        return Report(
            name=entry.name,
            vector=entry.vector,
            invariants=None,
            torus=None,
            warnings=entry.warnings,
            error=f"{type(exc).__name__}: {exc}",
        )


def report_all(
    entries: Sequence[CensusEntry], workers: Optional[int] = None
) -> list[Report]:
    """Reports for every entry, in input order regardless of scheduling."""
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_entry_report, entries))
    return [_entry_report(entry) for entry in entries]
