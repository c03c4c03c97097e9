"""Corpus files, bundled corpora and the invariant cache."""

from __future__ import annotations

import logging
from importlib import resources
from pathlib import Path
from typing import Iterable, TextIO

from . import invariants as inv
from .graph import Graph, GraphError, parse_graph6
from .invariants import InvariantId

log = logging.getLogger(__name__)


class CorpusError(ValueError):
    pass


def read_graph6_lines(lines: Iterable[str], source: str = "<input>") -> list[Graph]:
    """Parse newline-separated graph6, skipping blanks and '#' comments.

    Repeated graph6 strings are dropped with a warning; a malformed line
    aborts with its line number.
    """
    graphs: list[Graph] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            G = parse_graph6(line)
        except GraphError as exc:
            raise CorpusError(f"{source}:{lineno}: {exc}") from exc
        key = line[len(">>graph6<<"):] if line.startswith(">>graph6<<") else line
        if key in seen:
            log.warning("%s:%d: duplicate graph %s skipped", source, lineno, key)
            continue
        seen.add(key)
        graphs.append(G)
    if not graphs:
        raise CorpusError(f"{source}: empty corpus")
    return graphs


def ingest(path: str | Path) -> list[Graph]:
    path = Path(path)
    with path.open() as fh:
        return read_graph6_lines(fh, str(path))


def ingest_stream(fh: TextIO, source: str = "<stdin>") -> list[Graph]:
    return read_graph6_lines(fh, source)


# -- bundled corpora -----------------------------------------------------------------

_FILES = {
    "connected_le7": ("connected_le7.g6",),
    "connected_8": ("connected_8.g6",),
    "connected_le8": ("connected_le7.g6", "connected_8.g6"),
    "cubic_le14": ("cubic_le14.g6",),
    "trees_le15_maxdeg3": ("trees_le15_maxdeg3.g6",),
    "slice_9_10": ("slice_9_10.g6",),
}
_ORDER_CAPS = {"cubic_le10": ("cubic_le14", 10), "cubic_le12": ("cubic_le14", 12),
               "trees_le10_maxdeg3": ("trees_le15_maxdeg3", 10)}

BUILTIN = tuple(_FILES) + tuple(_ORDER_CAPS)


def builtin(name: str) -> list[Graph]:
    """A bundled corpus: connected graphs n <= 8, connected cubic graphs n <= 14, trees, ..."""
    if name in _ORDER_CAPS:
        base, cap = _ORDER_CAPS[name]
        return [G for G in builtin(base) if G.n <= cap]
    if name not in _FILES:
        raise CorpusError(f"unknown bundled corpus {name!r}; choose from {', '.join(BUILTIN)}")
    graphs: list[Graph] = []
    for fname in _FILES[name]:
        text = resources.files("graphconj").joinpath("data", fname).read_text()
        graphs += read_graph6_lines(text.splitlines(), fname)
    return graphs


def load(spec: str) -> list[Graph]:
    """``builtin:NAME`` or a file path."""
    if spec.startswith("builtin:"):
        return builtin(spec[len("builtin:"):])
    return ingest(spec)


# -- invariant cache ---------------------------------------------------------------------


class CorpusCache:
    """Append-only TSV cache of ``graph6<TAB>invariant[:k]<TAB>value`` rows.

    ``computed`` counts cache misses that ran a solver.
    """

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else None
        self.rows: dict[tuple[str, str], int] = {}
        self.computed = 0
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        with self.path.open() as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 3:
                    raise CorpusError(f"{self.path}:{lineno}: expected 3 tab-separated fields")
                g6, key, val = parts
                InvariantId.parse(key)
                value = int(val)
                old = self.rows.get((g6, key))
                if old is not None and old != value:
                    raise CorpusError(f"{self.path}:{lineno}: conflicting value for {g6} {key}")
                self.rows[(g6, key)] = value

    def __len__(self) -> int:
        return len(self.rows)

    def get(self, G: Graph, invariant: InvariantId) -> int | None:
        return self.rows.get((G.graph6, invariant.key))

    def get_or_compute(self, G: Graph, invariant: InvariantId) -> int:
        key = (G.graph6, invariant.key)
        if key in self.rows:
            return self.rows[key]
        value = inv.compute(G, invariant)
        self.computed += 1
        self.rows[key] = value
        if self.path is not None:
            with self.path.open("a") as fh:
                fh.write(f"{key[0]}\t{key[1]}\t{value}\n")
        return value


def cache_get_or_compute(cache: CorpusCache, G: Graph, invariant: InvariantId) -> int:
    return cache.get_or_compute(G, invariant)
