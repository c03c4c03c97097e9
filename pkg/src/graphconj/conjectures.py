"""Inequality conjectures between invariants over property-filtered corpora.

Every candidate is normalized to ``lhs <= slope * rhs + intercept`` with the
target invariant on one side.  Upper bounds put the target on the left;
lower bounds put it on the right.  Candidates come from a finite rational
grid, must hold on every graph meeting their hypothesis, are moved to the
weakest hypothesis the corpus still supports, ranked by touch number, and
finally thinned by a significance filter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

from . import invariants as inv
from .graph import (
    Graph,
    is_bipartite,
    is_claw_free,
    is_connected,
    is_tree,
    is_triangle_free,
    regularity,
)
from .invariants import InvariantId

# -- hypotheses -------------------------------------------------------------------


@dataclass(frozen=True)
class Hypothesis:
    name: str
    test: Callable[[Graph], bool]
    implies: tuple[str, ...]  # immediately weaker hypotheses


def _connected_and(pred: Callable[[Graph], bool]) -> Callable[[Graph], bool]:
    return lambda G: is_connected(G) and pred(G)


HYPOTHESES: dict[str, Hypothesis] = {
    h.name: h
    for h in [
        Hypothesis("none", lambda G: True, ()),
        Hypothesis("connected", is_connected, ("none",)),
        Hypothesis("triangle_free", _connected_and(is_triangle_free), ("connected",)),
        Hypothesis("bipartite", _connected_and(is_bipartite), ("triangle_free",)),
        Hypothesis("tree", is_tree, ("bipartite",)),
        Hypothesis("claw_free", _connected_and(is_claw_free), ("connected",)),
        Hypothesis("regular_2", _connected_and(lambda G: regularity(G) == 2), ("claw_free",)),
        Hypothesis("cubic", _connected_and(lambda G: regularity(G) == 3), ("connected",)),
        Hypothesis("regular_4", _connected_and(lambda G: regularity(G) == 4), ("connected",)),
    ]
}


def weaker(name: str) -> list[str]:
    """All hypotheses implied by ``name`` (excluding itself), in catalog order."""
    seen: set[str] = set()
    stack = list(HYPOTHESES[name].implies)
    while stack:
        h = stack.pop()
        if h not in seen:
            seen.add(h)
            stack.extend(HYPOTHESES[h].implies)
    return [h for h in HYPOTHESES if h in seen]


def _depth(name: str) -> int:
    return len(weaker(name))


# -- configuration ----------------------------------------------------------------


def default_slopes() -> tuple[Fraction, ...]:
    return tuple(sorted({Fraction(a, b) for a in range(1, 9) for b in range(1, 5) if gcd(a, b) == 1}))


DEFAULT_INVARIANTS = (
    inv.ALPHA,
    inv.MU,
    inv.GAMMA,
    inv.GAMMA_T,
    inv.gamma_k(2),
    inv.GAMMA_C,
    inv.GAMMA_I,
    inv.GAMMA_E,
    inv.alpha_k(1),
)


@dataclass(frozen=True)
class EngineConfig:
    slopes: tuple[Fraction, ...] = field(default_factory=default_slopes)
    intercepts: tuple[int, ...] = (-2, -1, 0, 1, 2)
    invariants: tuple[InvariantId, ...] = DEFAULT_INVARIANTS
    hypotheses: tuple[str, ...] = tuple(HYPOTHESES)
    max_output: int = 50
    min_touch: int = 1

    def __post_init__(self) -> None:
        if not self.slopes or not self.intercepts:
            raise ValueError("slope and intercept grids must be nonempty")
        if any(s <= 0 for s in self.slopes):
            raise ValueError("slopes must be positive")
        unknown = [h for h in self.hypotheses if h not in HYPOTHESES]
        if unknown:
            raise ValueError(f"unknown hypotheses {unknown}")


# -- conjectures --------------------------------------------------------------------


@dataclass(frozen=True)
class Conjecture:
    hypothesis: str
    lhs: InvariantId
    slope: Fraction
    intercept: Fraction
    rhs: InvariantId
    target: InvariantId
    touch: int
    support: int
    tight_examples: tuple[str, ...] = ()

    @property
    def upper(self) -> bool:
        """True when the target sits on the left, i.e. this bounds it from above."""
        return self.lhs == self.target

    def inequality(self) -> str:
        slope = "" if self.slope == 1 else f"{self.slope}*"
        text = f"{self.lhs} <= {slope}{self.rhs}"
        if self.intercept > 0:
            text += f" + {self.intercept}"
        elif self.intercept < 0:
            text += f" - {-self.intercept}"
        return text

    def __str__(self) -> str:
        if self.hypothesis == "none":
            return self.inequality()
        return f"{self.hypothesis}: {self.inequality()}"

    def key(self) -> tuple:
        return (self.hypothesis, self.lhs, self.slope, self.intercept, self.rhs)

    def complexity(self) -> tuple[int, int]:
        return (self.slope.numerator + self.slope.denominator, abs(self.intercept.numerator))

    def rank_key(self) -> tuple:
        return (-self.touch, self.complexity(), str(self))

    def to_line(self) -> str:
        return "\t".join(
            [self.hypothesis, self.inequality(), f"touch={self.touch}", f"support={self.support}",
             ",".join(self.tight_examples)]
        )


class ValueTable:
    """Invariant values and hypothesis flags for a fixed corpus.

    ``lookup(G, invariant)`` may be supplied to route values through a cache.
    """

    def __init__(self, corpus: Sequence[Graph], invariants: Iterable[InvariantId],
                 lookup: Callable[[Graph, InvariantId], int] | None = None):
        if not corpus:
            raise ValueError("empty corpus")
        self.graphs = list(corpus)
        self.keys = [G.graph6 for G in self.graphs]
        lookup = lookup or inv.compute
        self.values: dict[InvariantId, list[int | None]] = {}
        for x in invariants:
            self.values[x] = [lookup(G, x) if inv.is_defined(G, x) else None for G in self.graphs]
        self._members: dict[str, list[int]] = {}

    def members(self, hypothesis: str) -> list[int]:
        if hypothesis not in self._members:
            test = HYPOTHESES[hypothesis].test
            self._members[hypothesis] = [i for i, G in enumerate(self.graphs) if test(G)]
        return self._members[hypothesis]


def _holds(table: ValueTable, rows: list[int], lhs: InvariantId, rhs: InvariantId,
           slope: Fraction, intercept: Fraction) -> bool | None:
    """True/False on the rows, or None if some value is undefined there."""
    L, R = table.values[lhs], table.values[rhs]
    ok = True
    for i in rows:
        if L[i] is None or R[i] is None:
            return None
        if L[i] > slope * R[i] + intercept:
            ok = False
    return ok


def _make(table: ValueTable, hypothesis: str, lhs: InvariantId, slope: Fraction,
          intercept: Fraction, rhs: InvariantId, target: InvariantId) -> Conjecture:
    rows = table.members(hypothesis)
    L, R = table.values[lhs], table.values[rhs]
    tight = [i for i in rows if L[i] == slope * R[i] + intercept]
    return Conjecture(hypothesis, lhs, slope, intercept, rhs, target, len(tight), len(rows),
                      tuple(table.keys[i] for i in tight[:3]))


def minimize_hypothesis(conj: Conjecture, table: ValueTable) -> Conjecture:
    """Move to the weakest catalog hypothesis on which the inequality still holds.

    A weaker hypothesis is only adopted when it covers strictly more corpus
    graphs; the largest such support wins, ties going to the weaker one.
    """
    base = len(table.members(conj.hypothesis))
    options = [
        h for h in weaker(conj.hypothesis)
        if len(table.members(h)) > base
        and _holds(table, table.members(h), conj.lhs, conj.rhs, conj.slope, conj.intercept)
    ]
    if not options:
        return conj
    best = max(options, key=lambda h: (len(table.members(h)), -_depth(h)))
    return _make(table, best, conj.lhs, conj.slope, conj.intercept, conj.rhs, conj.target)


def _candidates(table: ValueTable, target: InvariantId, config: EngineConfig) -> list[Conjecture]:
    out = []
    for h in config.hypotheses:
        rows = table.members(h)
        if not rows:
            continue
        for other in config.invariants:
            if other == target:
                continue
            for lhs, rhs in ((target, other), (other, target)):
                L, R = table.values[lhs], table.values[rhs]
                if any(L[i] is None or R[i] is None for i in rows):
                    continue
                for slope in config.slopes:
                    # smallest grid intercept that makes the bound hold on every row
                    need = max(L[i] - slope * R[i] for i in rows)
                    fits = [c for c in config.intercepts if c >= need]
                    if not fits:
                        continue
                    conj = _make(table, h, lhs, slope, Fraction(min(fits)), rhs, target)
                    if conj.touch >= config.min_touch:
                        out.append(conj)
    return out


def _target_bound(conj: Conjecture, table: ValueTable, i: int) -> Fraction:
    """The bound this conjecture puts on the target at corpus row i."""
    if conj.upper:
        return conj.slope * table.values[conj.rhs][i] + conj.intercept
    return (table.values[conj.lhs][i] - conj.intercept) / conj.slope


def _better(conj: Conjecture, a: Fraction, b: Fraction) -> bool:
    return a < b if conj.upper else a > b


def significance_filter(conjectures: Sequence[Conjecture], table: ValueTable) -> list[Conjecture]:
    """Keep a conjecture only if it is strictly the best bound on some corpus graph.

    Conjectures are visited in the given (rank) order and compared with the
    ones already kept in the same direction.  A second pass then drops, lowest
    rank first, any kept conjecture that later ones have tied everywhere, so
    each survivor is the unique tightest bound somewhere.
    """
    kept: list[Conjecture] = []
    for conj in conjectures:
        if _uniquely_best_somewhere(conj, kept, table):
            kept.append(conj)

    changed = True
    while changed:
        changed = False
        for conj in reversed(kept):
            if not _uniquely_best_somewhere(conj, kept, table):
                kept.remove(conj)
                changed = True
                break
    return kept


def _uniquely_best_somewhere(conj: Conjecture, kept: list[Conjecture], table: ValueTable) -> bool:
    rivals = [k for k in kept if k is not conj and k.upper == conj.upper]
    member = {k.hypothesis: set(table.members(k.hypothesis)) for k in rivals}
    for i in table.members(conj.hypothesis):
        mine = _target_bound(conj, table, i)
        if all(_better(conj, mine, _target_bound(k, table, i))
               for k in rivals if i in member[k.hypothesis]):
            return True
    return False


def generate(corpus: Sequence[Graph], target: InvariantId, config: EngineConfig | None = None,
             table: ValueTable | None = None) -> list[Conjecture]:
    """Ranked conjectures bounding ``target``, each true on every graph meeting its hypothesis."""
    config = config or EngineConfig()
    if target not in config.invariants:
        raise ValueError(f"target {target} is not in the invariant catalog")
    if table is None:
        table = ValueTable(corpus, config.invariants)
    found: dict[tuple, Conjecture] = {}
    for conj in _candidates(table, target, config):
        conj = minimize_hypothesis(conj, table)
        found.setdefault(conj.key(), conj)
    # one hypothesis per inequality and support set: the most specific name
    by_support: dict[tuple, Conjecture] = {}
    for conj in found.values():
        ident = (conj.lhs, conj.slope, conj.intercept, conj.rhs, tuple(table.members(conj.hypothesis)))
        prev = by_support.get(ident)
        if prev is None or (_depth(conj.hypothesis), conj.hypothesis) > (_depth(prev.hypothesis), prev.hypothesis):
            by_support[ident] = conj
    ranked = sorted(by_support.values(), key=Conjecture.rank_key)
    return significance_filter(ranked, table)[: config.max_output]
