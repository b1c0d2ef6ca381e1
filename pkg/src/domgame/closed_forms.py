"""Closed-form values for complete, complete bipartite, star and complete
split graphs, and disjoint unions of them.

Each evaluator returns :class:`Value` or :class:`NotCovered`. Inputs outside
the proven ranges are never extrapolated; callers fall back to the search
engine for those.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from domgame.cgt import GameStore, GameValue, default_store
from domgame.families import (
    Complete,
    CompleteBipartite,
    CompleteSplit,
    Cycle,
    Path,
    Star,
    Union,
)
from domgame.graphs import Color, colors_of
from domgame.named import (
    DownTower,
    Dyadic,
    Integer,
    Nimber,
    UpMultiple,
    UpTower,
    classify,
    named_to_game,
)


class Reason(enum.Enum):
    OPEN_BIPARTITE = "OPEN_BIPARTITE"
    RANGE = "RANGE"
    UNKNOWN_COLORING = "UNKNOWN_COLORING"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Value:
    game: GameValue
    named: object

    covered = True


@dataclass(frozen=True)
class NotCovered:
    reason: Reason
    detail: str = ""

    covered = False


ClosedFormResult = Value | NotCovered


def _value(game: GameValue) -> Value:
    return Value(game, classify(game))


def _named(v, store) -> Value:
    return _value(named_to_game(v, store))


def _up_multiple(n: int, star: bool):
    # n.^ and n.^* with the n = 0 members folded in
    if n == 0:
        return Nimber(1) if star else Integer(0)
    return UpMultiple(n, star)


def _up_star_tower(n: int):
    return UpMultiple(1, True) if n == 1 else UpTower(n, True)


def _down_star_tower(n: int):
    from domgame.named import DownMultiple

    return DownMultiple(1, True) if n == 1 else DownTower(n, True)


def complete_value(colors, store: GameStore | None = None) -> ClosedFormResult:
    store = store or default_store()
    cs = colors_of(colors)
    if not cs:
        raise ValueError("complete graph needs at least one vertex")
    if all(c is Color.A for c in cs):
        return _named(Integer(1), store)
    if all(c is Color.B for c in cs):
        return _named(Integer(-1), store)
    return _named(Nimber(1), store)


def bipartite_value(s_colors, t_colors, store: GameStore | None = None) -> ClosedFormResult:
    store = store or default_store()
    S, T = colors_of(s_colors), colors_of(t_colors)
    if len(S) < 2 or len(T) < 2:
        return NotCovered(Reason.RANGE, "both parts need at least two vertices")
    sset, tset = set(S), set(T)
    both = sset | tset
    top = max(len(S), len(T))
    if both == {Color.A}:
        return _named(Integer(top), store)
    if both == {Color.B}:
        return _named(Integer(-top), store)

    def mixed(part):
        return Color.C in part or {Color.A, Color.B} <= part

    if mixed(sset) and mixed(tset):
        return _named(Integer(0), store)
    if {frozenset(sset), frozenset(tset)} == {frozenset({Color.A}), frozenset({Color.B})}:
        return _named(Integer(0), store)
    return NotCovered(Reason.OPEN_BIPARTITE, f"no closed form for S={_cs(S)}, T={_cs(T)}")


def _cs(cs):
    return "".join(c.value for c in cs)


def _center_a_no_c(a: int, b: int):
    # star with A center and only A/B leaves
    if b < a:
        return Integer(a - b)
    if a >= 1:
        return Dyadic(1, b - a + 1)
    return _up_multiple(b - 1, b % 2 == 1)


def _center_c_no_c(a: int, b: int):
    if a == b:
        return Nimber(2)
    if abs(a - b) == 1:
        return Nimber(1)
    if a >= b + 2:
        return _up_star_tower(a - b - 1)
    return _down_star_tower(b - a - 1)


def star_value(center, a: int, b: int, c: int, store: GameStore | None = None) -> ClosedFormResult:
    """Value of the star with the given center color and leaf counts."""
    store = store or default_store()
    center = Color(center) if isinstance(center, str) else center
    if min(a, b, c) < 0:
        raise ValueError("leaf counts must be nonnegative")
    if center is Color.B:
        mirror = star_value(Color.A, b, a, c, store)
        if isinstance(mirror, NotCovered):
            return mirror
        return _value(store.neg(mirror.game))

    if center is Color.A:
        if c == 0:
            if a + b < 2:
                return NotCovered(Reason.RANGE, "colored center without C leaves needs n >= 2")
            return _named(_center_a_no_c(a, b), store)
        if a == 0:
            n = b + c
            return _named(_up_multiple(n - 1, n % 2 == 1), store)
        j = named_to_game(_center_a_no_c(a, b), store)
        if c % 2:
            j = store.add(j, store.star)
        return _value(j)

    if a + b == 0:
        if c == 0:
            return NotCovered(Reason.RANGE, "a star needs at least one leaf")
        return _named(Nimber(1 if c % 2 else 2), store)
    if c % 2 == 0:
        return _named(_center_c_no_c(a, b), store)
    if a == b:
        return _named(Nimber(1), store)
    if abs(a - b) == 1:
        return _named(Nimber(2), store)
    tower = named_to_game(_center_c_no_c(a, b), store)
    opts = [store.zero, tower]
    return _value(store.make_game(opts, opts))


def reduced_center(clique_colors) -> Color:
    """Color of the single vertex a clique collapses to in a complete split graph."""
    cs = set(colors_of(clique_colors))
    if cs == {Color.A}:
        return Color.A
    if cs == {Color.B}:
        return Color.B
    return Color.C


def split_value(clique_colors, independent_colors, store: GameStore | None = None) -> ClosedFormResult:
    K, S = colors_of(clique_colors), colors_of(independent_colors)
    if not K:
        raise ValueError("the clique must be nonempty")
    if not S:
        return complete_value(K, store)
    counts = Counter(S)
    return star_value(
        reduced_center(K), counts[Color.A], counts[Color.B], counts[Color.C], store
    )


def evaluate(spec, store: GameStore | None = None) -> ClosedFormResult:
    """Closed-form value of a family spec, summing over unions."""
    store = store or default_store()
    match spec:
        case Complete(cs):
            return complete_value(cs, store) if cs else _value(store.zero)
        case CompleteBipartite(S, T):
            if len(S) < len(T):
                S, T = T, S
            if not T:
                return _value(store.sum(complete_value([x], store).game for x in S))
            if len(T) == 1:
                return evaluate(CompleteSplit(T, S), store)
            return bipartite_value(S, T, store)
        case Star(center, a, b, c):
            if a + b + c <= 1:
                leaves = (Color.A,) * a + (Color.B,) * b + (Color.C,) * c
                return complete_value((center,) + leaves, store)
            return star_value(center, a, b, c, store)
        case CompleteSplit(K, S):
            if not K:
                return _value(store.sum(complete_value([x], store).game for x in S))
            if len(S) <= 1:
                # a clique plus at most one vertex joined to all of it
                return complete_value(K + S, store)
            return split_value(K, S, store)
        case Path(n, cs) | Cycle(n, cs):
            if isinstance(spec, Cycle) and n == 3 or n <= 2:
                return complete_value(cs, store)
            if isinstance(spec, Path) and n == 3:
                leaves = Counter((cs[0], cs[2]))
                return star_value(cs[1], leaves[Color.A], leaves[Color.B], leaves[Color.C], store)
            return NotCovered(Reason.UNKNOWN_COLORING, "no closed form for paths or cycles")
        case Union(parts):
            total = store.zero
            for p in parts:
                r = evaluate(p, store)
                if isinstance(r, NotCovered):
                    return r
                total = store.add(total, r.game)
            return _value(total)
    raise TypeError(f"not a family spec: {spec!r}")
