"""Normal partizan domination game on colored graphs.

A position is the colored graph plus the set of dominated vertices. Alice
selects A or C vertices, Bob selects B or C vertices; a vertex is playable
when its closed neighborhood still contains an undominated vertex.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from domgame import _core, _purecore
from domgame.cgt import GameStore, GameValue, Outcome, default_store
from domgame.graphs import Color, ColoredGraph, component_vertex_sets

DEFAULT_MAX_VERTICES = 22


class SearchBoundError(Exception):
    def __init__(self, n, bound):
        self.vertices = n
        self.bound = bound
        super().__init__(
            f"graph has {n} vertices, above the search bound of {bound} "
            "(raise it with --max-vertices)"
        )


class IllegalMoveError(ValueError):
    pass


class Player(enum.Enum):
    Alice = "Alice"
    Bob = "Bob"

    def __str__(self):
        return self.value

    @property
    def colors(self) -> tuple[Color, Color]:
        return (Color.A, Color.C) if self is Player.Alice else (Color.B, Color.C)

    @property
    def opponent(self) -> "Player":
        return Player.Bob if self is Player.Alice else Player.Alice

    @classmethod
    def parse(cls, text: str) -> "Player":
        for p in cls:
            if p.value.lower() == text.strip().lower():
                return p
        raise ValueError(f"unknown player {text!r}")


@dataclass(frozen=True)
class Position:
    graph: ColoredGraph
    dominated: int = 0

    def __post_init__(self):
        if self.dominated >> len(self.graph):
            raise ValueError("dominated set contains vertices outside the graph")

    @classmethod
    def initial(cls, graph: ColoredGraph, predominated=()) -> "Position":
        """Start position; ``predominated`` holds vertex indices or labels."""
        mask = 0
        for v in predominated:
            mask |= 1 << (graph.index_of(v) if isinstance(v, str) else v)
        return cls(graph, mask)

    @property
    def full(self) -> int:
        return (1 << len(self.graph)) - 1

    @property
    def is_terminal(self) -> bool:
        return self.dominated == self.full

    def dominated_set(self) -> frozenset[int]:
        return frozenset(v for v in range(len(self.graph)) if self.dominated >> v & 1)


def playable_vertices(p: Position, who: Player) -> frozenset[int]:
    g = p.graph
    undom = p.full & ~p.dominated
    return frozenset(
        v
        for v in range(len(g))
        if g.colors[v] in who.colors and g.closed_neighborhood(v) & undom
    )


def apply_move(p: Position, v: int, who: Player | None = None) -> Position:
    """Select ``v``; with ``who`` given, also check the color is allowed."""
    g = p.graph
    if not 0 <= v < len(g):
        raise IllegalMoveError(f"no vertex {v}")
    nb = g.closed_neighborhood(v)
    if not nb & ~p.dominated:
        raise IllegalMoveError(f"vertex {g.labels[v]} dominates nothing new")
    if who is not None and g.colors[v] not in who.colors:
        raise IllegalMoveError(f"{who} cannot select a {g.colors[v]} vertex")
    return Position(g, p.dominated | nb)


def _kernel_args(g: ColoredGraph):
    closed = [g.closed_neighborhood(v) for v in range(len(g))]
    return closed, g.color_mask(Color.A, Color.C), g.color_mask(Color.B, Color.C)


def _backend(n):
    return _core if n <= _core.MAX_VERTICES else _purecore


class Solver:
    """Memoized value search on one colored graph.

    The transposition table is keyed by the dominated bitset alone: with the
    graph and coloring fixed, it determines every future of the game.
    """

    def __init__(self, graph: ColoredGraph, store: GameStore | None = None,
                 max_vertices: int = DEFAULT_MAX_VERTICES):
        n = len(graph)
        if n > max_vertices:
            raise SearchBoundError(n, max_vertices)
        self.graph = graph
        self.store = store or default_store()
        self.table: dict[int, GameValue] = {}
        self._args = _kernel_args(graph)
        self._core = _backend(n)

    def value(self, dominated: int = 0) -> GameValue:
        hit = self.table.get(dominated)
        if hit is not None:
            return hit
        states, alice_moves, bob_moves = self._core.explore(*self._args, dominated)
        # children have strictly larger dominated sets: solve by descending size
        order = sorted(range(len(states)), key=lambda i: -states[i].bit_count())
        table = self.table
        make = self.store.make_game
        for i in order:
            s = states[i]
            if s in table:
                continue
            table[s] = make([table[x] for x in alice_moves[i]], [table[x] for x in bob_moves[i]])
        return table[dominated]


def game_value(p: Position, store: GameStore | None = None,
               max_vertices: int = DEFAULT_MAX_VERTICES) -> GameValue:
    """Canonical value of a position by exhaustive search."""
    return Solver(p.graph, store, max_vertices).value(p.dominated)


def wins_moving_first(p: Position, mover: Player,
                      max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    """Win/loss recursion without game values."""
    n = len(p.graph)
    if n > max_vertices:
        raise SearchBoundError(n, max_vertices)
    return _backend(n).wins(*_kernel_args(p.graph), p.dominated, mover is Player.Alice)


def winner(p: Position, first: Player, max_vertices: int = DEFAULT_MAX_VERTICES) -> Player:
    return first if wins_moving_first(p, first, max_vertices) else first.opponent


def outcome_by_search(p: Position, max_vertices: int = DEFAULT_MAX_VERTICES) -> Outcome:
    """Outcome class from the two winner searches alone."""
    alice_first = winner(p, Player.Alice, max_vertices)
    bob_first = winner(p, Player.Bob, max_vertices)
    if alice_first is bob_first:
        return Outcome.AliceAlways if alice_first is Player.Alice else Outcome.BobAlways
    if alice_first is Player.Alice:
        return Outcome.FirstPlayerWins
    return Outcome.SecondPlayerWins


def component_positions(p: Position) -> list[Position]:
    """Split a position into its connected components."""
    out = []
    for vs in component_vertex_sets(p.graph):
        sub = p.graph.induced(vs)
        dom = 0
        for i, v in enumerate(vs):
            if p.dominated >> v & 1:
                dom |= 1 << i
        out.append(Position(sub, dom))
    return out


def value_of_position(p: Position, store: GameStore | None = None,
                      max_vertices: int = DEFAULT_MAX_VERTICES) -> GameValue:
    """Sum of component values; only each component must fit the bound."""
    store = store or default_store()
    parts = [game_value(c, store, max_vertices) for c in component_positions(p)]
    return store.sum(parts)


def value_of_graph(g: ColoredGraph, store: GameStore | None = None,
                   max_vertices: int = DEFAULT_MAX_VERTICES) -> GameValue:
    return value_of_position(Position(g), store, max_vertices)
