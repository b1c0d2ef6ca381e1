"""Vertex-colored simple graphs and the edge-list file format."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Color(enum.Enum):
    A = "A"
    B = "B"
    C = "C"

    def __str__(self):
        return self.value

    def swapped(self) -> "Color":
        return {Color.A: Color.B, Color.B: Color.A, Color.C: Color.C}[self]


def colors_of(text) -> tuple[Color, ...]:
    """``"AAB"`` or an iterable of Color -> tuple of Color."""
    if isinstance(text, str):
        return tuple(Color(ch) for ch in text)
    return tuple(Color(c) if isinstance(c, str) else c for c in text)


@dataclass(frozen=True)
class ColoredGraph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the neighbor set of ``v`` as a bitmask. ``blocks``
    records the vertex ranges of the parts of a disjoint union.
    """

    adjacency: tuple[int, ...]
    colors: tuple[Color, ...]
    labels: tuple[str, ...] = ()
    blocks: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = len(self.adjacency)
        if len(self.colors) != n:
            raise ValueError("one color per vertex is required")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        elif len(self.labels) != n:
            raise ValueError("one label per vertex is required")
        full = (1 << n) - 1
        for v, nb in enumerate(self.adjacency):
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            m = nb
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
                m ^= low

    @classmethod
    def from_edges(cls, colors, edges, labels=()):
        colors = colors_of(colors)
        adj = [0] * len(colors)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(tuple(adj), colors, tuple(labels))

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    def __len__(self):
        return len(self.adjacency)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adjacency[v])

    def closed_neighborhood(self, v: int) -> int:
        return self.adjacency[v] | 1 << v

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(len(self)) for v in _bits(self.adjacency[u]) if u < v]

    def color_mask(self, *colors: Color) -> int:
        m = 0
        for v, c in enumerate(self.colors):
            if c in colors:
                m |= 1 << v
        return m

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def swap_colors(self) -> "ColoredGraph":
        """Exchange colors A and B (the Alice/Bob mirror)."""
        return ColoredGraph(
            self.adjacency, tuple(c.swapped() for c in self.colors), self.labels, self.blocks
        )

    def induced(self, vertices) -> "ColoredGraph":
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            m = 0
            for u in _bits(self.adjacency[v]):
                if u in pos:
                    m |= 1 << pos[u]
            adj.append(m)
        return ColoredGraph(
            tuple(adj), tuple(self.colors[v] for v in vs), tuple(self.labels[v] for v in vs)
        )


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def disjoint_union(graphs) -> ColoredGraph:
    adj, colors, labels, blocks = [], [], [], []
    offset = 0
    for g in graphs:
        adj.extend(nb << offset for nb in g.adjacency)
        colors.extend(g.colors)
        labels.extend(g.labels)
        blocks.append((offset, offset + len(g)))
        offset += len(g)
    return ColoredGraph(tuple(adj), tuple(colors), tuple(labels), tuple(blocks))


def component_vertex_sets(g: ColoredGraph) -> list[list[int]]:
    """Vertex lists of the connected components, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(len(g)):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adjacency[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(_bits(comp))
    return out


def components(g: ColoredGraph) -> list[ColoredGraph]:
    """Connected components as standalone graphs (labels carry the index map)."""
    return [g.induced(vs) for vs in component_vertex_sets(g)]


# -- edge-list format ---------------------------------------------------


class GraphFormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DuplicateVertexError(GraphFormatError):
    pass


class UnknownColorError(GraphFormatError):
    pass


class UndeclaredVertexError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


def parse_graph(text: str) -> ColoredGraph:
    labels: list[str] = []
    colors: list[Color] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen_edges: set[frozenset] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "v":
            if len(parts) != 3:
                raise GraphFormatError("expected 'v <label> <A|B|C>'", lineno)
            label, color = parts[1], parts[2]
            if label in index:
                raise DuplicateVertexError(f"duplicate vertex label {label!r}", lineno)
            if color not in ("A", "B", "C"):
                raise UnknownColorError(f"unknown color {color!r}", lineno)
            index[label] = len(labels)
            labels.append(label)
            colors.append(Color(color))
        elif kind == "e":
            if len(parts) != 3:
                raise GraphFormatError("expected 'e <label> <label>'", lineno)
            for label in parts[1:]:
                if label not in index:
                    raise UndeclaredVertexError(f"edge endpoint {label!r} is not declared", lineno)
            u, v = index[parts[1]], index[parts[2]]
            if u == v:
                raise SelfLoopError(f"self-loop at {parts[1]!r}", lineno)
            key = frozenset((u, v))
            if key in seen_edges:
                raise DuplicateEdgeError(f"duplicate edge {parts[1]}-{parts[2]}", lineno)
            seen_edges.add(key)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown record type {kind!r}", lineno)
    return ColoredGraph.from_edges(colors, edges, labels)


def format_graph(g: ColoredGraph) -> str:
    lines = [f"v {label} {color}" for label, color in zip(g.labels, g.colors)]
    lines += [f"e {g.labels[u]} {g.labels[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
