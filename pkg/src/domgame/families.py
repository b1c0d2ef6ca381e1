"""Graph families and the family DSL.

DSL forms (colors are literal ``AAB`` or run-length ``A*3``, mixable as
``A*2BC*3``)::

    complete(colors=...)
    kst(S=...,T=...)
    star(center=X,a=..,b=..,c=..)
    split(K=...,S=...)
    path(n=..,colors=...)
    cycle(n=..,colors=...)
    union(spec,spec,...)

Vertex order is fixed: star center first, then A, B and C leaves; clique
before independent set; part S before part T.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from domgame.graphs import Color, ColoredGraph, colors_of, disjoint_union

MAX_FAMILY_VERTICES = 4096


class FamilyError(ValueError):
    pass


class FamilySyntaxError(FamilyError):
    pass


class SizeBoundError(FamilyError):
    pass


def _colors_str(cs) -> str:
    return "".join(c.value for c in cs)


@dataclass(frozen=True)
class Complete:
    colors: tuple[Color, ...]

    def __str__(self):
        return f"complete(colors={_colors_str(self.colors)})"


@dataclass(frozen=True)
class CompleteBipartite:
    s_colors: tuple[Color, ...]
    t_colors: tuple[Color, ...]

    def __str__(self):
        return f"kst(S={_colors_str(self.s_colors)},T={_colors_str(self.t_colors)})"


@dataclass(frozen=True)
class Star:
    center: Color
    a: int = 0
    b: int = 0
    c: int = 0

    def __str__(self):
        return f"star(center={self.center},a={self.a},b={self.b},c={self.c})"


@dataclass(frozen=True)
class CompleteSplit:
    clique_colors: tuple[Color, ...]
    independent_colors: tuple[Color, ...]

    def __str__(self):
        k, s = _colors_str(self.clique_colors), _colors_str(self.independent_colors)
        return f"split(K={k},S={s})"


@dataclass(frozen=True)
class Path:
    n: int
    colors: tuple[Color, ...]

    def __str__(self):
        return f"path(n={self.n},colors={_colors_str(self.colors)})"


@dataclass(frozen=True)
class Cycle:
    n: int
    colors: tuple[Color, ...]

    def __str__(self):
        return f"cycle(n={self.n},colors={_colors_str(self.colors)})"


@dataclass(frozen=True)
class Union:
    parts: tuple

    def __str__(self):
        return "union(" + ",".join(str(p) for p in self.parts) + ")"


FamilySpec = Complete | CompleteBipartite | Star | CompleteSplit | Path | Cycle | Union


def size(spec) -> int:
    match spec:
        case Complete(cs):
            return len(cs)
        case CompleteBipartite(s, t):
            return len(s) + len(t)
        case Star(_, a, b, c):
            return 1 + a + b + c
        case CompleteSplit(k, s):
            return len(k) + len(s)
        case Path(n, _) | Cycle(n, _):
            return n
        case Union(parts):
            return sum(size(p) for p in parts)
    raise TypeError(f"not a family spec: {spec!r}")


def validate(spec) -> None:
    match spec:
        case Star(_, a, b, c):
            if min(a, b, c) < 0:
                raise FamilyError("leaf counts must be nonnegative")
        case Path(n, cs):
            if n < 1 or len(cs) != n:
                raise FamilyError(f"path needs n >= 1 and {n} colors, got {len(cs)}")
        case Cycle(n, cs):
            if n < 3 or len(cs) != n:
                raise FamilyError(f"cycle needs n >= 3 and {n} colors, got {len(cs)}")
        case Union(parts):
            for p in parts:
                validate(p)
    n = size(spec)
    if n > MAX_FAMILY_VERTICES:
        raise SizeBoundError(f"{n} vertices exceeds the family bound {MAX_FAMILY_VERTICES}")


def build(spec) -> ColoredGraph:
    """Construct the colored graph of a family spec."""
    validate(spec)
    return _build(spec)


def _build(spec) -> ColoredGraph:
    match spec:
        case Complete(cs):
            n = len(cs)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
            return ColoredGraph.from_edges(cs, edges, [f"k{i + 1}" for i in range(n)])
        case CompleteBipartite(s, t):
            edges = [(u, len(s) + v) for u in range(len(s)) for v in range(len(t))]
            labels = [f"s{i + 1}" for i in range(len(s))] + [f"t{i + 1}" for i in range(len(t))]
            return ColoredGraph.from_edges(s + t, edges, labels)
        case Star(center, a, b, c):
            leaves = (Color.A,) * a + (Color.B,) * b + (Color.C,) * c
            edges = [(0, i + 1) for i in range(len(leaves))]
            labels = ["u"] + [f"l{i + 1}" for i in range(len(leaves))]
            return ColoredGraph.from_edges((center,) + leaves, edges, labels)
        case CompleteSplit(k, s):
            nk = len(k)
            edges = [(u, v) for u in range(nk) for v in range(u + 1, nk)]
            edges += [(u, nk + v) for u in range(nk) for v in range(len(s))]
            labels = [f"k{i + 1}" for i in range(nk)] + [f"s{i + 1}" for i in range(len(s))]
            return ColoredGraph.from_edges(k + s, edges, labels)
        case Path(n, cs):
            edges = [(i, i + 1) for i in range(n - 1)]
            return ColoredGraph.from_edges(cs, edges, [f"v{i + 1}" for i in range(n)])
        case Cycle(n, cs):
            edges = [(i, (i + 1) % n) for i in range(n)]
            return ColoredGraph.from_edges(cs, edges, [f"v{i + 1}" for i in range(n)])
        case Union(parts):
            graphs = []
            for i, p in enumerate(parts, 1):
                g = _build(p)
                graphs.append(
                    ColoredGraph(g.adjacency, g.colors, tuple(f"{i}.{x}" for x in g.labels))
                )
            return disjoint_union(graphs)
    raise TypeError(f"not a family spec: {spec!r}")


# -- DSL ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_]\w*)|(?P<num>\d+)|(?P<punct>[(),=*]))")
_COLOR_RUN = re.compile(r"([ABC])(?:\*(\d+))?")


def parse_colors(text: str) -> tuple[Color, ...]:
    """Expand a color string such as ``AAB``, ``C*7`` or ``A*2BC``."""
    out: list[Color] = []
    pos = 0
    while pos < len(text):
        m = _COLOR_RUN.match(text, pos)
        if not m:
            raise FamilySyntaxError(f"bad color string {text!r} at column {pos + 1}")
        count = int(m.group(2)) if m.group(2) is not None else 1
        if count > MAX_FAMILY_VERTICES or len(out) + count > MAX_FAMILY_VERTICES:
            raise SizeBoundError(f"color string {text!r} exceeds {MAX_FAMILY_VERTICES} vertices")
        out.extend([Color(m.group(1))] * count)
        pos = m.end()
    return tuple(out)


_SIGNATURES = {
    "complete": ("colors",),
    "kst": ("S", "T"),
    "star": ("center", "a", "b", "c"),
    "split": ("K", "S"),
    "path": ("n", "colors"),
    "cycle": ("n", "colors"),
}


def parse_family(text: str):
    """Parse the family DSL into a spec (validated, not built)."""
    pos = 0
    src = text.strip()

    def err(msg):
        return FamilySyntaxError(f"{msg} at column {pos + 1} in {text!r}")

    def expect(ch):
        nonlocal pos
        m = _TOKEN.match(src, pos)
        if not m or m.group("punct") != ch:
            raise err(f"expected {ch!r}")
        pos = m.end()

    def peek():
        m = _TOKEN.match(src, pos)
        return m.group("punct") if m else None

    def name():
        nonlocal pos
        m = _TOKEN.match(src, pos)
        if not m or not m.group("name"):
            raise err("expected a name")
        pos = m.end()
        return m.group("name")

    def raw_value():
        # everything up to the next ',' or ')' at this nesting level
        nonlocal pos
        while pos < len(src) and src[pos] == " ":
            pos += 1
        start = pos
        while pos < len(src) and src[pos] not in ",)":
            pos += 1
        return src[start:pos].strip()

    def count(key, s):
        if not s.isdigit():
            raise err(f"{key} must be a nonnegative integer, got {s!r}")
        n = int(s)
        if n > MAX_FAMILY_VERTICES:
            raise SizeBoundError(f"{key}={n} exceeds the family bound {MAX_FAMILY_VERTICES}")
        return n

    def spec():
        kind = name()
        expect("(")
        if kind == "union":
            parts = [spec()]
            while peek() == ",":
                expect(",")
                parts.append(spec())
            expect(")")
            return Union(tuple(parts))
        if kind not in _SIGNATURES:
            raise err(f"unknown family {kind!r}")
        args = {}
        if peek() != ")":
            while True:
                key = name()
                expect("=")
                if key in args:
                    raise err(f"duplicate argument {key!r}")
                args[key] = raw_value()
                if peek() == ",":
                    expect(",")
                    continue
                break
        expect(")")
        allowed = _SIGNATURES[kind]
        unknown = set(args) - set(allowed)
        if unknown:
            raise err(f"unknown argument(s) {sorted(unknown)} for {kind}")
        return make(kind, args)

    def make(kind, args):
        try:
            if kind == "complete":
                return Complete(parse_colors(args["colors"]))
            if kind == "kst":
                return CompleteBipartite(parse_colors(args["S"]), parse_colors(args["T"]))
            if kind == "split":
                return CompleteSplit(parse_colors(args["K"]), parse_colors(args["S"]))
            if kind == "star":
                center = args["center"]
                if center not in ("A", "B", "C"):
                    raise err(f"bad center color {center!r}")
                return Star(
                    Color(center),
                    *(count(k, args.get(k, "0")) for k in ("a", "b", "c")),
                )
            cls = Path if kind == "path" else Cycle
            cs = parse_colors(args["colors"])
            n = count("n", args["n"]) if "n" in args else len(cs)
            if len(cs) == 1 and n > 1:
                cs = cs * n
            return cls(n, cs)
        except KeyError as e:
            raise err(f"{kind} is missing argument {e.args[0]!r}") from None

    result = spec()
    if pos != len(src):
        raise err("trailing input")
    validate(result)
    return result
