"""Printing and parsing of game values.

Grammar of the notation::

    value   := atom | "{" [value ("," value)*] "|" [value ("," value)*] "}"
    atom    := integer | integer "/" power-of-two | "*" [k] | [n] ("^"|"v") ["*"]
             | ("^"|"v") "[" n "]" ["*"]
"""

from __future__ import annotations

import re

from domgame.cgt import GameStore, GameValue, default_store
from domgame.named import (
    Dyadic,
    DownMultiple,
    DownTower,
    Integer,
    Nimber,
    Other,
    UpMultiple,
    UpTower,
    classify,
    named_to_game,
)


def format_value(g: GameValue) -> str:
    named = classify(g)
    if not isinstance(named, Other):
        return str(named)
    left = ",".join(format_value(x) for x in g.left)
    right = ",".join(format_value(x) for x in g.right)
    return "{" + left + "|" + right + "}"


class NotationError(ValueError):
    pass


_ATOM = re.compile(
    r"""
    (?P<tower>(?P<tdir>[\^v])\[(?P<tn>\d+)\](?P<tstar>\*)?)
  | (?P<mult>(?P<mn>\d+)?(?P<mdir>[\^v])(?P<mstar>\*)?)
  | (?P<nim>\*(?P<nk>\d+)?)
  | (?P<num>-?\d+(?:/(?P<den>\d+))?)
    """,
    re.VERBOSE,
)


def _atom(m) -> object:
    if m.group("tower"):
        cls = UpTower if m.group("tdir") == "^" else DownTower
        n = int(m.group("tn"))
        star = bool(m.group("tstar"))
        if n == 1:
            cls = UpMultiple if cls is UpTower else DownMultiple
        return cls(n, star)
    if m.group("mult"):
        cls = UpMultiple if m.group("mdir") == "^" else DownMultiple
        return cls(int(m.group("mn") or 1), bool(m.group("mstar")))
    if m.group("nim"):
        return Nimber(int(m.group("nk") or 1))
    text = m.group("num")
    if m.group("den"):
        num, den = text.split("/")
        den = int(den)
        if den < 2 or den & (den - 1):
            raise NotationError(f"denominator of {text} is not a power of two")
        num = int(num)
        exp = den.bit_length() - 1
        while num % 2 == 0 and exp > 0:
            num //= 2
            exp -= 1
        return Integer(num) if exp == 0 else Dyadic(num, exp)
    return Integer(int(text))


def parse_value(text: str, store: GameStore | None = None) -> GameValue:
    """Parse value notation into a canonical game."""
    store = store or default_store()
    s = text
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    def value():
        nonlocal pos
        skip()
        if pos < len(s) and s[pos] == "{":
            pos += 1
            left = options("|")
            pos += 1
            right = options("}")
            pos += 1
            return store.make_game(left, right)
        m = _ATOM.match(s, pos)
        if not m or m.end() == pos:
            raise NotationError(f"unexpected input at column {pos + 1}: {text!r}")
        pos = m.end()
        return named_to_game(_atom(m), store)

    def options(stop):
        nonlocal pos
        out = []
        skip()
        if pos < len(s) and s[pos] == stop:
            return out
        while True:
            out.append(value())
            skip()
            if pos >= len(s):
                raise NotationError(f"unterminated braces in {text!r}")
            if s[pos] == stop:
                return out
            if s[pos] != ",":
                raise NotationError(f"expected ',' or {stop!r} at column {pos + 1}")
            pos += 1

    g = value()
    skip()
    if pos != len(s):
        raise NotationError(f"trailing input at column {pos + 1}: {text!r}")
    return g
