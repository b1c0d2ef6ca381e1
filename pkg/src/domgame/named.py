"""Named value families: integers, dyadics, nimbers, up multiples and towers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from domgame.cgt import GameStore, GameValue, default_store

# Integers and dyadic numerators live in the signed 62-bit range.
INT_MIN = -(2**61)
INT_MAX = 2**61 - 1
MAX_EXPONENT = 61


class ParameterOverflowError(OverflowError):
    pass


@dataclass(frozen=True)
class Integer:
    n: int

    def __str__(self):
        return str(self.n)


@dataclass(frozen=True)
class Dyadic:
    numerator: int
    exponent: int

    def __post_init__(self):
        if self.exponent < 1 or self.numerator % 2 == 0:
            raise ValueError(f"Dyadic({self.numerator}, {self.exponent}) is not in lowest terms")

    def __str__(self):
        return f"{self.numerator}/{2**self.exponent}"

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, 2**self.exponent)


@dataclass(frozen=True)
class Nimber:
    k: int

    def __str__(self):
        if self.k == 0:
            return "0"
        return "*" if self.k == 1 else f"*{self.k}"


def _suffix(star):
    return "*" if star else ""


@dataclass(frozen=True)
class UpMultiple:
    n: int
    star: bool = False

    def __str__(self):
        return f"{self.n if self.n > 1 else ''}^{_suffix(self.star)}"


@dataclass(frozen=True)
class DownMultiple:
    n: int
    star: bool = False

    def __str__(self):
        return f"{self.n if self.n > 1 else ''}v{_suffix(self.star)}"


@dataclass(frozen=True)
class UpTower:
    n: int
    star: bool = False

    def __str__(self):
        return f"^[{self.n}]{_suffix(self.star)}"


@dataclass(frozen=True)
class DownTower:
    n: int
    star: bool = False

    def __str__(self):
        return f"v[{self.n}]{_suffix(self.star)}"


@dataclass(frozen=True, eq=False)
class Other:
    game: GameValue

    def __eq__(self, other):
        return isinstance(other, Other) and other.game is self.game

    def __hash__(self):
        return hash(("Other", self.game.id))

    def __str__(self):
        from domgame.notation import format_value

        return format_value(self.game)


NamedValue = Integer | Dyadic | Nimber | UpMultiple | DownMultiple | UpTower | DownTower | Other


def named_from_fraction(x: Fraction):
    if x.denominator == 1:
        return Integer(int(x))
    return Dyadic(x.numerator, x.denominator.bit_length() - 1)


def _check_int(n):
    if not INT_MIN <= n <= INT_MAX:
        raise ParameterOverflowError(f"{n} is outside the signed 62-bit range")


def named_to_game(v, store: GameStore | None = None) -> GameValue:
    """Build the canonical game of a named family member."""
    store = store or default_store()
    if isinstance(v, Other):
        raise ValueError("Other carries its own game; nothing to construct")
    cached = store._named.get(v)
    if cached is not None:
        return cached
    match v:
        case Integer(n):
            _check_int(n)
            g = store.integer(n)
        case Dyadic(p, q):
            if q > MAX_EXPONENT:
                raise ParameterOverflowError(f"2^{q} exceeds the supported denominator range")
            _check_int(p)
            g = _dyadic(store, Fraction(p, 2**q))
        case Nimber(k):
            _check_int(k)
            if k < 0:
                raise ValueError("nimber index must be nonnegative")
            g = store.nimber(k)
        case UpMultiple(n, star):
            _positive(n)
            g = store.zero
            for _ in range(n):
                g = store.add(g, store.up)
            if star:
                g = store.add(g, store.star)
        case DownMultiple(n, star):
            g = store.neg(named_to_game(UpMultiple(n, star), store))
        case UpTower(n, star):
            _positive(n)
            g = store.up
            for _ in range(n - 1):
                g = store.make_game([g], [store.star])
            if star:
                g = store.add(g, store.star)
        case DownTower(n, star):
            g = store.neg(named_to_game(UpTower(n, star), store))
        case _:
            raise TypeError(f"not a named value: {v!r}")
    store._named[v] = g
    return g


def _positive(n):
    if n < 1:
        raise ValueError("multiples and towers start at 1")
    _check_int(n)


def _dyadic(store, x: Fraction) -> GameValue:
    if x.denominator == 1:
        return store.integer(int(x))
    key = ("dyadic", x)
    g = store._named.get(key)
    if g is None:
        step = Fraction(1, x.denominator)
        g = store.make_game([_dyadic(store, x - step)], [_dyadic(store, x + step)])
        store._named[key] = g
    return g


def classify(g: GameValue):
    """Name ``g`` if it belongs to one of the supported families."""
    store = g.store
    x = store.number_value(g)
    if x is not None:
        return named_from_fraction(x)
    k = store.nimber_value(g)
    if k is not None:
        return Nimber(k)
    bound = g.birthday + 1
    for cls in (UpMultiple, DownMultiple):
        for n in range(1, bound + 1):
            for star in (False, True):
                if named_to_game(cls(n, star), store) is g:
                    return cls(n, star)
    for cls in (UpTower, DownTower):
        for n in range(2, bound + 1):
            for star in (False, True):
                if named_to_game(cls(n, star), store) is g:
                    return cls(n, star)
    return Other(g)
