"""Short partizan game values in canonical form.

Every value lives in a :class:`GameStore`. The store interns canonical
forms, so two values from the same store are equal as games exactly when
they are the same Python object.
"""

from __future__ import annotations

import enum
import sys
from typing import Iterable


class KernelError(Exception):
    """Base class for resource errors raised by the kernel."""


class StoreCapacityError(KernelError):
    pass


class DepthLimitError(KernelError):
    pass


class StoreMismatchError(ValueError):
    pass


class Outcome(enum.Enum):
    AliceAlways = "AliceAlways"
    BobAlways = "BobAlways"
    FirstPlayerWins = "FirstPlayerWins"
    SecondPlayerWins = "SecondPlayerWins"

    def __str__(self):
        return self.value


class GameValue:
    """A canonical game ``{left | right}``.

    Instances are created only by a :class:`GameStore`. Option tuples are
    kept in print order: by birthday, then recursively by option lists.
    """

    __slots__ = ("store", "id", "left", "right", "birthday", "sort_key", "_number", "_nimber")

    def __init__(self, store, ident, left, right):
        self.store = store
        self.id = ident
        self.left = left
        self.right = right
        opts = left + right
        self.birthday = 1 + max(o.birthday for o in opts) if opts else 0
        self.sort_key = (
            self.birthday,
            tuple(o.sort_key for o in left),
            tuple(o.sort_key for o in right),
        )
        self._number = _UNSET
        self._nimber = _UNSET

    def __repr__(self):
        from domgame.notation import format_value

        return f"<GameValue {format_value(self)}>"

    def __str__(self):
        from domgame.notation import format_value

        return format_value(self)

    # identity equality and hashing are inherited from object; that is the
    # game equality because of interning.

    def __add__(self, other):
        return self.store.add(self, other)

    def __neg__(self):
        return self.store.neg(self)

    def __sub__(self, other):
        return self.store.add(self, self.store.neg(other))

    def __le__(self, other):
        return self.store.leq(self, other)

    def __ge__(self, other):
        return self.store.leq(other, self)

    def __lt__(self, other):
        return self is not other and self.store.leq(self, other)

    def __gt__(self, other):
        return self is not other and self.store.leq(other, self)

    def fuzzy(self, other) -> bool:
        """True when the two values are incomparable (``g || h``)."""
        return not self.store.leq(self, other) and not self.store.leq(other, self)

    @property
    def is_number(self) -> bool:
        return self.store.number_value(self) is not None


_UNSET = object()


class GameStore:
    """Interning store plus memo tables for one kernel context.

    A store is not thread safe. Use one store per thread, or freeze it
    (stop creating values) before sharing it for reads.
    """

    def __init__(self, max_values: int = 5_000_000, max_depth: int = 4000):
        self.max_values = max_values
        self.max_depth = max_depth
        # each level of the add/leq recursions costs a few interpreter frames
        want = 6 * max_depth + 2000
        if sys.getrecursionlimit() < want:
            sys.setrecursionlimit(want)
        self._table: dict[tuple, GameValue] = {}
        self._values: list[GameValue] = []
        self._leq: dict[tuple[int, int], bool] = {}
        self._add: dict[tuple[int, int], GameValue] = {}
        self._neg: dict[int, GameValue] = {}
        self._named: dict = {}
        self._depth = 0
        self.zero = self._intern((), ())
        self.star = self.make_game([self.zero], [self.zero])
        self.one = self.make_game([self.zero], [])
        self.up = self.make_game([self.zero], [self.star])

    def __len__(self):
        return len(self._values)

    # -- construction -------------------------------------------------

    def _intern(self, left, right) -> GameValue:
        key = (tuple(sorted(g.id for g in left)), tuple(sorted(g.id for g in right)))
        g = self._table.get(key)
        if g is None:
            if len(self._values) >= self.max_values:
                raise StoreCapacityError(f"store holds {self.max_values} values")
            left = tuple(sorted(left, key=_sort_key))
            right = tuple(sorted(right, key=_sort_key))
            g = GameValue(self, len(self._values), left, right)
            self._values.append(g)
            self._table[key] = g
        return g

    def _check(self, g):
        if not isinstance(g, GameValue):
            raise TypeError(f"expected GameValue, got {type(g).__name__}")
        if g.store is not self:
            raise StoreMismatchError("value belongs to a different store")

    def make_game(self, left: Iterable[GameValue], right: Iterable[GameValue]) -> GameValue:
        """Canonical form of ``{left | right}`` for canonical options."""
        L = set(left)
        R = set(right)
        for g in L | R:
            self._check(g)
        return self._canonical(L, R)

    def _canonical(self, L: set, R: set) -> GameValue:
        leq = self.leq
        while True:
            L = {x for x in L if not any(x is not y and leq(x, y) for y in L)}
            R = {x for x in R if not any(x is not y and leq(y, x) for y in R)}
            changed = False
            memo_le: dict[int, bool] = {}
            memo_ge: dict[int, bool] = {}

            newL = set()
            for x in L:
                for xr in x.right:
                    if self._le_form(xr, L, R, memo_le, memo_ge):
                        newL.update(xr.left)
                        changed = True
                        break
                else:
                    newL.add(x)
            newR = set()
            for x in R:
                for xl in x.left:
                    if self._ge_form(xl, L, R, memo_le, memo_ge):
                        newR.update(xl.right)
                        changed = True
                        break
                else:
                    newR.add(x)
            L, R = newL, newR
            if not changed:
                return self._intern(L, R)

    def _le_form(self, x, L, R, memo_le, memo_ge) -> bool:
        # x <= {L | R}, where the right-hand side need not be canonical
        r = memo_le.get(x.id)
        if r is None:
            r = True
            for gr in R:
                if self.leq(gr, x):
                    r = False
                    break
            if r:
                for xl in x.left:
                    if self._ge_form(xl, L, R, memo_le, memo_ge):
                        r = False
                        break
            memo_le[x.id] = r
        return r

    def _ge_form(self, y, L, R, memo_le, memo_ge) -> bool:
        # {L | R} <= y
        r = memo_ge.get(y.id)
        if r is None:
            r = True
            for gl in L:
                if self.leq(y, gl):
                    r = False
                    break
            if r:
                for yr in y.right:
                    if self._le_form(yr, L, R, memo_le, memo_ge):
                        r = False
                        break
            memo_ge[y.id] = r
        return r

    # -- order --------------------------------------------------------

    def leq(self, g: GameValue, h: GameValue) -> bool:
        if g is h:
            return True
        key = (g.id, h.id)
        r = self._leq.get(key)
        if r is None:
            if g.store is not self or h.store is not self:
                self._check(g)
                self._check(h)
            # g <= h unless some g^L >= h or some h^R <= g
            r = True
            for gl in g.left:
                if self.leq(h, gl):
                    r = False
                    break
            if r:
                for hr in h.right:
                    if self.leq(hr, g):
                        r = False
                        break
            self._leq[key] = r
        return r

    def eq(self, g: GameValue, h: GameValue) -> bool:
        self._check(g)
        self._check(h)
        return g is h

    # -- arithmetic ---------------------------------------------------

    def neg(self, g: GameValue) -> GameValue:
        r = self._neg.get(g.id)
        if r is None:
            self._check(g)
            r = self._intern(
                tuple(self.neg(x) for x in g.right), tuple(self.neg(x) for x in g.left)
            )
            self._neg[g.id] = r
            self._neg[r.id] = g
        return r

    def add(self, g: GameValue, h: GameValue) -> GameValue:
        if g is self.zero:
            return h
        if h is self.zero:
            return g
        key = (g.id, h.id) if g.id <= h.id else (h.id, g.id)
        r = self._add.get(key)
        if r is not None:
            return r
        self._check(g)
        self._check(h)
        self._depth += 1
        try:
            if self._depth > self.max_depth:
                raise DepthLimitError(f"sum recursion deeper than {self.max_depth}")
            L = [self.add(x, h) for x in g.left] + [self.add(g, x) for x in h.left]
            R = [self.add(x, h) for x in g.right] + [self.add(g, x) for x in h.right]
        except RecursionError:
            raise DepthLimitError("interpreter recursion limit reached during sum") from None
        finally:
            self._depth -= 1
        r = self._canonical(set(L), set(R))
        self._add[key] = r
        return r

    def sum(self, values: Iterable[GameValue]) -> GameValue:
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total

    def outcome(self, g: GameValue) -> Outcome:
        ge = self.leq(self.zero, g)
        le = self.leq(g, self.zero)
        if ge and le:
            return Outcome.SecondPlayerWins
        if ge:
            return Outcome.AliceAlways
        if le:
            return Outcome.BobAlways
        return Outcome.FirstPlayerWins

    # -- recognisers used by the classifier -----------------------------

    def number_value(self, g: GameValue):
        """The dyadic rational of a number-valued canonical game, else None."""
        from fractions import Fraction

        if g._number is not _UNSET:
            return g._number
        r = None
        if len(g.left) <= 1 and len(g.right) <= 1:
            lv = [self.number_value(x) for x in g.left]
            rv = [self.number_value(x) for x in g.right]
            if None not in lv and None not in rv:
                if not lv and not rv:
                    r = Fraction(0)
                elif not rv:
                    if lv[0] >= 0 and lv[0].denominator == 1:
                        r = lv[0] + 1
                elif not lv:
                    if rv[0] <= 0 and rv[0].denominator == 1:
                        r = rv[0] - 1
                elif lv[0] < rv[0]:
                    r = simplest_between(lv[0], rv[0])
        g._number = r
        return r

    def nimber_value(self, g: GameValue):
        """k when g is the canonical nimber ``*k``, else None."""
        if g._nimber is not _UNSET:
            return g._nimber
        r = None
        if g.left == g.right:
            ks = [self.nimber_value(x) for x in g.left]
            if None not in ks and sorted(ks) == list(range(len(ks))):
                r = len(ks)
        g._nimber = r
        return r

    def nimber(self, k: int) -> GameValue:
        if k < 0:
            raise ValueError("nimber index must be nonnegative")
        key = ("nim", k)
        g = self._named.get(key)
        if g is None:
            opts = [self.nimber(i) for i in range(k)]
            g = self._intern(tuple(opts), tuple(opts))
            self._named[key] = g
        return g

    def integer(self, n: int) -> GameValue:
        key = ("int", n)
        g = self._named.get(key)
        if g is None:
            # walk up from the largest cached integer to avoid deep recursion
            step = 1 if n > 0 else -1
            k = 0
            g = self.zero
            while k != n:
                k += step
                cached = self._named.get(("int", k))
                if cached is None:
                    cached = self._intern((g,), ()) if step > 0 else self._intern((), (g,))
                    self._named[("int", k)] = cached
                g = cached
        return g


def _sort_key(g: GameValue):
    return g.sort_key


def simplest_between(lo, hi):
    """Simplest dyadic strictly between two dyadics ``lo < hi``."""
    from fractions import Fraction
    import math

    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    # 0 <= lo < hi: smallest integer above lo, if below hi
    n = math.floor(lo) + 1
    if n < hi:
        return Fraction(n)
    d = 1
    while True:
        d *= 2
        k = math.floor(lo * d) + 1
        if Fraction(k, d) < hi:
            return Fraction(k, d)


def mex(indices: Iterable[int]) -> int:
    """Least nonnegative integer not in ``indices``."""
    seen = set(indices)
    k = 0
    while k in seen:
        k += 1
    return k


def nim_add(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError("nim-sum is defined on nonnegative integers")
    return m ^ n


_default_store: GameStore | None = None


def default_store() -> GameStore:
    global _default_store
    if _default_store is None:
        _default_store = GameStore()
    return _default_store


def make_game(left, right, store: GameStore | None = None) -> GameValue:
    left = list(left)
    right = list(right)
    if store is None:
        probe = left + right
        store = probe[0].store if probe else default_store()
    return store.make_game(left, right)


def leq(g: GameValue, h: GameValue) -> bool:
    return g.store.leq(g, h)


def eq(g: GameValue, h: GameValue) -> bool:
    return g.store.eq(g, h)


def add(g: GameValue, h: GameValue) -> GameValue:
    return g.store.add(g, h)


def neg(g: GameValue) -> GameValue:
    return g.store.neg(g)


def outcome(g: GameValue) -> Outcome:
    return g.store.outcome(g)
