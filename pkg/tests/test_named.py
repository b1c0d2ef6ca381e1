import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domgame.cgt import GameStore
from domgame.named import (
    DownMultiple,
    DownTower,
    Dyadic,
    Integer,
    Nimber,
    Other,
    ParameterOverflowError,
    UpMultiple,
    UpTower,
    classify,
    named_to_game,
)
from domgame.notation import NotationError, format_value, parse_value

S = GameStore()


def test_named_to_game_examples(store):
    z = store.zero
    assert named_to_game(Integer(1), store) is store.make_game([z], [])
    assert named_to_game(Dyadic(1, 1), store) is store.make_game([z], [store.one])
    up = store.up
    assert named_to_game(UpTower(2), store) is store.make_game([up], [store.star])


def test_classify_examples(store):
    z = store.zero
    assert classify(store.make_game([z], [store.star])) == UpMultiple(1, False)
    assert classify(store.make_game([z], [z])) == Nimber(1)
    two_up = named_to_game(UpMultiple(2), store)
    assert classify(store.make_game([z], [two_up])) == UpMultiple(3, True)


def test_up_tower_one_reported_as_multiple(store):
    assert named_to_game(UpTower(1), store) is named_to_game(UpMultiple(1), store)
    assert classify(named_to_game(UpTower(1, True), store)) == UpMultiple(1, True)
    assert classify(named_to_game(DownTower(1), store)) == DownMultiple(1)


def test_zero_is_integer(store):
    assert classify(store.zero) == Integer(0)


def test_other(store):
    g = store.add(store.one, store.star)
    v = classify(g)
    assert isinstance(v, Other) and v.game is g
    with pytest.raises(ValueError):
        named_to_game(v, store)


def test_dyadic_lowest_terms():
    with pytest.raises(ValueError):
        Dyadic(2, 3)
    with pytest.raises(ValueError):
        Dyadic(3, 0)


def test_overflow(store):
    with pytest.raises(ParameterOverflowError):
        named_to_game(Integer(2**61), store)
    with pytest.raises(ParameterOverflowError):
        named_to_game(Dyadic(1, 62), store)
    with pytest.raises(ParameterOverflowError):
        named_to_game(Dyadic(2**62 + 1, 3), store)


def test_bad_parameters(store):
    with pytest.raises(ValueError):
        named_to_game(UpMultiple(0), store)
    with pytest.raises(ValueError):
        named_to_game(Nimber(-1), store)


def all_named(bound=6):
    for n in range(-bound, bound + 1):
        yield Integer(n)
    for q in range(1, bound + 1):
        for p in range(-(2**q) * 2 + 1, 2**q * 2, 2):
            yield Dyadic(p, q)
    for k in range(1, bound + 1):
        yield Nimber(k)
    for cls in (UpMultiple, DownMultiple):
        for n in range(1, bound + 1):
            yield cls(n, False)
            yield cls(n, True)
    for cls in (UpTower, DownTower):
        for n in range(2, bound + 1):
            yield cls(n, False)
            yield cls(n, True)


@pytest.mark.parametrize("v", list(all_named()), ids=str)
def test_classify_round_trip(v):
    assert classify(named_to_game(v, S)) == v


def test_named_values_are_distinct():
    games = [named_to_game(v, S) for v in all_named()]
    assert len({g.id for g in games}) == len(games)


def test_dyadic_values_by_order():
    # 1/2^(n+1) = {0 | 1/2^n}, and the dyadics sort like rationals
    xs = [Dyadic(p, 3) for p in range(-7, 8, 2)]
    gs = [named_to_game(x, S) for x in xs]
    for a, b in zip(gs, gs[1:]):
        assert a < b


@pytest.mark.parametrize(
    "text,expected",
    [
        ("0", Integer(0)),
        ("-3", Integer(-3)),
        ("7", Integer(7)),
        ("3/8", Dyadic(3, 3)),
        ("-1/2", Dyadic(-1, 1)),
        ("*", Nimber(1)),
        ("*3", Nimber(3)),
        ("^", UpMultiple(1)),
        ("^*", UpMultiple(1, True)),
        ("3^", UpMultiple(3)),
        ("2^*", UpMultiple(2, True)),
        ("v", DownMultiple(1)),
        ("4v*", DownMultiple(4, True)),
        ("^[3]", UpTower(3)),
        ("^[2]*", UpTower(2, True)),
        ("v[2]", DownTower(2)),
        ("v[5]*", DownTower(5, True)),
    ],
)
def test_notation_atoms(text, expected):
    g = parse_value(text, S)
    assert classify(g) == expected
    assert format_value(g) == text


def test_notation_brackets():
    g = parse_value("{0,^[2]*|0,^[2]*}", S)
    assert format_value(g) == "{0,^[2]*|0,^[2]*}"
    assert parse_value("{|}", S) is S.zero
    assert parse_value("{0|}", S) is S.one
    assert parse_value("{0,*|0}", S) is parse_value("^*", S)
    assert format_value(S.add(S.one, S.star)) == "{1|1}"
    # mixed sums with *k, k >= 2, stay in bracket form
    assert format_value(S.add(S.up, S.nimber(2))).startswith("{")


def test_notation_accepts_redundant_forms():
    assert parse_value("4/8", S) is parse_value("1/2", S)
    assert parse_value("1^", S) is parse_value("^", S)
    assert parse_value("^[1]*", S) is parse_value("^*", S)


@pytest.mark.parametrize("bad", ["", "{0|", "1/3", "{0;1|}", "**", "0 1"])
def test_notation_errors(bad):
    with pytest.raises(NotationError):
        parse_value(bad, S)


games = st.recursive(
    st.sampled_from([S.zero, S.star, S.one, S.up, S.nimber(2)]),
    lambda kids: st.tuples(st.lists(kids, max_size=3), st.lists(kids, max_size=3)).map(
        lambda lr: S.make_game(*lr)
    ),
    max_leaves=6,
)


@settings(max_examples=200, deadline=None)
@given(games)
def test_notation_round_trip(g):
    assert parse_value(format_value(g), S) is g


@settings(max_examples=200, deadline=None)
@given(games)
def test_classify_is_consistent(g):
    v = classify(g)
    if not isinstance(v, Other):
        assert named_to_game(v, S) is g
