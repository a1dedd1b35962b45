import pytest
from hypothesis import given

from fishmaps.word import (ParseError, Point, Step, dual_word, is_quadrant_excursion, jaw,
                           lat_long, parse_word, visits_ell, walk, zero_visits)

from strategies import words


def test_lat_long_examples():
    assert lat_long("") == Point(0, 0)
    assert lat_long("ENWS") == (0, 0)
    assert lat_long("EEN") == (2, 1)


def test_excursion_examples():
    assert is_quadrant_excursion("")
    assert is_quadrant_excursion("ENWS")
    assert is_quadrant_excursion("NESW")
    assert not is_quadrant_excursion("WE")
    assert not is_quadrant_excursion("EN")


def test_dual_word_examples():
    assert dual_word("EW") == "NS"
    assert dual_word("ENWS") == "ENWS"
    assert dual_word("EWNS") == "EWNS"


def test_jaw_and_visits():
    assert jaw("EENWWS") == 2
    assert jaw("NS") == 0
    assert zero_visits("EWNS") == [0, 1, 2, 4]
    assert visits_ell("EWNS") == 3
    with pytest.raises(ValueError):
        visits_ell("EN")


def test_step_enum():
    assert Step.E.dual is Step.S
    assert Step.N.dual is Step.W
    assert (Step.W.dx, Step.W.dy) == (-1, 0)


def test_parse_word():
    assert parse_word("ENWS\n") == "ENWS"
    assert parse_word("") == ""
    with pytest.raises(ParseError) as info:
        parse_word("ENXS")
    assert info.value.position == 2
    assert "index 2" in str(info.value)


@given(words)
def test_dual_is_involution(w):
    assert dual_word(dual_word(w)) == w


@given(words)
def test_dual_preserves_excursions(w):
    assert is_quadrant_excursion(dual_word(w)) == is_quadrant_excursion(w)


@given(words)
def test_walk_ends_at_lat_long(w):
    pts = walk(w)
    assert len(pts) == len(w) + 1
    assert pts[-1] == lat_long(w)
    if is_quadrant_excursion(w):
        assert all(p.longitude >= 0 and p.latitude >= 0 for p in pts)
