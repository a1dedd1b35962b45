import pytest
from hypothesis import given, strategies as st

from fishmaps import enumeration as EN
from fishmaps import gff as G
from fishmaps.word import dual_word, is_quadrant_excursion, zero_visits

from strategies import fish_words, gff_words


def test_small_gff():
    assert G.is_gff("")
    assert G.is_gff("EW") and G.is_gff("NS")
    assert G.is_gff("EWNS") and G.is_gff("ENWS")
    assert not G.is_gff("NESW")
    assert sorted(EN.all_gff(1)) == ["EW", "NS"]


def test_decompose_examples():
    assert G.gff_decompose("EW") == G.GffCaseI("", "")
    assert G.gff_decompose("NS") == G.GffCaseII("", 0)
    with pytest.raises(G.ClassViolation, match="Case I split step is N"):
        G.gff_decompose("NESW")


def test_fish_examples():
    assert G.is_fighting_fish("ENWS")
    assert not G.is_fighting_fish("EWNS")
    assert isinstance(G.fish_decompose("ENWS"), G.FishHead)
    assert G.fish_augment("ENWS", 1) == "ENNWSS"
    assert G.fish_odot("ENWS", "ENWS") == "EENWWS"
    with pytest.raises(G.ClassViolation):
        G.fish_augment("EWNS", 1)


def test_quadrant_lemma_gff_are_excursions():
    for n in range(6):
        assert all(is_quadrant_excursion(w) for w in EN.all_gff(n))


def test_strip_closure_generates_fish():
    closure = G.strip_closure(["ENWS"], 6, nabla_min=1, delta_min=1)
    for n in range(2, 7):
        assert {w for w in closure if len(w) == 2 * n} == set(EN.all_ff(n))


def test_strip_closure_of_two_seeds():
    fish = G.strip_closure(["EW", "NS"], 6, nabla_min=1, delta_min=1) - {"EW", "NS"}
    for n in range(2, 7):
        assert {w for w in fish if len(w) == 2 * n} == set(EN.all_ff(n))
    allg = G.strip_closure(["EW", "NS"], 5)
    for n in range(1, 6):
        assert {w for w in allg if len(w) == 2 * n} == set(EN.all_gff(n))


def test_bridge_free_closures():
    gffs = [w for n in range(5) for w in EN.all_gff(n)]
    up_free = {w for w in gffs if G.is_up_bridge_free(w)}
    down_free = {w for w in gffs if G.is_down_bridge_free(w)}
    assert "EW" not in down_free and "NS" not in up_free
    assert "ENWS" in up_free and "ENWS" in down_free
    assert all(G.up_bridges(dual_word(w)) == G.down_bridges(w) for w in gffs)


@given(gff_words())
def test_decompose_inverts_constructors(w):
    d = G.gff_decompose(w)
    assert d.assemble() == w
    if isinstance(d, G.GffCaseI):
        assert G.is_gff(d.f1) and G.is_gff(d.f2)
    elif isinstance(d, G.GffCaseII):
        assert G.is_gff(d.f1)


@given(gff_words(), gff_words())
def test_oplus_closed(a, b):
    assert G.is_gff(G.gff_oplus(a, b))


@given(gff_words(), st.data())
def test_augment_closed(w, data):
    i = data.draw(st.integers(0, len(zero_visits(w)) - 1))
    v = G.gff_augment(w, i)
    assert G.is_gff(v)
    assert G.gff_decompose(v) == G.GffCaseII(w, i)


@given(fish_words())
def test_fish_decompose_inverts(w):
    assert G.fish_decompose(w).assemble() == w
    assert G.is_gff(w)


@given(fish_words(5), fish_words(5))
def test_odot_closed(a, b):
    assert G.is_fighting_fish(G.fish_odot(a, b))


@given(gff_words())
def test_dual_of_gff_is_gff(w):
    assert G.is_gff(dual_word(w))


def test_trace_lines():
    assert G.gff_trace("EW")[0].startswith("oplus")
    assert G.fish_trace("ENWS") == ["head"]
