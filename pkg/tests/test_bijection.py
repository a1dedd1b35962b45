import pytest
from hypothesis import given

from fishmaps import bijection as B
from fishmaps import enumeration as EN
from fishmaps import gff as G
from fishmaps import planarmap as P
from fishmaps.word import dual_word, jaw

from strategies import fish_words, gff_words, maps


def cf(m):
    return P.canonical_form(m)


def test_examples():
    assert B.xi(P.vertex_map()) == ""
    assert B.xi(P.loop_map()) == "NS"
    assert B.xi(P.bridge_map()) == "EW"
    assert B.xi(P.map_augment(P.bridge_map(), 2)) == "EWNS"
    assert B.xi_rec(P.map_augment(P.bridge_map(), 2)) == "EWNS"
    assert B.phi(P.double_edge_map()) == "ENWS"
    assert cf(B.phi_inv("ENWS")) == cf(P.double_edge_map())


def test_phi_rejects_separable():
    with pytest.raises(G.ClassViolation):
        B.phi(P.bridge_map())


def test_xi_inv_rejects_non_gff():
    with pytest.raises(G.ClassViolation, match="Case I split step is N"):
        B.xi_inv("NESW")
    with pytest.raises(G.ClassViolation, match="Case I split step is N"):
        B.xi_inv_fast("NESW")
    with pytest.raises(G.ClassViolation):
        B.xi_inv_fast("EN")


def test_statistics_record():
    rec = B.statistics_check(P.double_edge_map())
    assert rec.all_equal()
    assert rec.pairs()["out/jaw"] == (1, 1)
    assert B.statistics_check(P.bridge_map()).out_jaw is None


def test_jaw_and_root_face_degree():
    # jaw + 1 equals the root-face degree on nonseparable maps only
    for w in ("ENWS", "EENWWS"):
        assert len(B.xi_inv(w).root_face()) == jaw(w) + 1
    path = B.xi_inv("EEWW")
    rf = path.root_face()
    assert len(rf) == 4 and len({h >> 1 for h in rf}) == 2
    assert jaw("EEWW") + 1 == 3


@given(maps())
def test_xi_matches_recursion(m):
    assert B.xi(m) == B.xi_rec(m)


@given(maps())
def test_xi_inverse(m):
    w = B.xi(m)
    assert G.is_gff(w)
    assert cf(B.xi_inv(w)) == cf(m)
    assert cf(B.xi_inv_fast(w)) == cf(m)


@given(gff_words())
def test_xi_of_inverse(w):
    assert B.xi(B.xi_inv(w)) == w


@given(maps())
def test_statistics_preserved(m):
    assert B.statistics_check(m).all_equal()


@given(maps())
def test_duality_square(m):
    assert B.xi(P.dual_map(m)) == dual_word(B.xi(m))


@given(fish_words())
def test_phi_round_trip(w):
    m = B.phi_inv(w)
    assert P.is_nonseparable(m)
    assert B.phi(m) == w == B.phi_rec(m)


@given(gff_words())
def test_recognizers_agree_on_gff(w):
    assert B.is_gff_by_code(w)
    assert B.is_fighting_fish_by_code(w) == G.is_fighting_fish(w)


def test_separable_maps_have_non_fish_codes():
    for n in range(5):
        for m in EN.grammar_maps(n):
            assert G.is_fighting_fish(B.xi(m)) == P.is_nonseparable(m)
