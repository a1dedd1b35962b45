from hypothesis import given

from fishmaps import enumeration as EN
from fishmaps import planarmap as P
from fishmaps.mullin import duality_commutes, mullin_decode, mullin_encode
from fishmaps.spanning import TreeRootedMap, rightmost_dfs_tree, spanning_trees
from fishmaps.word import is_quadrant_excursion

from strategies import maps


def test_small_codes():
    assert mullin_encode(rightmost_dfs_tree(P.bridge_map())) == "EW"
    assert mullin_encode(rightmost_dfs_tree(P.loop_map())) == "NS"
    assert mullin_decode("").map == P.vertex_map()


def test_both_trees_of_double_edge():
    d = P.double_edge_map()
    codes = {mullin_encode(TreeRootedMap(d, t)) for t in spanning_trees(d)}
    assert codes == {"ENWS", "NESW"}


def test_encode_is_shuffle_of_dyck_words():
    for n in range(4):
        for m in EN.grammar_maps(n):
            for t in spanning_trees(m):
                w = mullin_encode(TreeRootedMap(m, t))
                assert is_quadrant_excursion(w)
                assert w.count("E") == len(t)


def test_decode_all_short_excursions():
    for n in range(5):
        for w in EN.all_excursions(2 * n):
            tr = mullin_decode(w)
            assert tr.is_spanning_tree()
            assert mullin_encode(tr) == w


@given(maps(5))
def test_duality_commutes_on_rdfs_trees(m):
    assert duality_commutes(rightmost_dfs_tree(m))
