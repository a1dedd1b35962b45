from hypothesis import given

from fishmaps import enumeration as EN
from fishmaps import planarmap as P
from fishmaps.spanning import (TreeRootedMap, dual_tree, parse_tree, rightmost_dfs_tree,
                               serialize_tree, spanning_trees)

from strategies import maps


def test_small_trees():
    assert rightmost_dfs_tree(P.vertex_map()).tree == frozenset()
    assert len(rightmost_dfs_tree(P.bridge_map()).tree) == 1
    assert rightmost_dfs_tree(P.loop_map()).tree == frozenset()
    assert len(spanning_trees(P.double_edge_map())) == 2


def test_tree_counts_of_small_maps():
    # tree-rooted maps with n edges: Catalan(n) * Catalan(n + 1)
    expected = [1, 2, 10, 70]
    for n, e in enumerate(expected):
        assert sum(len(spanning_trees(m)) for m in EN.grammar_maps(n)) == e


@given(maps())
def test_rdfs_tree_spans(m):
    tr = rightmost_dfs_tree(m)
    assert tr.is_spanning_tree()
    assert len(tr.tree) == m.vertex_count - 1


@given(maps())
def test_dual_tree_spans_dual(m):
    tr = rightmost_dfs_tree(m)
    d = dual_tree(tr)
    assert d.is_spanning_tree()
    assert len(d.tree) == m.face_count - 1


@given(maps(4))
def test_tree_text_round_trip(m):
    tr = rightmost_dfs_tree(m)
    back = parse_tree(serialize_tree(tr))
    assert back == tr
    assert isinstance(back, TreeRootedMap)
