import pytest
from hypothesis import given, settings, strategies as st

from fishmaps import enumeration as EN
from fishmaps import planarmap as P

from strategies import maps


def cf(m):
    return P.canonical_form(m)


def test_standard_maps():
    v, b, l, d = P.vertex_map(), P.bridge_map(), P.loop_map(), P.double_edge_map()
    assert (v.vertex_count, v.edge_count, v.face_count) == (1, 0, 1)
    assert (b.vertex_count, b.face_count) == (2, 1)
    assert (l.vertex_count, l.face_count) == (1, 2)
    assert (d.vertex_count, d.face_count) == (2, 2)
    # the fish class starts at two edges, so single-edge maps count as separable
    assert P.is_nonseparable(d)
    assert not P.is_nonseparable(b) and not P.is_nonseparable(l)
    assert not P.is_nonseparable(P.map_augment(b, 2))


def test_statistics_examples():
    st_ = P.stats(P.loop_map())
    assert (st_.loops, st_.bridges, st_.c) == (1, 0, 1)
    st_ = P.stats(P.bridge_map())
    assert (st_.loops, st_.bridges, st_.c) == (0, 1, 2)
    assert P.stats(P.vertex_map()).c == 0
    assert P.corner_count(P.double_edge_map()) == 2


def test_constructors_examples():
    assert cf(P.map_oplus(P.vertex_map(), P.vertex_map())) == cf(P.bridge_map())
    assert cf(P.map_augment(P.vertex_map(), 0)) == cf(P.loop_map())
    d = P.double_edge_map()
    assert P.ns_augment(d, 1).edge_count == 3
    assert P.ns_odot(d, d).edge_count == 3
    with pytest.raises(ValueError):
        P.map_augment(P.bridge_map(), 5)


def test_rooted_map_validation():
    with pytest.raises(ValueError):
        P.RootedMap.from_rotations([[0], [2]], 0)


def test_grammar_counts():
    assert [len(EN.grammar_maps(n)) for n in range(5)] == [1, 2, 9, 54, 378]


def test_dual_of_standard_maps():
    assert cf(P.dual_map(P.loop_map())) == cf(P.bridge_map())
    assert cf(P.dual_map(P.vertex_map())) == cf(P.vertex_map())


def test_serialize_round_trip_examples():
    for m in EN.grammar_maps(2):
        text = P.serialize_map(m)
        assert P.parse_map(text) == m
        assert P.parse_map(text.replace("\n", "; ")) == m
    assert P.serialize_map(P.vertex_map()).splitlines()[2] == "root -"


@pytest.mark.parametrize("text", [
    "",
    "planarmap v2\nhalfedges 2\nroot 0\nvertex 0 1\n",
    "planarmap v1\nhalfedges 3\nroot 0\nvertex 0 1 2\n",
    "planarmap v1\nhalfedges 2\nroot x\nvertex 0 1\n",
    "planarmap v1\nhalfedges 2\nroot 0\nvertex 0 0\n",
    "planarmap v1\nhalfedges 4\nroot 0\nvertex 0 1\nvertex 2 3\n",
])
def test_parse_errors(text):
    with pytest.raises(P.MapFormatError):
        P.parse_map(text)


@given(maps())
def test_euler_and_duality(m):
    assert m.vertex_count - m.edge_count + m.face_count == 2
    d = P.dual_map(m)
    assert (d.vertex_count, d.face_count) == (m.face_count, m.vertex_count)
    assert cf(P.dual_map(d)) == cf(m)


@given(maps())
def test_root_edge_decompose_inverts(m):
    if m.edge_count:
        d = P.root_edge_decompose(m)
        assert cf(d.assemble()) == cf(m)


@given(maps(5))
def test_series_decompose_inverts(m):
    if P.is_nonseparable(m) and m.edge_count >= 2:
        assert cf(P.series_decompose(m).assemble()) == cf(m)


@given(maps(), st.data())
def test_augment_then_decompose(m, data):
    i = data.draw(st.integers(0, P.corner_count(m)))
    a = P.map_augment(m, i)
    d = P.root_edge_decompose(a)
    assert isinstance(d, P.MapCaseII)
    assert d.i == i and cf(d.m1) == cf(m)


@given(maps(4), maps(4))
def test_oplus_then_decompose(m1, m2):
    d = P.root_edge_decompose(P.map_oplus(m1, m2))
    assert isinstance(d, P.MapCaseI)
    assert cf(d.m1) == cf(m1) and cf(d.m2) == cf(m2)


@settings(max_examples=50)
@given(maps())
def test_canonical_form_invariant_under_relabeling(m):
    assert cf(P.canonical_map(m)) == cf(m)
    assert P.parse_map(P.serialize_map(m)) == m
