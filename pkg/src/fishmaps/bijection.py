"""The bijections xi (all rooted maps) and phi (nonseparable maps).

Each is available directly, as the tour code of the rightmost DFS tree, and
recursively through the matching decompositions.  The inverses run the
word-side decomposition and rebuild with the map-side constructors.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gff as G
from . import planarmap as P
from .mullin import mullin_decode, mullin_encode
from .planarmap import RootedMap
from .spanning import rightmost_dfs_tree
from .word import jaw, visits_ell


def xi(m: RootedMap) -> str:
    return mullin_encode(rightmost_dfs_tree(m))


def xi_rec(m: RootedMap) -> str:
    """xi through root-edge deletion (explicit stack, no recursion limit)."""
    # post-order evaluation of the decomposition tree
    todo = [(m, False)]
    values: list[str] = []
    while todo:
        mm, expanded = todo.pop()
        if mm.edge_count == 0:
            values.append("")
            continue
        d = P.root_edge_decompose(mm)
        if not expanded:
            todo.append((mm, True))
            if isinstance(d, P.MapCaseI):
                todo.append((d.m2, False))
                todo.append((d.m1, False))
            else:
                todo.append((d.m1, False))
            continue
        if isinstance(d, P.MapCaseI):
            w2 = values.pop()
            w1 = values.pop()
            values.append(G.gff_oplus(w1, w2))
        else:
            values.append(G.gff_augment(values.pop(), d.i))
    return values[0]


def xi_inv(w: str) -> RootedMap:
    """Rebuild the map of a Gff; raises ClassViolation for other words."""
    G.check_gff(w)
    todo = [(w, False)]
    values: list[RootedMap] = []
    while todo:
        f, expanded = todo.pop()
        d = G.gff_decompose(f)
        if isinstance(d, G.GffEmpty):
            values.append(P.vertex_map())
        elif not expanded:
            todo.append((f, True))
            if isinstance(d, G.GffCaseI):
                todo.append((d.f2, False))
                todo.append((d.f1, False))
            else:
                todo.append((d.f1, False))
        elif isinstance(d, G.GffCaseI):
            m2 = values.pop()
            m1 = values.pop()
            values.append(P.map_oplus(m1, m2))
        else:
            values.append(P.map_augment(values.pop(), d.i))
    return values[0]


def xi_inv_fast(w: str) -> RootedMap:
    """Linear-time inverse: decode the tour and check the tree is the RDFS tree.

    On failure the decomposition is run to name the failing step.
    """
    try:
        tr = mullin_decode(w)
    except ValueError:
        tr = None
    if tr is None or rightmost_dfs_tree(tr.map).tree != tr.tree:
        G.check_gff(w)
        raise G.ClassViolation("decoded tree is not the rightmost DFS tree")
    return tr.map


def is_gff_by_code(w: str) -> bool:
    try:
        tr = mullin_decode(w)
    except ValueError:
        return False
    return rightmost_dfs_tree(tr.map).tree == tr.tree


def is_fighting_fish_by_code(w: str) -> bool:
    """Second fish recognizer: decoded tree is the RDFS tree and the map is nonseparable."""
    try:
        tr = mullin_decode(w)
    except ValueError:
        return False
    return rightmost_dfs_tree(tr.map).tree == tr.tree and P.is_nonseparable(tr.map)


def phi(m: RootedMap) -> str:
    if not P.is_nonseparable(m):
        raise G.ClassViolation("map is not nonseparable")
    return xi(m)


def phi_rec(m: RootedMap) -> str:
    d = P.series_decompose(m)
    if isinstance(d, P.NsD):
        return G.HEAD
    if isinstance(d, P.NsCaseII):
        return G.fish_augment(phi_rec(d.m1), d.i)
    if isinstance(d, P.NsCaseIII):
        return G.fish_odot(G.HEAD, phi_rec(d.m2))
    return G.fish_odot(G.fish_augment(phi_rec(d.m1), d.i), phi_rec(d.m2))


def phi_inv(w: str) -> RootedMap:
    d = G.fish_decompose(w)
    if isinstance(d, G.FishHead):
        return P.double_edge_map()
    if isinstance(d, G.FishCaseII):
        return P.ns_augment(phi_inv(d.f1), d.i)
    if isinstance(d, G.FishCaseIII):
        return P.ns_odot(P.double_edge_map(), phi_inv(d.f2))
    return P.ns_odot(P.ns_augment(phi_inv(d.f1), d.i), phi_inv(d.f2))


@dataclass(frozen=True)
class StatisticsRecord:
    """(map side, word side) pairs; ``out_jaw`` is None for separable maps."""

    vertices_e: tuple[int, int]
    faces_n: tuple[int, int]
    corners_ell: tuple[int, int]
    bridges_down: tuple[int, int]
    loops_up: tuple[int, int]
    out_jaw: tuple[int, int] | None

    def pairs(self) -> dict:
        d = {
            "V-1/#E": self.vertices_e,
            "F-1/#N": self.faces_n,
            "c/ell": self.corners_ell,
            "bridges/down": self.bridges_down,
            "loops/up": self.loops_up,
        }
        if self.out_jaw is not None:
            d["out/jaw"] = self.out_jaw
        return d

    def all_equal(self) -> bool:
        return all(a == b for a, b in self.pairs().values())


def statistics_check(m: RootedMap) -> StatisticsRecord:
    w = xi(m)
    st = P.stats(m)
    return StatisticsRecord(
        vertices_e=(st.vertices - 1, w.count("E")),
        faces_n=(st.faces - 1, w.count("N")),
        corners_ell=(st.c, visits_ell(w)),
        bridges_down=(st.bridges, G.down_bridges(w)),
        loops_up=(st.loops, G.up_bridges(w)),
        out_jaw=(st.out, jaw(w)) if P.is_nonseparable(m) else None,
    )
