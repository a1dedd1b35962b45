"""The rightmost depth-first search spanning tree and tree-rooted maps."""

from __future__ import annotations

from dataclasses import dataclass, field

from .planarmap import RootedMap, dual_map, serialize_map, parse_map, MapFormatError


@dataclass(frozen=True)
class TreeRootedMap:
    map: RootedMap
    tree: frozenset = field(default_factory=frozenset)

    def is_spanning_tree(self) -> bool:
        m = self.map
        if len(self.tree) != m.vertex_count - 1:
            return False
        parent = list(range(m.vertex_count))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        vo = m.vertex_of if m.edge_count else [0]
        for e in self.tree:
            x, y = find(vo[2 * e]), find(vo[2 * e + 1])
            if x == y:
                return False
            parent[x] = y
        return True


def rightmost_dfs_tree(m: RootedMap, trace: list | None = None) -> TreeRootedMap:
    """Explore corners from the root corner, growing the tree to the right.

    When ``trace`` is a list, the visited corners (named by the half-edge they
    precede) are appended to it.
    """
    if m.root is None:
        return TreeRootedMap(m, frozenset())
    sigma = m.sigma
    vo = m.vertex_of
    in_tree = [False] * m.vertex_count
    visited = [False] * m.edge_count
    tree_edge = [False] * m.edge_count
    r = m.root
    in_tree[vo[r]] = True
    c = r
    while True:
        if trace is not None:
            trace.append(c)
        e = c >> 1
        if not visited[e]:
            visited[e] = True
            w = vo[c ^ 1]
            if not in_tree[w]:
                in_tree[w] = True
                tree_edge[e] = True
                c = sigma[c ^ 1]
            else:
                c = sigma[c]
        elif tree_edge[e]:
            c = sigma[c ^ 1]
        else:
            c = sigma[c]
        if c == r:
            break
    return TreeRootedMap(m, frozenset(e for e in range(m.edge_count) if tree_edge[e]))


def dual_tree(tr: TreeRootedMap) -> TreeRootedMap:
    """(M*, T*) where T* holds the duals of the edges outside T."""
    m = tr.map
    return TreeRootedMap(dual_map(m), frozenset(set(range(m.edge_count)) - set(tr.tree)))


def spanning_trees(m: RootedMap) -> list[frozenset]:
    """All spanning trees of the underlying multigraph (brute force)."""
    from itertools import combinations
    k = m.vertex_count - 1
    out = []
    for combo in combinations(range(m.edge_count), k):
        t = TreeRootedMap(m, frozenset(combo))
        if t.is_spanning_tree():
            out.append(t.tree)
    return out


def serialize_tree(tr: TreeRootedMap) -> str:
    return serialize_map(tr.map) + " ".join(["tree"] + [str(e) for e in sorted(tr.tree)]) + "\n"


def parse_tree(text: str) -> TreeRootedMap:
    lines = text.rstrip("\n").split("\n")
    if not lines or not lines[-1].startswith("tree"):
        raise MapFormatError("missing 'tree' line", len(lines) - 1)
    try:
        edges = frozenset(int(t) for t in lines[-1].split()[1:])
    except ValueError:
        raise MapFormatError("bad edge id on 'tree' line", len(lines) - 1) from None
    tr = TreeRootedMap(parse_map("\n".join(lines[:-1]) + "\n"), edges)
    if not tr.is_spanning_tree():
        raise MapFormatError("edge set is not a spanning tree", len(lines) - 1)
    return tr
