"""The counterclockwise tour code of tree-rooted maps and its inverse."""

from __future__ import annotations

from .planarmap import RootedMap
from .spanning import TreeRootedMap, dual_tree
from .word import dual_word, is_quadrant_excursion


def mullin_encode(tr: TreeRootedMap) -> str:
    """Tour the map around its tree starting at the root corner.

    Tree edges give E then W, the other edges give an opening stem N then a
    closing stem S.
    """
    m = tr.map
    if m.root is None:
        return ""
    sigma = m.sigma
    tree = [False] * m.edge_count
    for e in tr.tree:
        tree[e] = True
    seen = [False] * m.edge_count
    out = []
    r = m.root
    c = r
    while True:
        e = c >> 1
        if tree[e]:
            out.append("W" if seen[e] else "E")
            c = sigma[c ^ 1]
        else:
            out.append("S" if seen[e] else "N")
            c = sigma[c]
        seen[e] = True
        if c == r:
            break
    return "".join(out)


def mullin_decode(w: str) -> TreeRootedMap:
    """Rebuild the tree-rooted map whose tour is ``w``."""
    if not is_quadrant_excursion(w):
        raise ValueError("not a quadrant excursion")
    if not w:
        return TreeRootedMap(RootedMap((), None, check=False), frozenset())
    m = len(w) // 2
    rots: list[list[int]] = [[]]
    path = [0]          # vertices from the root to the current one
    stems = []          # open stems, as half-edge ids
    tree = []
    nxt = 0
    for ch in w:
        v = path[-1]
        if ch == "E":
            h = nxt
            nxt += 2
            rots[v].append(h)
            rots.append([h + 1])
            path.append(len(rots) - 1)
            tree.append(h >> 1)
        elif ch == "W":
            path.pop()
        elif ch == "N":
            h = nxt
            nxt += 2
            rots[v].append(h)
            stems.append(h)
        else:
            rots[v].append(stems.pop() + 1)
    sigma = [0] * (2 * m)
    for rot in rots:
        k = len(rot)
        for j in range(k):
            sigma[rot[j]] = rot[(j + 1) % k] if k > 1 else rot[j]
    root = rots[0][0]
    return TreeRootedMap(RootedMap(sigma, root, check=False), frozenset(tree))


def duality_commutes(tr: TreeRootedMap) -> bool:
    return mullin_encode(dual_tree(tr)) == dual_word(mullin_encode(tr))
