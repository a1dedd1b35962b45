"""Rooted planar maps stored as rotation systems.

Half-edges are numbered 0..2m-1 and h ^ 1 is the opposite half-edge of h.
``sigma[h]`` is the next half-edge counterclockwise around the vertex of h.
The face permutation is ``phi(h) = sigma[h ^ 1]``.

A corner is named by the half-edge that follows it counterclockwise, so the
root corner is the corner just before ``root``.  The zero-edge map has an
empty rotation and ``root is None``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .gff import ClassViolation
from .word import ParseError

MAGIC = "planarmap v1"


class MapFormatError(ParseError):
    pass


class RootedMap:
    __slots__ = ("sigma", "root", "_vertex_of", "_nv", "_faces", "_inv")

    def __init__(self, sigma: Sequence[int], root: int | None, check: bool = True):
        self.sigma = tuple(sigma)
        self.root = root
        self._vertex_of = None
        self._nv = 0
        self._faces = None
        self._inv = None
        if check:
            self._validate()

    # -- construction helpers -------------------------------------------
    @classmethod
    def from_rotations(cls, rotations: Iterable[Sequence[int]], root: int | None) -> "RootedMap":
        rots = [list(r) for r in rotations]
        n = sum(len(r) for r in rots)
        sigma = [-1] * n
        for rot in rots:
            for j, h in enumerate(rot):
                if not 0 <= h < n or sigma[h] != -1:
                    raise ValueError("bad half-edge %r in rotation" % (h,))
                sigma[h] = rot[(j + 1) % len(rot)]
        return cls(sigma, root)

    def _validate(self) -> None:
        n = len(self.sigma)
        if n % 2:
            raise ValueError("odd number of half-edges")
        if sorted(self.sigma) != list(range(n)):
            raise ValueError("rotation is not a permutation")
        if n == 0:
            if self.root is not None:
                raise ValueError("zero-edge map must have no root half-edge")
            return
        if self.root is None or not 0 <= self.root < n:
            raise ValueError("root half-edge out of range")
        if not self.is_connected():
            raise ValueError("map is not connected")
        if self.vertex_count - self.edge_count + self.face_count != 2:
            raise ValueError("rotation system is not planar")

    # -- basic structure ----------------------------------------------------
    @property
    def half_edge_count(self) -> int:
        return len(self.sigma)

    @property
    def edge_count(self) -> int:
        return len(self.sigma) // 2

    @property
    def vertex_of(self) -> list[int]:
        if self._vertex_of is None:
            sigma = self.sigma
            vo = [-1] * len(sigma)
            nv = 0
            for h in range(len(sigma)):
                if vo[h] == -1:
                    g = h
                    while vo[g] == -1:
                        vo[g] = nv
                        g = sigma[g]
                    nv += 1
            self._vertex_of = vo
            self._nv = max(nv, 1)
        return self._vertex_of

    @property
    def vertex_count(self) -> int:
        self.vertex_of
        return self._nv

    @property
    def sigma_inv(self) -> list[int]:
        if self._inv is None:
            inv = [0] * len(self.sigma)
            for h, s in enumerate(self.sigma):
                inv[s] = h
            self._inv = inv
        return self._inv

    def phi(self, h: int) -> int:
        return self.sigma[h ^ 1]

    @property
    def faces(self) -> list[list[int]]:
        """Orbits of the face permutation, each starting at its least element."""
        if self._faces is None:
            sigma = self.sigma
            seen = [False] * len(sigma)
            faces = []
            for h in range(len(sigma)):
                if not seen[h]:
                    orb = []
                    g = h
                    while not seen[g]:
                        seen[g] = True
                        orb.append(g)
                        g = sigma[g ^ 1]
                    faces.append(orb)
            self._faces = faces
        return self._faces

    @property
    def face_count(self) -> int:
        return max(len(self.faces), 1)

    def rotations(self) -> list[list[int]]:
        """Vertex rotations, ordered by least half-edge, each starting there."""
        if not self.sigma:
            return [[]]
        seen = [False] * len(self.sigma)
        out = []
        for h in range(len(self.sigma)):
            if not seen[h]:
                rot = []
                g = h
                while not seen[g]:
                    seen[g] = True
                    rot.append(g)
                    g = self.sigma[g]
                out.append(rot)
        return out

    def is_connected(self) -> bool:
        n = len(self.sigma)
        if n == 0:
            return True
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        sigma = self.sigma
        while stack:
            h = stack.pop()
            for g in (sigma[h], h ^ 1):
                if not seen[g]:
                    seen[g] = True
                    count += 1
                    stack.append(g)
        return count == n

    def root_face(self) -> list[int]:
        """Half-edges k_0 = root, k_j = phi^j(root) naming the root-face corners."""
        if self.root is None:
            return []
        out = [self.root]
        sigma = self.sigma
        g = sigma[self.root ^ 1]
        while g != self.root:
            out.append(g)
            g = sigma[g ^ 1]
        return out

    def root_edge_half(self) -> int:
        """The half-edge of the root edge lying at the root vertex."""
        if self.root is None:
            raise ValueError("the vertex map has no root edge")
        return self.sigma_inv[self.root]

    # -- identity -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, RootedMap) and self.sigma == other.sigma and self.root == other.root

    def __hash__(self) -> int:
        return hash((self.sigma, self.root))

    def __repr__(self) -> str:
        return "RootedMap(rotations=%r, root=%r)" % (self.rotations(), self.root)


@dataclass(frozen=True)
class MapStats:
    edges: int
    vertices: int
    faces: int
    out: int
    c: int
    loops: int
    bridges: int


# -- standard small maps -------------------------------------------------------

def vertex_map() -> RootedMap:
    return RootedMap((), None)


def bridge_map() -> RootedMap:
    return RootedMap((0, 1), 0)


def loop_map() -> RootedMap:
    return RootedMap((1, 0), 1)


def double_edge_map() -> RootedMap:
    """D: two vertices joined by two parallel edges."""
    return RootedMap.from_rotations([[0, 2], [1, 3]], 0)


# -- statistics -------------------------------------------------------------

def corner_count(m: RootedMap) -> int:
    """c(M): corners on the root face.  The vertex map has none."""
    return len(m.root_face())


def out_degree(m: RootedMap) -> int:
    """Non-root corners on the root face."""
    return max(corner_count(m) - 1, 0)


def loop_edges(m: RootedMap) -> list[int]:
    vo = m.vertex_of
    return [e for e in range(m.edge_count) if vo[2 * e] == vo[2 * e + 1]]


def loops(m: RootedMap) -> int:
    return len(loop_edges(m))


def _lowpoint(m: RootedMap, skip_edge: int = -1) -> tuple[list[int], list[int]]:
    """Bridges and articulation vertices of the underlying multigraph."""
    if m.edge_count == 0:
        return [], []
    vo = m.vertex_of
    nv = m.vertex_count
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    for h in range(m.half_edge_count):
        e = h >> 1
        if e == skip_edge:
            continue
        adj[vo[h]].append((vo[h ^ 1], e))
    disc = [-1] * nv
    low = [0] * nv
    bridges: list[int] = []
    arts: set[int] = set()
    timer = 0
    for s in range(nv):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = timer
        timer += 1
        root_children = 0
        stack = [(s, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, pe, i + 1)
                w, e = adj[v][i]
                if e == pe or w == v:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, 0))
                elif disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] > disc[u]:
                        bridges.append(pe)
                    if u == s:
                        root_children += 1
                    elif low[v] >= disc[u]:
                        arts.add(u)
        if root_children >= 2:
            arts.add(s)
    return sorted(bridges), sorted(arts)


def bridge_edges(m: RootedMap) -> list[int]:
    return _lowpoint(m)[0]


def bridges(m: RootedMap) -> int:
    return len(bridge_edges(m))


def cut_vertices(m: RootedMap) -> list[int]:
    """Articulation vertices (ids as in ``m.vertex_of``)."""
    return _lowpoint(m)[1]


def is_nonseparable(m: RootedMap) -> bool:
    if m.edge_count < 2 or loop_edges(m):
        return False
    return not cut_vertices(m)


def stats(m: RootedMap) -> MapStats:
    b, _ = _lowpoint(m)
    return MapStats(
        edges=m.edge_count,
        vertices=m.vertex_count,
        faces=m.face_count,
        out=out_degree(m),
        c=corner_count(m),
        loops=loops(m),
        bridges=len(b),
    )


# -- duality ------------------------------------------------------------------

def dual_map(m: RootedMap) -> RootedMap:
    """Faces become vertices.

    The dual rotation around a face runs against its face walk, and the root
    moves to the far half of the root edge, which keeps the root corner at the
    same vertex-face incidence.
    """
    if m.root is None:
        return m
    sigma = m.sigma
    dual = [0] * len(sigma)
    for h in range(len(sigma)):
        dual[sigma[h ^ 1]] = h
    return RootedMap(dual, m.root_edge_half() ^ 1, check=False)


# -- relabeling -----------------------------------------------------------------

def _compact(succ: dict[int, int], root: int | None) -> RootedMap:
    """Relabel a partial rotation so that edges are numbered 0..k-1."""
    if not succ:
        return vertex_map()
    edges = sorted({h >> 1 for h in succ})
    rank = {e: i for i, e in enumerate(edges)}

    def new(h):
        return 2 * rank[h >> 1] + (h & 1)

    sigma = [0] * (2 * len(edges))
    for h, s in succ.items():
        sigma[new(h)] = new(s)
    return RootedMap(sigma, new(root), check=False)


class _Rotation:
    """Mutable rotation system used while building maps."""

    def __init__(self, sigma: Sequence[int], extra: int = 0):
        self.sig = list(sigma) + [-1] * extra
        self.inv = [0] * len(self.sig)
        for h, s in enumerate(sigma):
            self.inv[s] = h

    def insert_before(self, x: int, y: int) -> None:
        p = self.inv[y]
        self.sig[p] = x
        self.inv[x] = p
        self.sig[x] = y
        self.inv[y] = x

    def alone(self, x: int) -> None:
        self.sig[x] = x
        self.inv[x] = x

    def build(self, root: int | None) -> RootedMap:
        return RootedMap(self.sig, root, check=False)


# -- map constructors ---------------------------------------------------------------

def map_oplus(m1: RootedMap, m2: RootedMap) -> RootedMap:
    """Join the root corners of m1 and m2 by a new edge; the root stays in m1."""
    e1, e2 = m1.edge_count, m2.edge_count
    off = 2 * e1
    rot = _Rotation(list(m1.sigma) + [s + off for s in m2.sigma], 2)
    b = 2 * (e1 + e2)
    a = b + 1
    if e1:
        rot.insert_before(b, m1.root)
    else:
        rot.alone(b)
    if e2:
        rot.insert_before(a, m2.root + off)
    else:
        rot.alone(a)
    return rot.build(m1.root if e1 else b)


def map_augment(m: RootedMap, i: int) -> RootedMap:
    """Add an edge inside the root face from the root corner to corner i."""
    corners = m.root_face()
    c = len(corners)
    if not 0 <= i <= c:
        raise ValueError("index %d out of range [0, %d]" % (i, c))
    e = m.edge_count
    rot = _Rotation(m.sigma, 2)
    b, a = 2 * e, 2 * e + 1
    r = m.root
    if e == 0:
        rot.sig[b], rot.sig[a] = a, b
        return rot.build(a)
    if i == 0:
        rot.insert_before(b, r)
        rot.insert_before(a, r)
        return rot.build(a)
    if i == c:
        rot.insert_before(a, r)
        rot.insert_before(b, r)
    else:
        rot.insert_before(a, corners[i])
        rot.insert_before(b, r)
    return rot.build(r)


@dataclass(frozen=True)
class MapCaseI:
    m1: RootedMap
    m2: RootedMap

    def assemble(self) -> RootedMap:
        return map_oplus(self.m1, self.m2)


@dataclass(frozen=True)
class MapCaseII:
    m1: RootedMap
    i: int

    def assemble(self) -> RootedMap:
        return map_augment(self.m1, self.i)


def _component(m: RootedMap, start: int, removed: int) -> set[int]:
    """Half-edges reachable from half-edge ``start`` avoiding edge ``removed``."""
    sigma = m.sigma
    seen = {start}
    stack = [start]
    while stack:
        h = stack.pop()
        g = sigma[h]
        while g >> 1 == removed:
            g = sigma[g]
        for g in (g, h ^ 1):
            if g not in seen:
                seen.add(g)
                stack.append(g)
    return seen


def _restricted(m: RootedMap, keep: set[int]) -> dict[int, int]:
    sigma = m.sigma
    succ = {}
    for h in keep:
        s = sigma[h]
        while s not in keep:
            s = sigma[s]
        succ[h] = s
    return succ


def root_edge_decompose(m: RootedMap) -> Union[MapCaseI, MapCaseII]:
    """Delete the root edge: inverse of map_oplus / map_augment."""
    if m.edge_count == 0:
        raise ValueError("the vertex map has no root edge")
    r = m.root
    b = m.root_edge_half()
    a = b ^ 1
    e = b >> 1
    sigma = m.sigma
    vo = m.vertex_of
    if vo[a] != vo[b]:
        side1 = _component(m, sigma[b], e) if sigma[b] != b else set()
        if not any(vo[h] == vo[a] for h in side1):
            side2 = set(range(m.half_edge_count)) - side1 - {a, b}
            m1 = _compact(_restricted(m, side1), r if side1 else None)
            m2 = _compact(_restricted(m, side2), sigma[a] if side2 else None)
            return MapCaseI(m1, m2)
    rest = set(range(m.half_edge_count)) - {a, b}
    if not rest:
        return MapCaseII(vertex_map(), 0)
    succ = _restricted(m, rest)
    h = sigma[a]
    while h in (a, b):
        h = sigma[h]
    if r == a:
        return MapCaseII(_compact(succ, h), 0)
    m1 = _compact(succ, r)
    if h == r:
        return MapCaseII(m1, corner_count(m1))
    # position of h in the root-face walk, computed on the old labels
    j = 0
    g = r
    while True:
        if g == h:
            return MapCaseII(m1, j)
        g = succ[g ^ 1]
        j += 1
        if g == r:
            raise ValueError("augmentation corner is not on the root face")


# -- nonseparable constructors ----------------------------------------------------

def _require_ns(*maps: RootedMap) -> None:
    for mm in maps:
        if not is_nonseparable(mm):
            raise ClassViolation("map is not nonseparable")


def ns_augment(m: RootedMap, i: int) -> RootedMap:
    """Add a root edge from the i-th non-root root-face corner (1 <= i <= out)."""
    _require_ns(m)
    out = out_degree(m)
    if not 1 <= i <= out:
        raise ValueError("index %d out of range [1, %d]" % (i, out))
    return map_augment(m, i)


def ns_odot(m1: RootedMap, m2: RootedMap) -> RootedMap:
    """Series composition: identify u1 with v2, drop both root edges, add u2 -> v1."""
    _require_ns(m1, m2)
    off = m1.half_edge_count
    sig = list(m1.sigma) + [s + off for s in m2.sigma]
    inv = [0] * len(sig)
    for h, s in enumerate(sig):
        inv[s] = h
    b1 = m1.root_edge_half()
    a1 = b1 ^ 1
    r2 = m2.root + off
    b2 = m2.root_edge_half() + off
    a2 = b2 ^ 1
    seq = []
    g = r2
    while g != b2:
        seq.append(g)
        g = sig[g]
    p, q = inv[a1], sig[a1]
    p2, q2 = inv[a2], sig[a2]
    sig[p] = seq[0]
    sig[seq[-1]] = q
    sig[p2] = a1
    sig[a1] = q2
    succ = {h: sig[h] for h in range(len(sig)) if h not in (a2, b2)}
    return _compact(succ, m1.root)


@dataclass(frozen=True)
class NsD:
    def assemble(self) -> RootedMap:
        return double_edge_map()


@dataclass(frozen=True)
class NsCaseII:
    m1: RootedMap
    i: int

    def assemble(self) -> RootedMap:
        return ns_augment(self.m1, self.i)


@dataclass(frozen=True)
class NsCaseIII:
    m2: RootedMap

    def assemble(self) -> RootedMap:
        return ns_odot(double_edge_map(), self.m2)


@dataclass(frozen=True)
class NsCaseIV:
    m1: RootedMap
    i: int
    m2: RootedMap

    def assemble(self) -> RootedMap:
        return ns_odot(ns_augment(self.m1, self.i), self.m2)


def _reach(adj: dict[int, list[int]], start: int, banned: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w != banned and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def series_decompose(m: RootedMap):
    """Block-chain decomposition of a nonseparable map after deleting its root edge."""
    _require_ns(m)
    if m.edge_count == 2:
        return NsD()
    r = m.root
    b = m.root_edge_half()
    a = b ^ 1
    e = b >> 1
    vo = m.vertex_of
    v1, u = vo[b], vo[a]
    adj: dict[int, list[int]] = {v: [] for v in range(m.vertex_count)}
    for h in range(m.half_edge_count):
        if h >> 1 != e:
            adj[vo[h]].append(vo[h ^ 1])
    _, arts = _lowpoint(m, skip_edge=e)
    best = None
    for w in arts:
        if w in (v1, u):
            continue
        side = _reach(adj, v1, w)
        if u not in side and (best is None or len(side) < len(best[1])):
            best = (w, side)
    if best is None:
        d = root_edge_decompose(m)
        if not isinstance(d, MapCaseII) or not is_nonseparable(d.m1) \
                or not 1 <= d.i <= out_degree(d.m1):
            raise ValueError("unexpected root-edge decomposition of a nonseparable map")
        return NsCaseII(d.m1, d.i)
    w1, side = best
    sigma = m.sigma
    first_block = {h for h in range(m.half_edge_count)
                   if h >> 1 != e and (vo[h] in side or vo[h ^ 1] in side)}
    # rotation at w1 splits into the first block's half-edges and one interval
    at_w = [h for h in range(m.half_edge_count) if vo[h] == w1]
    start = next(h for h in at_w if h not in first_block and m.sigma_inv[h] in first_block)
    interval = [start]
    g = sigma[start]
    while g not in first_block:
        interval.append(g)
        g = sigma[g]
    after = g
    before = m.sigma_inv[start]
    # first factor: first block plus the edge (b at v1, a at w1)
    succ_a = {}
    for h in first_block | {b}:
        s = sigma[h]
        if h == before:
            s = a
        succ_a[h] = s
    succ_a[a] = after
    # remaining factor: every other edge plus (b at w1 after the interval, a at u)
    others = set(range(m.half_edge_count)) - first_block - {a, b}
    succ_r = {}
    for h in others | {a}:
        succ_r[h] = sigma[h]
    succ_r[interval[-1]] = b
    succ_r[b] = start
    head = _compact(succ_a, r)
    tail = _compact(succ_r, start)
    if head.edge_count == 2:
        return NsCaseIII(tail)
    d = root_edge_decompose(head)
    if not isinstance(d, MapCaseII):
        raise ValueError("unexpected decomposition of the first factor")
    return NsCaseIV(d.m1, d.i, tail)


# -- canonical form and text format -------------------------------------------------

def canonical_map(m: RootedMap) -> RootedMap:
    """Relabel breadth-first from the root so isomorphic maps become equal."""
    if m.root is None:
        return m
    n = m.half_edge_count
    sigma = m.sigma
    new = [-1] * n
    q = deque()
    nxt = 0

    def assign(h):
        nonlocal nxt
        new[h] = nxt
        new[h ^ 1] = nxt + 1
        nxt += 2
        q.append(h)
        q.append(h ^ 1)

    assign(m.root)
    while q:
        h = q.popleft()
        g = sigma[h]
        if new[g] == -1:
            assign(g)
    out = [0] * n
    for h in range(n):
        out[new[h]] = new[sigma[h]]
    return RootedMap(out, 0, check=False)


def canonical_form(m: RootedMap) -> bytes:
    c = canonical_map(m)
    return ",".join(map(str, c.sigma)).encode("ascii")


def serialize_map(m: RootedMap) -> str:
    lines = [MAGIC, "halfedges %d" % m.half_edge_count,
             "root %s" % ("-" if m.root is None else m.root)]
    for rot in m.rotations():
        lines.append(" ".join(["vertex"] + [str(h) for h in rot]))
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> RootedMap:
    # one-line corpus form separates the lines with "; "
    lines = [ln.strip() for ln in text.replace(";", "\n").splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if len(lines) < 4 or lines[0] != MAGIC:
        raise MapFormatError("line 1: expected %r" % MAGIC, 0)
    try:
        kw, count = lines[1].split()
        n = int(count)
        assert kw == "halfedges" and n >= 0 and n % 2 == 0
    except (ValueError, AssertionError):
        raise MapFormatError("line 2: expected 'halfedges <2m>'", 1) from None
    parts = lines[2].split()
    if len(parts) != 2 or parts[0] != "root":
        raise MapFormatError("line 3: expected 'root <h>' or 'root -'", 2)
    if parts[1] == "-":
        root = None
    else:
        try:
            root = int(parts[1])
        except ValueError:
            raise MapFormatError("line 3: bad root %r" % parts[1], 2) from None
    rots = []
    for ln_no, ln in enumerate(lines[3:], 4):
        toks = ln.split()
        if not toks or toks[0] != "vertex":
            raise MapFormatError("line %d: expected 'vertex ...'" % ln_no, ln_no - 1)
        try:
            rots.append([int(t) for t in toks[1:]])
        except ValueError:
            raise MapFormatError("line %d: bad half-edge id" % ln_no, ln_no - 1) from None
    if n == 0:
        if root is not None or rots != [[]]:
            raise MapFormatError("zero-edge map must be 'root -' with one empty vertex", 2)
        return vertex_map()
    flat = sorted(h for rot in rots for h in rot)
    if flat != list(range(n)) or any(not rot for rot in rots):
        raise MapFormatError("every half-edge must appear exactly once", 3)
    try:
        return RootedMap.from_rotations(rots, root)
    except ValueError as exc:
        raise MapFormatError(str(exc), None) from None
