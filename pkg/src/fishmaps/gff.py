"""Generalized fighting fish and fighting fish as words.

Constructors, the deterministic decompositions that invert them, the two
recognizers built on those decompositions, and the bridge statistics.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .word import is_quadrant_excursion, jaw, zero_visits

HEAD = "ENWS"


class ClassViolation(ValueError):
    """A word or map does not belong to the class an operation requires."""


# -- strip gluings ----------------------------------------------------------

def apply_nabla(w: str, pos: int, k: int) -> str:
    """Replace the N^k found at ``pos`` by E N^k W."""
    if k < 0 or not 0 <= pos <= len(w) - k or w[pos:pos + k] != "N" * k:
        raise ValueError("no N^%d at position %d of %r" % (k, pos, w))
    return w[:pos] + "E" + "N" * k + "W" + w[pos + k:]


def apply_delta(w: str, pos: int, k: int) -> str:
    """Replace the W^k found at ``pos`` by N W^k S."""
    if k < 0 or not 0 <= pos <= len(w) - k or w[pos:pos + k] != "W" * k:
        raise ValueError("no W^%d at position %d of %r" % (k, pos, w))
    return w[:pos] + "N" + "W" * k + "S" + w[pos + k:]


def _runs_positions(w: str, ch: str, k: int):
    if k == 0:
        return range(len(w) + 1)
    block = ch * k
    return [p for p in range(len(w) - k + 1) if w.startswith(block, p)]


def strip_closure(seeds: Iterable[str], max_size: int,
                  nabla_min: int = 0, delta_min: int = 0) -> set[str]:
    """All words of size <= max_size reachable from ``seeds`` by strip gluings.

    Only operations with k >= nabla_min (for the N-strip) and k >= delta_min
    (for the W-strip) are used.
    """
    seen = {s for s in seeds if len(s) <= 2 * max_size}
    frontier = set(seen)
    while frontier:
        nxt = set()
        for w in frontier:
            if len(w) + 2 > 2 * max_size:
                continue
            for ch, kmin, op in (("N", nabla_min, apply_nabla), ("W", delta_min, apply_delta)):
                k = kmin
                while k <= len(w):
                    pos = _runs_positions(w, ch, k)
                    if not pos:
                        break
                    for p in pos:
                        v = op(w, p, k)
                        if v not in seen:
                            seen.add(v)
                            nxt.add(v)
                    k += 1
        frontier = nxt
    return seen


# -- generalized fighting fish ----------------------------------------------

@dataclass(frozen=True)
class GffEmpty:
    def assemble(self) -> str:
        return ""


@dataclass(frozen=True)
class GffCaseI:
    f1: str
    f2: str

    def assemble(self) -> str:
        return gff_oplus(self.f1, self.f2)


@dataclass(frozen=True)
class GffCaseII:
    f1: str
    i: int

    def assemble(self) -> str:
        return gff_augment(self.f1, self.i)


GffDecomposition = Union[GffEmpty, GffCaseI, GffCaseII]


def gff_oplus(f1: str, f2: str) -> str:
    return f1 + "E" + f2 + "W"


def gff_augment(f: str, i: int) -> str:
    """G_i N shift(rest) S, where G_i ends at the i-th latitude-0 visit."""
    visits = zero_visits(f)
    if not 0 <= i < len(visits):
        raise ValueError("index %d out of range [0, %d]" % (i, len(visits) - 1))
    p = visits[i]
    return f[:p] + "N" + f[p:] + "S"


def gff_decompose(f: str) -> GffDecomposition:
    """One step of the two-case decomposition.

    Raises ClassViolation when the word cannot be a Gff at this step.  The
    pieces are not checked recursively; see :func:`is_gff`.
    """
    if f == "":
        return GffEmpty()
    if not is_quadrant_excursion(f):
        raise ClassViolation("not a quadrant excursion")
    if f[-1] == "W":
        # last step leaving the origin
        x = y = 0
        t = 0
        for p, ch in enumerate(f[:-1]):
            if ch == "E":
                x += 1
            elif ch == "W":
                x -= 1
            elif ch == "N":
                y += 1
            else:
                y -= 1
            if x == 0 and y == 0:
                t = p + 1
        if f[t] != "E":
            raise ClassViolation("Case I split step is %s" % f[t])
        return GffCaseI(f[:t], f[t + 1:-1])
    # f ends with S: the last step starting at latitude 0
    y = 0
    t = 0
    i = 0
    count = 0
    for p, ch in enumerate(f[:-1]):
        if y == 0:
            t, i = p, count
        if ch == "N":
            y += 1
        elif ch == "S":
            y -= 1
        if y == 0:
            count += 1
    if f[t] != "N":
        raise ClassViolation("Case II removed step is %s" % f[t])
    return GffCaseII(f[:t] + f[t + 1:-1], i)


def check_gff(w: str) -> None:
    """Raise ClassViolation naming the first failing decomposition step."""
    stack = [w]
    while stack:
        f = stack.pop()
        d = gff_decompose(f)
        if isinstance(d, GffCaseI):
            if not is_quadrant_excursion(d.f2):
                raise ClassViolation("Case I right part %r is not an excursion" % d.f2)
            stack.append(d.f1)
            stack.append(d.f2)
        elif isinstance(d, GffCaseII):
            stack.append(d.f1)


@lru_cache(maxsize=1 << 16)
def is_gff(w: str) -> bool:
    try:
        check_gff(w)
    except ClassViolation:
        return False
    return True


def gff_trace(w: str) -> list[str]:
    """Indented decomposition trace, one constructor per line."""
    lines: list[str] = []
    stack = [(w, 0)]
    while stack:
        f, depth = stack.pop()
        pad = "  " * depth
        d = gff_decompose(f)
        if isinstance(d, GffEmpty):
            lines.append(pad + "empty")
        elif isinstance(d, GffCaseI):
            lines.append(pad + "oplus %s = %s E %s W" % (f, d.f1 or "-", d.f2 or "-"))
            stack.append((d.f2, depth + 1))
            stack.append((d.f1, depth + 1))
        else:
            lines.append(pad + "augment %s = aug_%d(%s)" % (f, d.i, d.f1 or "-"))
            stack.append((d.f1, depth + 1))
    return lines


# -- fighting fish ----------------------------------------------------------

@dataclass(frozen=True)
class FishHead:
    def assemble(self) -> str:
        return HEAD


@dataclass(frozen=True)
class FishCaseII:
    f1: str
    i: int

    def assemble(self) -> str:
        return fish_augment(self.f1, self.i)


@dataclass(frozen=True)
class FishCaseIII:
    f2: str

    def assemble(self) -> str:
        return fish_odot(HEAD, self.f2)


@dataclass(frozen=True)
class FishCaseIV:
    f1: str
    i: int
    f2: str

    def assemble(self) -> str:
        return fish_odot(fish_augment(self.f1, self.i), self.f2)


FishDecomposition = Union[FishHead, FishCaseII, FishCaseIII, FishCaseIV]


def _fish_shape(w: str) -> bool:
    k = jaw(w)
    return k >= 1 and len(w) >= 4 and w[k] == "N" and w[-1] == "S"


def fish_odot(a: str, b: str) -> str:
    """E^jaw(a) . (b without its last S) . (a without its jaw and next N)."""
    if not (_fish_shape(a) and _fish_shape(b)):
        raise ClassViolation("fish_odot needs two fighting fish")
    k = jaw(a)
    return a[:k] + b[:-1] + a[k + 1:]


def fish_augment(f: str, i: int) -> str:
    """E^i N E^(jaw-i) R S where f = E^jaw R."""
    if not _fish_shape(f):
        raise ClassViolation("fish_augment needs a fighting fish")
    if not 1 <= i <= jaw(f):
        raise ValueError("index %d out of range [1, %d]" % (i, jaw(f)))
    return f[:i] + "N" + f[i:] + "S"


@lru_cache(maxsize=1 << 17)
def _fish_split(w: str):
    if w == HEAD:
        return FishHead()
    k = jaw(w)
    n = len(w)
    if k == 0 or n < 6 or w[k] != "N" or w[-1] != "S":
        return None
    if not is_quadrant_excursion(w):
        return None
    y = w[k + 1:-1]
    f1 = w[:k] + y
    if _fish_split(f1) is not None:
        return FishCaseII(f1, k)
    # product case: w = E^k N Y S with Y = Y_rest . Y_1, where the last factor
    # E^a N Y_1 S is irreducible and E^(k-a) N Y_rest S is the remaining fish.
    x, lat = k, 1
    for t in range(len(y) + 1):
        if lat == 1 and 1 <= x <= k - 1:
            rest = "E" * (k - x) + "N" + y[:t] + "S"
            tail = y[t:]
            if x == 1 and tail == "W":
                if _fish_split(rest) is not None:
                    return FishCaseIII(rest)
            else:
                g = "E" * x + tail
                if _fish_split(g) is not None and _fish_split(rest) is not None:
                    return FishCaseIV(g, x, rest)
        if t < len(y):
            ch = y[t]
            if ch == "E":
                x += 1
            elif ch == "W":
                x -= 1
            elif ch == "N":
                lat += 1
            else:
                lat -= 1
    return None


def fish_decompose(w: str) -> FishDecomposition:
    d = _fish_split(w)
    if d is None:
        raise ClassViolation("not a fighting fish: %s" % w)
    return d


def is_fighting_fish(w: str) -> bool:
    """Recognizer driven by the four-case decomposition."""
    return _fish_split(w) is not None


def fish_trace(w: str) -> list[str]:
    lines: list[str] = []
    stack = [(w, 0)]
    while stack:
        f, depth = stack.pop()
        pad = "  " * depth
        d = fish_decompose(f)
        if isinstance(d, FishHead):
            lines.append(pad + "head")
        elif isinstance(d, FishCaseII):
            lines.append(pad + "augment %s = aug_%d(%s)" % (f, d.i, d.f1))
            stack.append((d.f1, depth + 1))
        elif isinstance(d, FishCaseIII):
            lines.append(pad + "odot %s = head . %s" % (f, d.f2))
            stack.append((d.f2, depth + 1))
        else:
            lines.append(pad + "odot %s = aug_%d(%s) . %s" % (f, d.i, d.f1, d.f2))
            stack.append((d.f2, depth + 1))
            stack.append((d.f1, depth + 1))
    return lines


# -- bridges ----------------------------------------------------------------

def _matched_pairs(w: str, open_ch: str, close_ch: str) -> list[tuple[int, int]]:
    stack = []
    pairs = []
    for p, ch in enumerate(w):
        if ch == open_ch:
            stack.append(p)
        elif ch == close_ch:
            if not stack:
                raise ValueError("unbalanced %s/%s subword" % (open_ch, close_ch))
            pairs.append((stack.pop(), p))
    return pairs


def _bridges(w: str, open_ch: str, close_ch: str) -> int:
    if not is_gff(w):
        raise ClassViolation("not a generalized fighting fish: %s" % w)
    count = 0
    for p, q in _matched_pairs(w, open_ch, close_ch):
        if is_gff(w[p + 1:q]) and is_gff(w[:p] + w[q + 1:]):
            count += 1
    return count


def down_bridges(w: str) -> int:
    """Number of splits w = F1 E G W F2 with G and F1 F2 both Gff."""
    return _bridges(w, "E", "W")


def up_bridges(w: str) -> int:
    """Number of splits w = F1 N G S F2 with G and F1 F2 both Gff."""
    return _bridges(w, "N", "S")


def is_up_bridge_free(w: str) -> bool:
    return up_bridges(w) == 0


def is_down_bridge_free(w: str) -> bool:
    return down_bridges(w) == 0
