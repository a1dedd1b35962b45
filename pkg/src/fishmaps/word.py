"""Lattice words over the step alphabet {E, N, W, S}.

Words are plain Python strings.  Every function here is pure and runs in a
single left-to-right pass.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

ALPHABET = "ENWS"

_DUAL = str.maketrans("ENWS", "SWNE")


class ParseError(ValueError):
    """Malformed textual input.  ``position`` is the 0-based offending index."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class Step(Enum):
    E = (1, 0)
    N = (0, 1)
    W = (-1, 0)
    S = (0, -1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    @property
    def dual(self) -> "Step":
        return Step[self.name.translate(_DUAL)]


class Point(NamedTuple):
    longitude: int
    latitude: int


def lat_long(w: str) -> Point:
    """Endpoint of the walk: (#E - #W, #N - #S)."""
    return Point(w.count("E") - w.count("W"), w.count("N") - w.count("S"))


def walk(w: str) -> list[Point]:
    """All prefix endpoints, starting with the origin (length len(w) + 1)."""
    x = y = 0
    pts = [Point(0, 0)]
    for ch in w:
        if ch == "E":
            x += 1
        elif ch == "W":
            x -= 1
        elif ch == "N":
            y += 1
        else:
            y -= 1
        pts.append(Point(x, y))
    return pts


def is_quadrant_excursion(w: str) -> bool:
    x = y = 0
    for ch in w:
        if ch == "E":
            x += 1
        elif ch == "W":
            x -= 1
            if x < 0:
                return False
        elif ch == "N":
            y += 1
        elif ch == "S":
            y -= 1
            if y < 0:
                return False
        else:
            return False
    return x == 0 and y == 0


def dual_word(w: str) -> str:
    """Reverse the word and exchange E<->S, N<->W."""
    return w[::-1].translate(_DUAL)


def jaw(w: str) -> int:
    """Length of the initial run of E steps."""
    return len(w) - len(w.lstrip("E"))


def latitudes(w: str) -> list[int]:
    y = 0
    out = [0]
    for ch in w:
        if ch == "N":
            y += 1
        elif ch == "S":
            y -= 1
        out.append(y)
    return out


def zero_visits(w: str) -> list[int]:
    """Positions p (0 <= p <= len(w)) where the walk sits at latitude 0.

    Position 0 (the start) is always included, so the i-th visit is
    ``zero_visits(w)[i]``.
    """
    y = 0
    out = [0]
    for p, ch in enumerate(w, 1):
        if ch == "N":
            y += 1
        elif ch == "S":
            y -= 1
        if y == 0:
            out.append(p)
    return out


def visits_ell(w: str) -> int:
    """Number of non-initial walk positions at latitude 0."""
    if not is_quadrant_excursion(w):
        raise ValueError("not a quadrant excursion: %r" % w)
    return len(zero_visits(w)) - 1


def size(w: str) -> int:
    return len(w) // 2


def parse_word(text: str) -> str:
    """Validate a word, tolerating a single trailing newline."""
    if text.endswith("\n"):
        text = text[:-1]
        if text.endswith("\r"):
            text = text[:-1]
    for i, ch in enumerate(text):
        if ch not in ALPHABET:
            raise ParseError("unexpected character %r at index %d" % (ch, i), i)
    return text


def format_word(w: str) -> str:
    return w


def steps(w: str) -> list[Step]:
    return [Step[ch] for ch in w]
