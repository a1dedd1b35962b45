"""SVG pictures of a word: the lattice walk and the tilted cell diagram."""

from __future__ import annotations

from collections import defaultdict

from .word import walk

SCALE = 12
MARGIN = 10


def cell_multiplicities(w: str) -> dict[tuple[int, int], int]:
    """Winding number of the closed walk around each unit square.

    For a fish this is the number of cells sitting over that lattice square.
    """
    rows: dict[int, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    pts = walk(w)
    for (x0, y0), ch in zip(pts, w):
        if ch == "N":
            rows[y0][x0] += 1
        elif ch == "S":
            rows[y0 - 1][x0] -= 1
    out = {}
    for j, crossings in rows.items():
        xs = sorted(crossings)
        acc = 0
        # sweep from the right: squares left of a crossing see it
        for idx in range(len(xs) - 1, -1, -1):
            acc += crossings[xs[idx]]
            lo = xs[idx - 1] if idx > 0 else xs[0]
            if acc:
                for i in range(lo, xs[idx]):
                    out[(i, j)] = acc
    return out


def _tilt(x: float, y: float) -> tuple[float, float]:
    # E goes down-right, N goes up-right
    return (x + y), (x - y)


def render_svg(w: str, title: str = "", comment: str = "") -> str:
    pts = walk(w)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    wa = (max(xs) - min(xs)) * SCALE + 2 * MARGIN
    ha = (max(ys) - min(ys)) * SCALE + 2 * MARGIN

    def pa(x, y):
        return MARGIN + (x - min(xs)) * SCALE, MARGIN + (max(ys) - y) * SCALE

    tilted = [_tilt(x, y) for x, y in pts]
    txs = [t[0] for t in tilted]
    tys = [t[1] for t in tilted]
    wb = (max(txs) - min(txs)) * SCALE + 2 * MARGIN
    hb = (max(tys) - min(tys)) * SCALE + 2 * MARGIN
    ox = wa + MARGIN

    def pb(x, y):
        tx, ty = _tilt(x, y)
        return ox + MARGIN + (tx - min(txs)) * SCALE, MARGIN + (ty - min(tys)) * SCALE

    width = ox + wb
    height = max(ha, hb) + (16 if title else 0)
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" viewBox="0 0 %d %d">'
           % (width, height, width, height)]
    if comment:
        out.append("<!-- %s -->" % comment.replace("--", "- -"))
    if title:
        out.append('<title>%s</title>' % _esc(title))
    out.append('<g id="walk" fill="none" stroke="#1f4e79" stroke-width="1.5">')
    out.append('<polyline points="%s"/>' % " ".join("%.1f,%.1f" % pa(x, y) for x, y in pts))
    out.append("</g>")
    out.append('<g id="cells" fill="#2e8b57" fill-opacity="0.4" stroke="#124" stroke-width="0.5">')
    for (i, j), mult in sorted(cell_multiplicities(w).items()):
        corners = [pb(i, j), pb(i + 1, j), pb(i + 1, j + 1), pb(i, j + 1)]
        poly = " ".join("%.1f,%.1f" % c for c in corners)
        for _ in range(max(mult, 0)):
            out.append('<polygon points="%s"/>' % poly)
    out.append("</g>")
    out.append('<g id="boundary" fill="none" stroke="#000" stroke-width="1">')
    out.append('<polyline points="%s"/>' % " ".join("%.1f,%.1f" % pb(x, y) for x, y in pts))
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
