"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 class violation.
"""

from __future__ import annotations

import argparse
import sys

from . import bijection as B
from . import enumeration as EN
from . import gff as G
from . import planarmap as P
from .render import render_svg
from .word import ParseError, is_quadrant_excursion, jaw, parse_word, zero_visits

CLASSES = ["map", "ns", "gff", "ff", "loopless", "bridgeless"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("error: %s" % message, file=sys.stderr)
        raise SystemExit(2)


def _read(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    try:
        with open(arg) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (arg, exc.strerror)) from None


def _word_arg(arg: str) -> str:
    return parse_word(sys.stdin.read().strip() if arg == "-" else arg)


def cmd_encode(args) -> int:
    m = P.parse_map(_read(args.mapfile))
    print(B.xi(m))
    return 0


def cmd_decode(args) -> int:
    w = _word_arg(args.word)
    try:
        m = B.xi_inv_fast(w)
    except G.ClassViolation as exc:
        print("not a generalized fighting fish: %s" % exc, file=sys.stderr)
        return 3
    sys.stdout.write(P.serialize_map(m))
    return 0


def recognize(w: str) -> list[tuple[str, object]]:
    exc = is_quadrant_excursion(w)
    gff = exc and B.is_gff_by_code(w)
    fish = gff and B.is_fighting_fish_by_code(w)
    rec: list[tuple[str, object]] = [
        ("excursion", exc),
        ("gff", gff),
        ("fighting-fish", fish),
    ]
    if gff:
        down, up = G.down_bridges(w), G.up_bridges(w)
        rec += [("up-bridge-free", up == 0), ("down-bridge-free", down == 0)]
    rec += [("size", len(w) // 2), ("jaw", jaw(w))]
    if exc:
        rec.append(("ell", len(zero_visits(w)) - 1))
    rec += [("E", w.count("E")), ("N", w.count("N"))]
    if gff:
        rec += [("down-bridges", down), ("up-bridges", up)]
    return rec


def cmd_recognize(args) -> int:
    w = _word_arg(args.word)
    for key, val in recognize(w):
        if isinstance(val, bool):
            val = "yes" if val else "no"
        print("%s: %s" % (key, val))
    return 0


def _words(cls: str, n: int) -> list[str]:
    if cls in ("ff", "ns"):
        return EN.all_ff(n) if n >= 2 else []
    words = EN.all_gff(n)
    if cls == "loopless":
        return [w for w in words if G.is_up_bridge_free(w)]
    if cls == "bridgeless":
        return [w for w in words if G.is_down_bridge_free(w)]
    return words


def cmd_count(args) -> int:
    n = args.size
    print(EN.CSV_HEADER)
    if args.cls in ("map", "gff"):
        t = EN.gff_table(n)
        rows = t.csv_rows(n)
    elif args.cls in ("ff", "ns"):
        if n < 2:
            rows = ["%s,%d,all,0" % (args.cls, n)]
        else:
            rows = EN.ff_table(n).csv_rows(n)
    else:
        if n > EN.EXHAUSTIVE_LIMIT:
            print("error: size %d beyond the exhaustive limit %d" % (n, EN.EXHAUSTIVE_LIMIT), file=sys.stderr)
            return 2
        rows = ["%s,%d,all,%d" % (args.cls, n, len(_words(args.cls, n)))]
    for row in rows:
        cls, rest = row.split(",", 1)
        print("%s,%s" % (args.cls, rest))
    return 0


def _map_line(m: P.RootedMap) -> str:
    return P.serialize_map(m).rstrip("\n").replace("\n", "; ")


def cmd_enumerate(args) -> int:
    n = args.size
    if n > EN.EXHAUSTIVE_LIMIT:
        print("error: size %d beyond the exhaustive limit %d" % (n, EN.EXHAUSTIVE_LIMIT), file=sys.stderr)
        return 2
    words = sorted(_words(args.cls, n))
    if args.limit is not None:
        words = words[:args.limit]
    for w in words:
        if args.cls in ("map", "ns", "loopless", "bridgeless") and args.format == "map":
            print(_map_line(B.xi_inv_fast(w)))
        else:
            print(w)
    return 0


def cmd_sample(args) -> int:
    n, seed = args.size, args.seed
    if args.cls in ("ff", "ns"):
        w = EN.sample_ff(n, seed)
    elif args.cls in ("gff", "map"):
        w = EN.sample_gff(n, seed)
    else:
        print("error: no sampler for class %s" % args.cls, file=sys.stderr)
        return 2
    header = "sampler class=%s size=%d rng=%s seed=%d" % (args.cls, n, EN.RNG_ALGORITHM, seed)
    if args.format == "svg":
        sys.stdout.write(render_svg(w, title="%s of size %d" % (args.cls, n), comment=header))
        return 0
    print("# " + header)
    if args.cls in ("map", "ns") and args.format == "map":
        sys.stdout.write(P.serialize_map(B.xi_inv_fast(w)))
    else:
        print(w)
    return 0


def cmd_verify(args) -> int:
    from .verify import run
    status = 0
    for name, ok, detail in run(args.limit):
        if ok:
            print("ok   %s" % name)
        else:
            print("FAIL %s: %s" % (name, detail))
            status = 1
            break
    return status


def cmd_render(args) -> int:
    w = _word_arg(args.word)
    if not is_quadrant_excursion(w):
        print("not a quadrant excursion", file=sys.stderr)
        return 3
    svg = render_svg(w)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="fishmaps", description="Fighting fish and rooted planar maps.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("encode", help="print the word of a map file")
    p.add_argument("mapfile", help="map file in planarmap v1 format, or - for stdin")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="print the map of a generalized fighting fish")
    p.add_argument("word")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("recognize", help="classify a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_recognize)

    for name, func, fmts, default in (
        ("count", cmd_count, ["csv"], "csv"),
        ("enumerate", cmd_enumerate, ["lines", "map"], "lines"),
        ("sample", cmd_sample, ["lines", "map", "svg"], "lines"),
    ):
        p = sub.add_parser(name)
        p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
        p.add_argument("--size", type=int, required=True)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--limit", type=int, default=None)
        p.add_argument("--format", choices=fmts, default=default)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run the cross-validation suite")
    p.add_argument("--limit", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="SVG of the walk and cell diagram of a word")
    p.add_argument("word")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except G.ClassViolation as exc:
        print("class violation: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
