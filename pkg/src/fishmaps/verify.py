"""Cross-validation suite run by ``fishmaps verify``.

Each check returns ``(name, ok, detail)`` where ``detail`` describes the
first counterexample when ``ok`` is false.
"""

from __future__ import annotations

from typing import Callable, Iterator

from . import bijection as B
from . import enumeration as EN
from . import gff as G
from . import planarmap as P
from .mullin import duality_commutes, mullin_decode, mullin_encode
from .spanning import TreeRootedMap, rightmost_dfs_tree, spanning_trees
from .word import dual_word

Check = tuple[str, bool, str]


def _first(items, pred: Callable) -> str | None:
    for x in items:
        if not pred(x):
            return repr(x)
    return None


def _maps(limit: int) -> list[P.RootedMap]:
    return [m for n in range(limit + 1) for m in EN.grammar_maps(n)]


def check_grammar_vs_brute_force(limit: int) -> Check:
    for n in range(min(limit, 4) + 1):
        bf = {P.canonical_form(m) for m in EN.brute_force_maps(n)}
        gm = [P.canonical_form(m) for m in EN.grammar_maps(n)]
        if len(gm) != len(set(gm)) or set(gm) != bf:
            return ("grammar maps = brute force", False, "size %d: %d vs %d" % (n, len(gm), len(bf)))
    return ("grammar maps = brute force", True, "")


def check_xi(limit: int) -> Check:
    bad = _first(_maps(limit), lambda m: B.xi(m) == B.xi_rec(m)
                 and P.canonical_form(B.xi_inv(B.xi(m))) == P.canonical_form(m))
    if bad:
        return ("xi = xi_rec, xi_inv . xi = id", False, bad)
    words = [w for n in range(limit + 1) for w in EN.all_gff(n)]
    bad = _first(words, lambda w: B.xi(B.xi_inv(w)) == w)
    return ("xi . xi_inv = id", bad is None, bad or "")


def check_statistics(limit: int) -> Check:
    bad = _first(_maps(limit), lambda m: B.statistics_check(m).all_equal())
    return ("statistics preserved", bad is None, bad or "")


def check_duality(limit: int) -> Check:
    bad = _first(_maps(limit), lambda m: B.xi(P.dual_map(m)) == dual_word(B.xi(m)))
    if bad:
        return ("duality", False, bad)
    trs = [TreeRootedMap(m, t) for m in _maps(min(limit, 3)) for t in spanning_trees(m)]
    bad = _first(trs, duality_commutes)
    return ("duality", bad is None, bad or "")


def check_mullin(limit: int) -> Check:
    trs = [TreeRootedMap(m, t) for m in _maps(min(limit, 3)) for t in spanning_trees(m)]

    def roundtrip(tr):
        back = mullin_decode(mullin_encode(tr))
        return mullin_encode(back) == mullin_encode(tr) and \
            P.canonical_form(back.map) == P.canonical_form(tr.map)

    bad = _first(trs, roundtrip)
    if bad:
        return ("mullin round trip", False, bad)
    words = [w for n in range(limit + 1) for w in EN.all_excursions(2 * n)]
    bad = _first(words, lambda w: mullin_encode(mullin_decode(w)) == w)
    return ("mullin round trip", bad is None, bad or "")


def check_phi(limit: int) -> Check:
    ns = [m for m in _maps(limit) if P.is_nonseparable(m)]
    bad = _first(ns, lambda m: B.phi(m) == B.phi_rec(m)
                 and P.canonical_form(B.phi_inv(B.phi(m))) == P.canonical_form(m))
    return ("phi = phi_rec, phi_inv . phi = id", bad is None, bad or "")


def check_decompositions(limit: int) -> Check:
    def ok(m):
        if m.edge_count and P.canonical_form(P.root_edge_decompose(m).assemble()) != P.canonical_form(m):
            return False
        if P.is_nonseparable(m):
            return P.canonical_form(P.series_decompose(m).assemble()) == P.canonical_form(m)
        return True

    bad = _first(_maps(limit), ok)
    return ("map decompositions invert constructors", bad is None, bad or "")


def check_recognizers(limit: int) -> Check:
    words = [w for n in range(limit + 1) for w in EN.all_excursions(2 * n)]
    bad = _first(words, lambda w: G.is_fighting_fish(w) == B.is_fighting_fish_by_code(w)
                 and G.is_gff(w) == B.is_gff_by_code(w))
    return ("recognizers agree", bad is None, bad or "")


def check_counts(limit: int) -> Check:
    n = max(limit, 2)
    dp_g, fast_g = EN.count_gff(n), EN.gff_table(n)
    dp_f, fast_f = EN.count_ff(n), EN.ff_table(n)
    if dp_g.rows != fast_g.rows[:n + 1] or dp_f.rows != fast_f.rows[:n + 1]:
        return ("counts", False, "DP and fast tables differ")
    for m in range(limit + 1):
        if dp_g.total(m) != len(EN.all_gff(m)):
            return ("counts", False, "gff size %d" % m)
        if m >= 2 and not dp_f.total(m) == len(EN.all_ff(m)) == EN.formula_ff(m):
            return ("counts", False, "ff size %d" % m)
    return ("counts", True, "")


def check_specializations(limit: int) -> Check:
    for n in range(limit + 1):
        for m in EN.grammar_maps(n):
            w = B.xi(m)
            if (P.loops(m) == 0) != G.is_up_bridge_free(w) or (P.bridges(m) == 0) != G.is_down_bridge_free(w):
                return ("loopless/bridgeless specializations", False, repr(m))
    return ("loopless/bridgeless specializations", True, "")


CHECKS = [
    check_grammar_vs_brute_force,
    check_decompositions,
    check_xi,
    check_statistics,
    check_duality,
    check_mullin,
    check_phi,
    check_recognizers,
    check_counts,
    check_specializations,
]


def run(limit: int) -> Iterator[Check]:
    for chk in CHECKS:
        yield chk(limit)
