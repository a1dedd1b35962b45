import pytest

from fishmaps import bijection as B
from fishmaps import enumeration as EN
from fishmaps import gff as G
from fishmaps import planarmap as P


def test_formula_values():
    assert [EN.formula_ff(n) for n in range(2, 8)] == [1, 2, 6, 22, 91, 408]
    assert EN.formula_ff_ij(1, 1) == 1
    assert [EN.formula_gff(n) for n in range(6)] == [1, 2, 9, 54, 378, 2916]


def test_formula_ff_ij_rows_sum():
    for n in range(2, 9):
        assert sum(EN.formula_ff_ij(i, n - i) for i in range(1, n)) == EN.formula_ff(n)


def test_dp_tables_match_fast_tables():
    n = 12
    assert EN.count_gff(n).rows == EN.gff_table(n).rows[:n + 1]
    assert EN.count_ff(n).rows == EN.ff_table(n).rows[:n + 1]
    assert all(EN.ff_table(n).total(k) == EN.formula_ff(k) for k in range(2, n + 1))
    assert all(EN.gff_table(n).total(k) == EN.formula_gff(k) for k in range(n + 1))


def test_large_fast_table():
    t = EN.ff_table(200)
    assert t.total(200) == EN.formula_ff(200)


def test_csv_rows():
    rows = EN.ff_table(6).csv_rows(6)
    assert rows[0] == "ff,6,jaw=1,22"
    assert rows[-1] == "ff,6,all,91"
    assert EN.CSV_HEADER == "class,n,stat,count"


def test_exhaustive_generators():
    assert [len(EN.all_ff(n)) for n in range(2, 7)] == [1, 2, 6, 22, 91]
    assert [len(EN.all_gff(n)) for n in range(5)] == [1, 2, 9, 54, 378]
    for n in range(5):
        assert set(EN.all_gff(n)) == {w for w in EN.all_excursions(2 * n) if G.is_gff(w)}


def test_brute_force_small():
    for n in range(4):
        bf = {P.canonical_form(m) for m in EN.brute_force_maps(n)}
        assert bf == {P.canonical_form(m) for m in EN.grammar_maps(n)}


@pytest.mark.slow
def test_brute_force_five_edges():
    assert len(EN.brute_force_maps(5)) == 2916


def test_samplers_are_deterministic():
    assert EN.sample_ff(30, 7) == EN.sample_ff(30, 7)
    assert EN.sample_gff(30, 7) == EN.sample_gff(30, 7)
    assert EN.RNG_ALGORITHM == "python-mt19937"


def test_samplers_produce_class_members():
    for seed in range(20):
        w = EN.sample_ff(8, seed)
        assert len(w) == 16 and G.is_fighting_fish(w)
        v = EN.sample_gff(8, seed)
        assert len(v) == 16 and G.is_gff(v)
        assert B.xi(EN.sample_map(5, seed)) == EN.sample_gff(5, seed)
