"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from fishmaps import enumeration as EN


@st.composite
def gff_words(draw, max_size=6):
    n = draw(st.integers(0, max_size))
    seed = draw(st.integers(0, 2**32 - 1))
    return EN.sample_gff(n, seed)


@st.composite
def fish_words(draw, max_size=7):
    n = draw(st.integers(2, max_size))
    seed = draw(st.integers(0, 2**32 - 1))
    return EN.sample_ff(n, seed)


@st.composite
def maps(draw, max_size=6):
    n = draw(st.integers(0, max_size))
    seed = draw(st.integers(0, 2**32 - 1))
    return EN.sample_map(n, seed)


words = st.text(alphabet="ENWS", max_size=14)
