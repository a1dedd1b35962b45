import xml.etree.ElementTree as ET

from fishmaps import enumeration as EN
from fishmaps.render import cell_multiplicities, render_svg


def test_head_has_one_cell():
    assert cell_multiplicities("ENWS") == {(0, 0): 1}


def test_cell_multiplicities_positive():
    for w in EN.all_ff(5):
        cells = cell_multiplicities(w)
        assert all(v >= 1 for v in cells.values())


def test_svg_is_well_formed():
    svg = render_svg(EN.sample_ff(40, 3), title="fish <40>", comment="seed 3")
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert "fill-opacity" in svg
