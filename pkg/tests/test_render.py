from pathlib import Path

import pytest
from hypothesis import given

from tangles.render import RenderOptions, to_svg
from tangles.tangle import Tangle, corners

from .conftest import FIGURE1_SWAPS
from .test_tangle import tangles

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.mark.parametrize("name, tangle", [
    ("empty_width3.svg", Tangle(3)),
    ("single_swap.svg", Tangle(2, {(1, 0)})),
    ("figure1.svg", Tangle(6, FIGURE1_SWAPS)),
])
def test_golden_files(name, tangle):
    assert to_svg(tangle) == (FIXTURES / name).read_text(encoding="utf-8")


def test_empty_has_no_shading():
    svg = to_svg(Tangle(3))
    assert svg.count("<polyline") == 3 and "<polygon" not in svg


def test_single_swap_has_one_diamond():
    svg = to_svg(Tangle(2, {(1, 0)}))
    assert svg.count("<polygon") == 1 and svg.count("<polyline") == 2


@given(tangles())
def test_structure(T):
    svg = to_svg(T, RenderOptions(corners=True, cluster_links=True))
    assert svg == to_svg(T, RenderOptions(corners=True, cluster_links=True))
    assert svg.count("<polygon") == len(T)
    assert svg.count("<circle") == len(corners(T)[0])
    for line in svg.splitlines():
        if line.startswith("<polyline"):
            assert line.count(",") == T.depth + 3


def test_options():
    with pytest.raises(ValueError):
        RenderOptions(cell=0)
    plain = to_svg(Tangle(2, {(1, 0)}), RenderOptions(shading=False, paths=False))
    assert "<polygon" not in plain and "<polyline" not in plain
    recolored = to_svg(Tangle(2, {(1, 0)}), RenderOptions(color_seed=1))
    assert recolored != to_svg(Tangle(2, {(1, 0)}))
