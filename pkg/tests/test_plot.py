import numpy as np
import pytest
from hypothesis import given, strategies as st

from wimanedge.exactfield import nf_embed
from wimanedge.plot import PlotSpec, marching_squares, parse_value, parse_window, render, sample

floats = st.floats(-5, 5, allow_nan=False)


@given(floats, floats)
def test_wiman_sextic_is_nonnegative_on_the_real_plane(x, y):
    # chart z = 1
    s2, s4 = x * x + y * y + 1, x ** 4 + y ** 4 + 1
    w = x ** 6 + y ** 6 + 1 + s2 * s4 - 12 * x * x * y * y
    assert w >= -1e-9 * (1 + abs(s2 * s4))


def test_wiman_member_has_no_real_curve(tmp_path):
    spec = PlotSpec(parse_value("1"), parse_value("0"), (-3, 3, -3, 3), 120, str(tmp_path / "w.svg"))
    res = render(spec)
    assert res.segments == {"real": 0}
    assert sorted(res.marked) == [(-1.0, -1.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 1.0)]


def test_line_member_segments_lie_on_the_lines(tmp_path):
    spec = PlotSpec(parse_value("0"), parse_value("1"), (-2.3, 2.1, -2.2, 2.4), 64, str(tmp_path / "d.svg"))
    xs, ys, V = sample(spec)
    segs = marching_squares(xs, ys, V.real)
    assert segs
    for a, b in segs:
        for px, py in (a, b):
            d = min(abs(px - py), abs(px + py), abs(abs(px) - 1), abs(abs(py) - 1))
            assert d < 0.1


def test_nonreal_member_gets_two_layers(tmp_path):
    spec = PlotSpec(parse_value("1"), parse_value("sqrtm3"), (-2, 2, -2, 2), 40, str(tmp_path / "r.svg"))
    assert set(render(spec).segments) == {"real", "imag"}


def test_parse_value():
    assert parse_value("-3/2") == parse_value("-3/2")
    v = parse_value("5*sqrt5")
    assert v == 5 * nf_embed("sqrt5", v.field)
    assert parse_value("-sqrtm3") ** 2 == -3
    with pytest.raises(ValueError):
        parse_value("pi")


def test_window_and_grid_validation():
    assert parse_window("-1,1,-2,2") == (-1.0, 1.0, -2.0, 2.0)
    with pytest.raises(ValueError):
        parse_window("1,2,3")
    with pytest.raises(ValueError):
        PlotSpec(parse_value("1"), parse_value("0"), (0, 0, 0, 1), 50, "x.svg")
    with pytest.raises(ValueError):
        PlotSpec(parse_value("1"), parse_value("0"), (0, 1, 0, 1), 8, "x.svg")


def test_marching_squares_circle():
    xs = ys = np.linspace(-2, 2, 81)
    X, Y = np.meshgrid(xs, ys)
    segs = marching_squares(xs, ys, X ** 2 + Y ** 2 - 1)
    r = [np.hypot(*p) for a, b in segs for p in (a, b)]
    assert max(abs(v - 1) for v in r) < 0.01
