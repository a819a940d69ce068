import csv

import numpy as np
import pytest

from qsmatch.basin import (
    BasinGrid,
    RasterConfig,
    rasterize,
    read_pgm,
    region_path,
    write_csv,
    write_image,
)
from qsmatch.errors import DomainError
from qsmatch.matcher import Outcome, match_points, match_state
from qsmatch.qubit import overlap


def test_pixel_centers():
    cfg = RasterConfig(1 + 1j, 1.0, nx=2, ny=2)
    np.testing.assert_allclose(cfg.pixel_centers(), [[0.5 + 1.5j, 1.5 + 1.5j], [0.5 + 0.5j, 1.5 + 0.5j]])


@pytest.mark.parametrize(
    "kw", [dict(nx=1), dict(threshold_sq=1.0), dict(half_width=0), dict(max_iter=0), dict(source="x")]
)
def test_config_validation(kw):
    base = dict(center=0j, half_width=1.0)
    base.update(kw)
    with pytest.raises(DomainError):
        RasterConfig(**base)


def test_default_window(ex_matcher):
    cfg = RasterConfig.default_for(ex_matcher)
    assert cfg.center == pytest.approx(1.25j)
    assert cfg.half_width == pytest.approx(1.875)


def test_raster_agrees_with_scalar_decision(ex_matcher):
    cfg = RasterConfig.default_for(ex_matcher, nx=12, ny=9)
    grid = rasterize(ex_matcher, cfg)
    assert grid.shape == (9, 12)
    for z, r, k in zip(grid.points.ravel(), grid.region.ravel(), grid.iterations.ravel()):
        assert match_state(ex_matcher, z) == (r, k)


def test_raster_basins_follow_overlap(ex_matcher):
    grid = rasterize(ex_matcher, RasterConfig.default_for(ex_matcher, nx=40, ny=40))
    s = np.vectorize(lambda z: abs(overlap(ex_matcher.z1, z)))(grid.points)
    far = np.abs(s - ex_matcher.spec.s_eps) > 0.02
    expected = np.where(s > ex_matcher.spec.s_eps, Outcome.REFERENCE, Outcome.PARTNER)
    assert np.all(grid.region[far] == expected[far])


def test_gate_source_matches_map(ex_matcher):
    cfg = RasterConfig.default_for(ex_matcher, nx=16, ny=16)
    a = rasterize(ex_matcher, cfg)
    b = rasterize(ex_matcher, RasterConfig.default_for(ex_matcher, nx=16, ny=16, source="gate"))
    np.testing.assert_array_equal(a.region, b.region)
    np.testing.assert_array_equal(a.iterations, b.iterations)


def test_image_and_csv(ex_matcher, tmp_path):
    grid = rasterize(ex_matcher, RasterConfig.default_for(ex_matcher, nx=10, ny=6))
    out = tmp_path / "basin.pgm"
    write_image(grid, out)
    assert out.read_bytes().startswith(b"P5\n10 6\n255\n")
    shades = read_pgm(out)
    assert shades.shape == (6, 10)
    decided = grid.region != 0
    np.testing.assert_array_equal(shades[decided], np.floor(255 * grid.iterations[decided] / 30))
    regions = read_pgm(region_path(out))
    assert set(np.unique(regions)) <= {0, 128, 255}
    np.testing.assert_array_equal(regions == 255, grid.region == 1)

    table = tmp_path / "basin.csv"
    write_csv(grid, table)
    rows = list(csv.reader(table.open()))
    assert rows[0] == ["re", "im", "region", "iterations"]
    assert len(rows) == 61
    assert complex(float(rows[1][0]), float(rows[1][1])) == grid.points[0, 0]


def test_region_path(tmp_path):
    assert region_path("a/b.pgm").name == "b.region.pgm"
    assert region_path("a/b").name == "b.region.pgm"


def test_attractor_pixels_decide_immediately(ex_matcher):
    # a 3x3 window with spacing 1 centered on z1 has z1 as its middle pixel
    grid = rasterize(ex_matcher, RasterConfig(1j, 1.5, nx=3, ny=3))
    assert (grid.region[1, 1], grid.iterations[1, 1]) == (Outcome.REFERENCE, 0)
    grid = rasterize(ex_matcher, RasterConfig(-1j, 1.5, nx=3, ny=3))
    assert (grid.region[1, 1], grid.iterations[1, 1]) == (Outcome.PARTNER, 0)


def test_example_default_window_consistency(ex_matcher):
    grid = rasterize(ex_matcher, RasterConfig.default_for(ex_matcher))
    dist = np.abs(np.abs(grid.points - ex_matcher.julia.center) - ex_matcher.julia.radius)
    far = dist > 0.01 * ex_matcher.julia.radius
    inside = np.abs(grid.points - ex_matcher.julia.center) < ex_matcher.julia.radius
    expected = np.where(inside, Outcome.REFERENCE, Outcome.PARTNER)
    assert np.mean(grid.region[far] == expected[far]) >= 0.99


def test_all_reference_image_is_zero(tmp_path):
    pts = np.zeros((2, 2), dtype=complex)
    grid = BasinGrid(pts, np.ones((2, 2), dtype=np.int8), np.zeros((2, 2), dtype=np.int64), 30)
    write_image(grid, tmp_path / "z.pgm")
    assert (tmp_path / "z.pgm").read_bytes() == b"P5\n2 2\n255\n" + bytes(4)


def test_single_pixel_csv(ex_matcher, tmp_path):
    region, iters = match_points(ex_matcher, np.array([[1j]]))
    grid = BasinGrid(np.array([[1j]]), region, iters, 30)
    write_csv(grid, tmp_path / "one.csv")
    assert (tmp_path / "one.csv").read_text().splitlines() == ["re,im,region,iterations", "0,1,1,0"]


def test_csv_reimport_recomputes(ex_matcher, tmp_path, rng):
    grid = rasterize(ex_matcher, RasterConfig.default_for(ex_matcher, nx=32, ny=32))
    write_csv(grid, tmp_path / "g.csv")
    rows = list(csv.DictReader((tmp_path / "g.csv").open()))
    for i in rng.choice(len(rows), 100, replace=False):
        row = rows[i]
        z = complex(float(row["re"]), float(row["im"]))
        assert match_state(ex_matcher, z) == (int(row["region"]), int(row["iterations"]))
