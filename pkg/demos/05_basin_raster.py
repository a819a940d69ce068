"""
Escape-time picture of the two basins.

Every pixel is iterated until its squared overlap with either attractor
passes 0.994. Writes basin.pgm (iteration counts) and basin.region.pgm
(which attractor) to the current directory.
"""
import time

import numpy as np

from qsmatch import MatcherSpec, RasterConfig, build_matcher, rasterize, write_image

m = build_matcher(MatcherSpec.from_overlap_sq(1j, 0.9))
cfg = RasterConfig.default_for(m, nx=512, ny=512)

start = time.perf_counter()
grid = rasterize(m, cfg)
print(f"rasterized {grid.region.size} pixels in {time.perf_counter() - start:.2f} s")

for label, value in (("reference", 1), ("partner", -1), ("undecided", 0)):
    print(f"{label:>10}: {np.mean(grid.region == value):.4f}")

# Points close to the boundary need more steps
d = np.abs(np.abs(grid.points - m.julia.center) - m.julia.radius) / m.julia.radius
for lo, hi in ((0.5, 1.0), (0.1, 0.2), (0.01, 0.02), (0.0, 0.005)):
    band = (d >= lo) & (d < hi)
    print(f"distance {lo:.3f}-{hi:.3f} radii: median iterations {np.median(grid.iterations[band]):.0f}")

write_image(grid, "basin.pgm")
print("wrote basin.pgm and basin.region.pgm")
