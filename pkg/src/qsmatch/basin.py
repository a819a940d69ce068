"""
Escape-time pictures of the two basins of a matcher map.

Every pixel center is iterated until it reaches the squared-overlap
threshold with the reference or with its orthogonal partner. The iteration
count and the basin are recorded and written as binary PGM images or CSV.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError
from .gates import TwoQubitGate, synthesize_unitary
from .matcher import DEFAULT_MAX_ITER, DEFAULT_TARGET_SQ, Matcher, map_step, match_points
from .protocol import gate_step

ROW_CHUNK = 64


@dataclass(frozen=True)
class RasterConfig:
    center: complex
    half_width: float
    nx: int = 256
    ny: int = 256
    threshold_sq: float = DEFAULT_TARGET_SQ
    max_iter: int = DEFAULT_MAX_ITER
    source: str = "map"

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise DomainError("resolution must be at least 2x2")
        if not 0 < self.threshold_sq < 1:
            raise DomainError("threshold_sq must lie in (0, 1)")
        if not self.half_width > 0:
            raise DomainError("half_width must be positive")
        if self.max_iter < 1:
            raise DomainError("max_iter must be at least 1")
        if self.source not in ("map", "gate"):
            raise DomainError(f"source must be 'map' or 'gate', got {self.source!r}")

    @classmethod
    def default_for(cls, m: Matcher, **kw) -> "RasterConfig":
        """Window centered on the Julia circle, 2.5 radii wide each way."""
        if m.julia.is_line:
            mid = (m.z1 + m.partner) / 2
            return cls(mid, 1.25 * abs(m.z1 - m.partner), **kw)
        return cls(m.julia.center, 2.5 * m.julia.radius, **kw)

    def pixel_centers(self) -> np.ndarray:
        """Complex pixel centers, shape (ny, nx); row 0 is the top (largest Im)."""
        h = self.half_width
        xs = self.center.real - h + (np.arange(self.nx) + 0.5) * (2 * h / self.nx)
        ys = self.center.imag + h - (np.arange(self.ny) + 0.5) * (2 * h / self.ny)
        return xs[None, :] + 1j * ys[:, None]


@dataclass(frozen=True, eq=False)
class BasinGrid:
    points: np.ndarray
    region: np.ndarray
    iterations: np.ndarray
    max_iter: int

    @property
    def shape(self):
        return self.region.shape


def rasterize(m: Matcher, cfg: RasterConfig, gate: TwoQubitGate | None = None) -> BasinGrid:
    """Basin membership and iteration count for every pixel of ``cfg``.

    ``cfg.source == "gate"`` iterates the simulated protocol step of ``gate``
    (synthesized from the matcher map when not given) instead of the map.
    """
    if cfg.source == "gate":
        step = gate_step(gate if gate is not None else synthesize_unitary(m.f))
    else:
        step = map_step(m.f)
    target = math.sqrt(cfg.threshold_sq)
    pts = cfg.pixel_centers()
    region = np.empty(pts.shape, dtype=np.int8)
    iters = np.empty(pts.shape, dtype=np.int64)
    for r0 in range(0, cfg.ny, ROW_CHUNK):
        rows = slice(r0, min(r0 + ROW_CHUNK, cfg.ny))
        region[rows], iters[rows] = match_points(m, pts[rows], target, cfg.max_iter, step)
    return BasinGrid(pts, region, iters, cfg.max_iter)


def _pgm(path: Path, values: np.ndarray):
    ny, nx = values.shape
    try:
        with open(path, "wb") as fh:
            fh.write(f"P5\n{nx} {ny}\n255\n".encode("ascii"))
            fh.write(values.astype(np.uint8).tobytes())
    except OSError as exc:
        raise OSError(f"cannot write image {path}: {exc}") from exc


def region_path(path) -> Path:
    path = Path(path)
    if path.suffix == ".pgm":
        return path.with_suffix(".region.pgm")
    return path.with_name(path.name + ".region.pgm")


def write_image(grid: BasinGrid, path):
    """Iteration counts as 8-bit PGM, plus a basin map at ``*.region.pgm``.

    Decided pixels get ``floor(255 * k / max_iter)`` and undecided pixels 255.
    In the basin map, 0 marks the partner, 128 undecided and 255 the reference.
    """
    undecided = grid.region == 0
    shade = np.floor(255 * grid.iterations / grid.max_iter).astype(np.int64)
    shade[undecided] = 255
    _pgm(Path(path), shade)
    basin = np.select([grid.region > 0, grid.region < 0], [255, 0], default=128)
    _pgm(region_path(path), basin)


def write_csv(grid: BasinGrid, path):
    """One row per pixel, ``re,im,region,iterations``, top row first."""
    try:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["re", "im", "region", "iterations"])
            for z, reg, k in zip(grid.points.ravel(), grid.region.ravel(), grid.iterations.ravel()):
                w.writerow([f"{z.real:.17g}", f"{z.imag:.17g}", int(reg), int(k)])
    except OSError as exc:
        raise OSError(f"cannot write CSV {path}: {exc}") from exc


def read_pgm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    parts = data.split(b"\n", 3)
    if parts[0] != b"P5":
        raise DomainError(f"{path} is not a binary PGM")
    nx, ny = map(int, parts[1].split())
    return np.frombuffer(parts[3], dtype=np.uint8).reshape(ny, nx)
