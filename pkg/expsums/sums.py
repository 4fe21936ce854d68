"""
Exponential sums f(x) = Σ_t a_t e(Φ(t)·x), e(z) = exp(2πiz), over t ∈ {1..N}^d,
and their torus moments ∫|f|^p.

For p = 2s the moment is a trigonometric polynomial integral. A tensor grid
with m_i > 2·s·max frequency in coordinate i integrates it exactly by discrete
Fourier orthogonality, so with unit coefficients it reproduces J_{s,d,k}(N).
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from django.db import models

from lab.conf import lab_setting
from lab.exceptions import ParameterError

logger = logging.getLogger(__name__)

_DIRECT_CHUNK_POINTS = 4096
_SAMPLE_CHUNK = 8192


class Method(models.TextChoices):
    FFT = "fft", "FFT"
    DIRECT = "direct", "Direct evaluation"


@dataclass(frozen=True)
class ExpSumSpec:
    system: object
    N: int
    coeffs: dict | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.N < 1:
            raise ParameterError(f"N must be positive, got {self.N}")
        if self.coeffs:
            for point in self.coeffs:
                if len(point) != self.system.d or not all(1 <= x <= self.N for x in point):
                    raise ParameterError(f"coefficient at {point} lies outside {{1..{self.N}}}^{self.system.d}")

    def frequencies(self):
        return self.system.frequency_matrix(self.N)

    def coefficient_vector(self):
        points = list(self.system.points(self.N))
        if self.coeffs is None:
            return np.ones(len(points), dtype=complex)
        return np.array([complex(self.coeffs.get(point, 0)) for point in points])

    @property
    def mass(self):
        return float(np.abs(self.coefficient_vector()).sum())


@dataclass(frozen=True)
class GridSpec:
    m: tuple
    offsets: tuple | None = None

    def __post_init__(self):
        if any(int(mi) < 1 for mi in self.m):
            raise ParameterError(f"grid sizes must be positive, got {self.m}")
        if self.offsets is not None and len(self.offsets) != len(self.m):
            raise ParameterError("one offset per grid axis is required")

    @property
    def points(self):
        return math.prod(self.m)

    @property
    def shifts(self):
        return tuple(Fraction(o) for o in self.offsets) if self.offsets else (Fraction(0),) * len(self.m)

    def doubled(self):
        return GridSpec(tuple(2 * mi for mi in self.m), self.offsets)

    def covers(self, other):
        return len(self.m) == len(other.m) and all(a >= b for a, b in zip(self.m, other.m))

    def as_dict(self):
        return {"m": list(self.m), "offsets": [str(o) for o in self.shifts]}


@dataclass(frozen=True)
class MomentEstimate:
    p: int
    value: float
    exact: bool
    mode: str
    method: str
    grid: GridSpec
    points: int

    def as_dict(self):
        return {
            "p": self.p,
            "value": self.value,
            "exact": self.exact,
            "mode": self.mode,
            "method": self.method,
            "grid": self.grid.as_dict(),
            "points": self.points,
        }


def _phases(frequencies, x):
    return frequencies @ np.asarray(x, dtype=float).T


def eval_exp_sum(spec, x):
    """f(x) in double precision."""
    if len(x) != spec.system.n:
        raise ParameterError(f"x has {len(x)} coordinates, {spec.system.label} needs {spec.system.n}")
    values = [float(v) for v in x]
    phases = _phases(spec.frequencies(), values)
    return complex(spec.coefficient_vector() @ np.exp(2j * np.pi * phases))


def eval_many(spec, X):
    """f at every row of X (shape (count, n))."""
    phases = _phases(spec.frequencies(), X)
    return spec.coefficient_vector() @ np.exp(2j * np.pi * phases)


def _check_moment(p):
    if p < 1 or p % 2:
        raise ParameterError(f"moments are computed for positive even p only, got {p}")
    return p // 2


def adequate_grid(spec, p):
    """m_i = 2·s·N^{|α_i|} + 1 for p = 2s."""
    s = _check_moment(p)
    return GridSpec(tuple(2 * s * spec.N ** degree + 1 for degree in spec.system.degrees))


def _grid_fft(spec, grid):
    frequencies = spec.frequencies()
    m = np.array(grid.m, dtype=np.int64)
    shifts = np.array([float(o) for o in grid.shifts])
    weights = spec.coefficient_vector() * np.exp(2j * np.pi * (frequencies @ (shifts / m)))
    coefficients = np.zeros(grid.m, dtype=complex)
    np.add.at(coefficients, tuple((frequencies % m).T), weights)
    return np.fft.ifftn(coefficients) * grid.points


def _grid_direct_chunk(spec, grid, frequencies, start, stop):
    m = np.array(grid.m, dtype=np.int64)
    reduced = frequencies % m
    shifts = np.array([float(o) for o in grid.shifts])
    base = (frequencies @ (shifts / m)) % 1.0
    flat = np.arange(start, stop)
    index = np.array(np.unravel_index(flat, grid.m), dtype=np.int64)
    turns = ((reduced[:, :, None] * index[None, :, :]) % m[None, :, None]) / m[None, :, None]
    phases = turns.sum(axis=1) + base[:, None]
    return spec.coefficient_vector() @ np.exp(2j * np.pi * phases)


def _compensated_mean(values, p, count):
    return math.fsum(np.abs(values) ** p) / count


def quadrature_moment(spec, p, grid=None, *, method=Method.FFT, workers=None, seed=None,
                      cap=None, chunk_points=None):
    """Grid average of |f|^p; exact when the grid covers the adequate one."""
    _check_moment(p)
    if method not in Method.values:
        raise ParameterError(f"unknown quadrature method {method!r}")
    cap = lab_setting("GRID_CAP", cap)
    workers = lab_setting("THREADS", workers)
    adequate = adequate_grid(spec, p)
    grid = grid or adequate
    if len(grid.m) != spec.system.n:
        raise ParameterError(f"grid has {len(grid.m)} axes, {spec.system.label} needs {spec.system.n}")
    exact = grid.covers(adequate)
    if not exact:
        logger.warning("grid %s is below the adequate grid %s; result is inexact", grid.m, adequate.m)

    if grid.points > cap:
        return _sampled_moment(spec, p, grid, seed=lab_setting("SEED", seed), samples=cap)

    if method == Method.FFT:
        values = _grid_fft(spec, grid).ravel()
        value = _compensated_mean(values, p, grid.points)
    else:
        frequencies = spec.frequencies()
        size = chunk_points or _DIRECT_CHUNK_POINTS
        bounds = [(start, min(start + size, grid.points)) for start in range(0, grid.points, size)]

        def partial(bound):
            return math.fsum(np.abs(_grid_direct_chunk(spec, grid, frequencies, *bound)) ** p)

        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            value = math.fsum(pool.map(partial, bounds)) / grid.points
    return MomentEstimate(p, value, exact, "grid", method, grid, grid.points)


def _sampled_moment(spec, p, grid, *, seed, samples):
    logger.warning(
        "%d grid points exceed the cap; estimating the p=%d moment from %d samples",
        grid.points, p, samples,
    )
    rng = np.random.default_rng(seed)
    partials = []
    remaining = samples
    while remaining:
        size = min(remaining, _SAMPLE_CHUNK)
        partials.append(math.fsum(np.abs(eval_many(spec, rng.random((size, spec.system.n)))) ** p))
        remaining -= size
    return MomentEstimate(p, math.fsum(partials) / samples, False, "sampled", "monte-carlo", grid, samples)
