"""
Exact mean values J_{s,d,k}(N): the number of solutions of
Σ_{j≤s} Φ(x_j) = Σ_{j≤s} Φ(y_j) with every x_j, y_j ∈ {1..N}^d.
"""
import logging
import math
import time
from dataclasses import dataclass

import numpy as np
from django.db import models

from lab.conf import lab_setting
from lab.exceptions import ParameterError, ResourceCapError

from .histogram import build_histogram

logger = logging.getLogger(__name__)

# bytes of boolean scratch per brute-force comparison block
_BLOCK_BYTES = 1 << 24


class CountMethod(models.TextChoices):
    MEET_IN_MIDDLE = "meet-in-middle", "Meet in the middle"
    BRUTE_FORCE = "brute-force", "Brute force"


@dataclass(frozen=True)
class CountResult:
    system: object
    s: int
    N: int
    J: int
    method: str
    elapsed: float

    @property
    def diagonal(self):
        return self.N ** (self.s * self.system.d)

    def within_trivial_bounds(self):
        return self.diagonal <= self.J <= self.N ** (2 * self.s * self.system.d)

    def as_row(self):
        return {
            "system": self.system.label,
            "d": self.system.d,
            "k": self.system.k,
            "s": self.s,
            "N": self.N,
            "J": str(self.J),
            "method": self.method,
        }


def _check(s, N):
    if s < 1 or N < 1:
        raise ParameterError(f"s and N must be positive, got s={s}, N={N}")


def count_J(system, s, N, split=None, *, workers=None, mem_cap=None):
    """J = Σ_v r(v)² over the s-fold moment histogram."""
    _check(s, N)
    workers = lab_setting("THREADS", workers)
    started = time.perf_counter()
    histogram = build_histogram(system, s, N, split, workers=workers, mem_cap=mem_cap)
    J = histogram.sum_of_squares(workers)
    elapsed = time.perf_counter() - started
    logger.info("%s s=%d N=%d: J=%d from %d moment vectors", system.label, s, N, J, len(histogram))
    return CountResult(system, s, N, J, CountMethod.MEET_IN_MIDDLE.value, elapsed)


def brute_force_J(system, s, N, *, cap=None):
    """Compare every x-tuple sum with every y-tuple sum."""
    _check(s, N)
    cap = lab_setting("BRUTE_CAP", cap)
    pairs = N ** (2 * system.d * s)
    if pairs > cap:
        raise ResourceCapError(
            f"brute force over {pairs} tuples exceeds the enumeration cap {cap}",
            estimate=pairs,
            cap=cap,
        )
    started = time.perf_counter()
    frequencies = system.frequency_matrix(N)
    sums = frequencies
    for _ in range(s - 1):
        sums = (sums[:, None, :] + frequencies[None, :, :]).reshape(-1, system.n)

    block = max(1, _BLOCK_BYTES // (len(sums) * system.n))
    J = 0
    for start in range(0, len(sums), block):
        chunk = sums[start:start + block]
        J += int(np.all(chunk[:, None, :] == sums[None, :, :], axis=2).sum())
    return CountResult(system, s, N, J, CountMethod.BRUTE_FORCE.value, time.perf_counter() - started)


def count_sweep(system, s, N_values, *, method=CountMethod.MEET_IN_MIDDLE, split=None, workers=None, mem_cap=None):
    """One CountResult per N plus the log-log slope to the previous N (diagnostic only)."""
    rows = []
    previous = None
    for N in N_values:
        if method == CountMethod.BRUTE_FORCE:
            result = brute_force_J(system, s, N)
        else:
            result = count_J(system, s, N, split, workers=workers, mem_cap=mem_cap)
        row = result.as_row()
        row["slope"] = None
        if previous is not None and previous.N != N:
            row["slope"] = math.log(result.J / previous.J) / math.log(N / previous.N)
        rows.append(row)
        previous = result
    return rows
