"""
Localized lower-bound probe for the quadratic surface sum (d = 2, k = 2).

With unit coefficients and x in the box |x_1|, |x_2| ≤ c/N,
|x_3|, |x_4|, |x_5| ≤ c/N², every phase Φ(t)·x lies within 5c of zero,
so |f(x)| stays close to N² on a set of volume 32c⁵/N⁸. That gives
‖f‖_p ≳ N^{2−8/p} and V(N², 8, q) ≳ N^{1−2/q}.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from lab.conf import lab_setting
from lab.exceptions import ParameterError
from monomials.exact import as_fraction
from monomials.systems import enumerate_indices
from numerology.scales import ScaleParams

from .sums import ExpSumSpec, eval_many

logger = logging.getLogger(__name__)

MAX_BOX_CONSTANT = Fraction(1, 100)
_CHUNK = 4096


def sharpness_exponent(q):
    """Exponent of the lower bound V(N², 8, q) ≳ N^{1−2/q}."""
    q = as_fraction(q)
    if q <= 0:
        raise ParameterError(f"q must be positive, got {q}")
    return 1 - 2 / q


def moment_lower_exponent(p):
    """Exponent of ‖f‖_p ≳ N^{2−8/p} from the box."""
    p = as_fraction(p)
    if p <= 0:
        raise ParameterError(f"p must be positive, got {p}")
    return 2 - 8 / p


@dataclass(frozen=True)
class ProbeResult:
    N: int
    c: Fraction
    samples: int
    seed: int
    min_abs: float

    @property
    def threshold(self):
        return Fraction(self.N ** 2, 2)

    @property
    def certified(self):
        return self.min_abs >= self.threshold

    @property
    def half_widths(self):
        return (self.c / self.N,) * 2 + (self.c / self.N ** 2,) * 3

    @property
    def box_volume(self):
        volume = Fraction(1)
        for width in self.half_widths:
            volume *= 2 * width
        return volume

    @property
    def scale(self):
        return ScaleParams.from_N(self.N ** 2)

    def lp_lower_bound(self, p):
        """min|f|·vol^{1/p} ≤ ‖f‖_{L^p([0,1]^5)}."""
        return self.min_abs * float(self.box_volume) ** (1 / float(as_fraction(p)))

    def as_dict(self, qs=()):
        return {
            "N": self.N,
            "c": str(self.c),
            "samples": self.samples,
            "seed": self.seed,
            "min_abs": self.min_abs,
            "threshold": str(self.threshold),
            "certified": self.certified,
            "box_half_widths": [str(w) for w in self.half_widths],
            "box_volume": str(self.box_volume),
            "delta": str(self.scale.delta),
            "implied_exponents": {str(as_fraction(q)): str(sharpness_exponent(q)) for q in qs},
        }


def box_lower_probe(N, c=MAX_BOX_CONSTANT, samples=10_000, seed=None):
    """Sampled minimum of |f| over the box; the origin is always included."""
    c = as_fraction(c)
    if not 0 < c <= MAX_BOX_CONSTANT:
        raise ParameterError(f"box constant c must lie in (0, 1/100], got {c}")
    if N < 1 or samples < 1:
        raise ParameterError(f"N and samples must be positive, got N={N}, samples={samples}")
    seed = lab_setting("SEED", seed)
    spec = ExpSumSpec(enumerate_indices(2, 2), N)
    scale = np.array([float(c / N)] * 2 + [float(c / N ** 2)] * 3)

    rng = np.random.default_rng(seed)
    unit = rng.uniform(-1.0, 1.0, size=(samples, 5))
    points = np.vstack([np.zeros((1, 5)), unit * scale])
    minimum = min(
        float(np.abs(eval_many(spec, points[start:start + _CHUNK])).min())
        for start in range(0, len(points), _CHUNK)
    )
    result = ProbeResult(N, c, samples, seed, minimum)
    logger.info("box probe N=%d c=%s: min |f| = %.6f (certified=%s)", N, c, minimum, result.certified)
    return result
