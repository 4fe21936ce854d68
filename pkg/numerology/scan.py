"""
Search for parameters where the rewritten η expression turns negative.

With G = Σ_{j≤r} b_jγ_j, T = Σ_{j≤r} b_jτ_j and K = μ + η_p the expression is

    E(M) = (λ₀ − K·T/2)·(1 − G^M)/(1 − G) + 5/4 + μ/u + (2 − K)·G^M

and η̃ − η_p = u·E(M). E(M+1) − E(M) = G^M·(c + (2−K)(G−1)) with c = λ₀ − K·T/2,
so E is monotone in M and the smallest negative M is found by bisection. Signs are
decided on integers; G^M for M in the hundreds has far too many digits to reduce.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from lab.conf import lab_setting
from lab.exceptions import DivergenceError, ParameterError
from monomials.exact import as_fraction

from .interpolation import check_p
from .iteration import lambda_from_sums, series_sums, u_bound, weighted_partial_sums

logger = logging.getLogger(__name__)

HYPOTHESIS_THRESHOLD = Fraction(9, 10)


def _sign(x):
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class ExpressionTerms:
    """E(M) = c·geom(M) + K0 + K1·G^M."""
    c: Fraction
    K0: Fraction
    K1: Fraction
    G: Fraction

    @property
    def slope_factor(self):
        return self.c + self.K1 * (self.G - 1)

    def evaluate(self, M):
        """(sign of E(M), float approximation of E(M))."""
        c, K0, K1, G = self.c, self.K0, self.K1, self.G
        if G == 1:
            value = c * M + K0 + K1
            return _sign(value), float(value)
        a, b = G.numerator, G.denominator
        A, B = a ** M, b ** M
        L = math.lcm(c.denominator, K0.denominator, K1.denominator)
        X = (
            c.numerator * (L // c.denominator) * b * (A - B)
            + K0.numerator * (L // K0.denominator) * B * (a - b)
            + K1.numerator * (L // K1.denominator) * A * (a - b)
        )
        # X = L·B·(a−b)·E(M)
        sign = _sign(X) * _sign(a - b)
        try:
            approx = X / (L * B * (a - b))
        except OverflowError:
            approx = math.copysign(math.inf, sign)
        return sign, approx

    def never_negative(self):
        """True when the limit as M → ∞ already bounds E(M) from below by zero."""
        if self.G >= 1:
            return False
        return self.c / (1 - self.G) + self.K0 >= 0

    def smallest_negative(self, M_max):
        if self.slope_factor >= 0:
            return 1 if self.evaluate(1)[0] < 0 else None
        if self.never_negative() or self.evaluate(M_max)[0] >= 0:
            return None
        lo, hi = 1, M_max
        while lo < hi:
            mid = (lo + hi) // 2
            if self.evaluate(mid)[0] < 0:
                hi = mid
            else:
                lo = mid + 1
        return lo


@dataclass(frozen=True)
class ScanWitness:
    p: Fraction
    r: int
    M: int
    mu: Fraction
    u: Fraction
    sign: int
    expression_approx: float

    @property
    def eta_gap_approx(self):
        """u·E, the amount by which η̃ sits above η_p."""
        return float(self.u) * self.expression_approx

    @property
    def log10_u_max(self):
        return math.log10(2) - self.M * (math.log10(2) + self.r * math.log10(1.5))

    @property
    def u_admissible(self):
        return self.u <= u_bound(self.r, self.M)

    def as_dict(self):
        return {
            "p": str(self.p),
            "r": self.r,
            "M": self.M,
            "mu": str(self.mu),
            "u": str(self.u),
            "sign": self.sign,
            "expression_negative": self.sign < 0,
            "expression_approx": self.expression_approx,
            "eta_gap_approx": self.eta_gap_approx,
            "u_admissible": self.u_admissible,
            "log10_u_max": self.log10_u_max,
        }


@dataclass(frozen=True)
class LadderPoint:
    p: Fraction
    status: str
    witness: ScanWitness | None = None
    ratio: Fraction | None = None

    def as_dict(self):
        row = {"p": str(self.p), "status": self.status}
        if self.witness is not None:
            row.update(r=self.witness.r, M=self.witness.M)
        if self.ratio is not None:
            row["ratio"] = str(self.ratio)
        return row


@dataclass(frozen=True)
class ScanResult:
    p_window: tuple
    eta_p: Fraction
    mu: Fraction
    u: Fraction
    r_max: int
    M_max: int
    ladder: list = field(default_factory=list)

    @property
    def witness(self):
        for point in self.ladder:
            if point.witness is not None:
                return point.witness
        return None

    @property
    def hypothesis_met(self):
        return self.eta_p > HYPOTHESIS_THRESHOLD

    def as_dict(self):
        witness = self.witness
        return {
            "parameters": {
                "p_window": [str(v) for v in self.p_window],
                "eta_p": str(self.eta_p),
                "mu": str(self.mu),
                "u": str(self.u),
                "r_max": self.r_max,
                "M_max": self.M_max,
            },
            "hypothesis_met": self.hypothesis_met,
            "witness": None if witness is None else witness.as_dict(),
            "ladder": [point.as_dict() for point in self.ladder],
        }


def p_ladder(lo, hi, depth):
    """p_k = hi − (hi−lo)/2^k for k = 1..depth, approaching hi from below."""
    return [hi - (hi - lo) / 2 ** k for k in range(1, depth + 1)]


def _scan_point(p, *, eta_p, mu, u, r_max, M_max):
    try:
        infinite = series_sums(p)
    except DivergenceError as exc:
        logger.info("skipping p=%s: %s", p, exc)
        return LadderPoint(p, "divergent", ratio=exc.ratio)
    lam = lambda_from_sums(p, infinite.b_gamma, infinite.b_w, infinite.b_tau)
    weight = mu + eta_p
    K0 = Fraction(5, 4) + mu / u
    K1 = 2 - weight
    for r, G, T in weighted_partial_sums(p, r_max):
        terms = ExpressionTerms(lam - weight * T / 2, K0, K1, G)
        M = terms.smallest_negative(M_max)
        if M is None:
            continue
        sign, approx = terms.evaluate(M)
        logger.info("witness at p=%s r=%d M=%d (E≈%.6g)", p, r, M, approx)
        return LadderPoint(p, "witness", ScanWitness(p, r, M, mu, u, sign, approx))
    return LadderPoint(p, "no-witness")


def contradiction_scan(
    p_window=(19, 20),
    eta_p=Fraction(91, 100),
    r_max=100,
    M_max=400,
    mu=0,
    u=Fraction(1, 10 ** 6),
    depth=8,
    *,
    workers=None,
):
    lo, hi = (as_fraction(v) for v in p_window)
    eta_p, mu, u = as_fraction(eta_p), as_fraction(mu), as_fraction(u)
    if not lo < hi:
        raise ParameterError(f"empty p window [{lo}, {hi}]")
    check_p(lo)
    if u <= 0 or mu < 0:
        raise ParameterError("u must be positive and mu non-negative")
    if r_max < 1 or M_max < 1 or depth < 1:
        raise ParameterError("r_max, M_max and depth must all be at least 1")
    if not eta_p > HYPOTHESIS_THRESHOLD:
        logger.warning("eta_p=%s does not exceed 9/10; a witness is not expected", eta_p)

    ladder = p_ladder(lo, hi, depth)
    workers = lab_setting("THREADS", workers)

    def scan(p):
        return _scan_point(p, eta_p=eta_p, mu=mu, u=u, r_max=r_max, M_max=M_max)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        points = list(pool.map(scan, ladder))
    return ScanResult((lo, hi), eta_p, mu, u, r_max, M_max, points)
