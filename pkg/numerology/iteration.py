"""
Iteration bookkeeping for the cubic surface at exponent p.

Everything here is exact (Fraction). The sequences are

    b_i = 2·(3/2)^i
    γ_0 = 1 − α₁,   γ_i = α₁(1−α₂)(1−β₂)ρ₀^{i−1}       (1 ≤ i ≤ r)
    τ_i = α₁α₂ρ₀^i  (i < r),   τ_r = α₁ρ₀^r
    w_i = ((1−α₂)/(2α₂))·τ_i                            (i < r)

with ρ₀ = (1−α₂)β₂. The weighted series Σ b_iγ_i, Σ b_iw_i, Σ b_iτ_i are
geometric with ratio ρ = (3/2)ρ₀.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from lab.exceptions import DivergenceError, ParameterError
from monomials.exact import as_fraction

from .interpolation import solve_alphas

logger = logging.getLogger(__name__)

# constants carried by the decoupling argument without numeric values
OPAQUE_CONSTANTS = ("C_{K,eps}", "Lambda_{K,p,eps}", "Omega_{K,p}", "beta(K,p)")


@dataclass(frozen=True)
class IterationSequences:
    p: Fraction
    r: int
    b: tuple
    gamma: tuple
    tau: tuple
    w: tuple

    @property
    def sum_b_gamma(self):
        return sum(b * g for b, g in zip(self.b, self.gamma))

    @property
    def sum_b_tau(self):
        return sum(b * t for b, t in zip(self.b, self.tau))

    @property
    def sum_b_w(self):
        return sum(b * w for b, w in zip(self.b, self.w))

    @property
    def total_weight(self):
        """Σγ + Στ; equals 1 for every r."""
        return sum(self.gamma) + sum(self.tau)

    def as_dict(self):
        return {
            "p": str(self.p),
            "r": self.r,
            "b": [str(v) for v in self.b],
            "gamma": [str(v) for v in self.gamma],
            "tau": [str(v) for v in self.tau],
            "w": [str(v) for v in self.w],
        }


def sequences(p, r):
    coeffs = solve_alphas(p)
    if r < 1:
        raise ParameterError(f"r must be at least 1, got {r}")
    a1, a2, b2 = coeffs.alpha1, coeffs.alpha2, coeffs.beta2
    rho0 = coeffs.rho0
    powers = [rho0 ** i for i in range(r + 1)]
    b = tuple(2 * Fraction(3, 2) ** i for i in range(r + 1))
    gamma = (1 - a1,) + tuple(a1 * (1 - a2) * (1 - b2) * powers[i - 1] for i in range(1, r + 1))
    tau = tuple(a1 * a2 * powers[i] for i in range(r)) + (a1 * powers[r],)
    w = tuple((1 - a2) / (2 * a2) * tau[i] for i in range(r))
    return IterationSequences(coeffs.p, r, b, gamma, tau, w)


def convergence_ratio(p):
    """ρ = (3/2)(1−α₂)β₂ = 180p/((5p−40)(5p−18))."""
    return Fraction(3, 2) * solve_alphas(p).rho0


@dataclass(frozen=True)
class SeriesSums:
    p: Fraction
    b_gamma: Fraction
    b_w: Fraction
    b_tau: Fraction

    def as_dict(self):
        return {"b_gamma": str(self.b_gamma), "b_w": str(self.b_w), "b_tau": str(self.b_tau)}


def series_sums(p):
    coeffs = solve_alphas(p)
    rho = Fraction(3, 2) * coeffs.rho0
    if rho >= 1:
        raise DivergenceError(f"series diverge at p={coeffs.p}: ratio {rho} ≥ 1", ratio=rho)
    a1, a2, b2 = coeffs.alpha1, coeffs.alpha2, coeffs.beta2
    return SeriesSums(
        p=coeffs.p,
        b_gamma=2 * (1 - a1) + 3 * a1 * (1 - a2) * (1 - b2) / (1 - rho),
        b_w=a1 * (1 - a2) / (1 - rho),
        b_tau=2 * a1 * a2 / (1 - rho),
    )


def closed_forms(p):
    """The three series as rational functions of p."""
    p = as_fraction(p)
    D = 5 * p ** 2 - 94 * p + 144
    return SeriesSums(
        p=p,
        b_gamma=6 * (13 * p - 216) / D,
        b_w=32 * (p - 9) / D,
        b_tau=2 * (648 - 117 * p + 5 * p ** 2) / (144 - 94 * p + 5 * p ** 2),
    )


def lambda_from_sums(p, b_gamma, b_w, b_tau):
    p = as_fraction(p)
    return (Fraction(1, 2) - Fraction(3, 8)) * (b_gamma + b_w) + (Fraction(3, 8) - 1 / p) * b_tau


def lambda0(p):
    sums = series_sums(p)
    return lambda_from_sums(sums.p, sums.b_gamma, sums.b_w, sums.b_tau)


# ═══════════════════════════════════════════════════════════════════════════════
# η and the rewritten expression
# ═══════════════════════════════════════════════════════════════════════════════

def geometric_factor(G, M):
    """(1 − G^M)/(1 − G), which is M when G = 1."""
    if G == 1:
        return Fraction(M)
    return (1 - G ** M) / (1 - G)


def u_bound(r, M):
    """Largest u with u·(2(3/2)^r)^M ≤ 2."""
    return 2 / (2 * Fraction(3, 2) ** r) ** M


@dataclass(frozen=True)
class NumerologyReport:
    p: Fraction
    mu: Fraction
    u: Fraction
    r: int
    M: int
    eta_p: Fraction
    finite: SeriesSums
    infinite: SeriesSums
    lambda0: Fraction
    lambda_finite: Fraction
    geometric: Fraction
    eta: Fraction
    eta_tilde: Fraction
    dominant_coefficient: Fraction
    dominant_term: Fraction
    expression: Fraction | None

    @property
    def expression_sign(self):
        if self.expression is None:
            return None
        return (self.expression > 0) - (self.expression < 0)

    def as_dict(self):
        return {
            "parameters": {
                "p": str(self.p),
                "mu": str(self.mu),
                "u": str(self.u),
                "r": self.r,
                "M": self.M,
                "eta_p": str(self.eta_p),
            },
            "sums_finite": self.finite.as_dict(),
            "sums_infinite": self.infinite.as_dict(),
            "lambda0": str(self.lambda0),
            "lambda_finite": str(self.lambda_finite),
            "geometric_factor": str(self.geometric),
            "eta": str(self.eta),
            "eta_tilde": str(self.eta_tilde),
            "dominant": {
                "coefficient": str(self.dominant_coefficient),
                "value": str(self.dominant_term),
                "sign": (self.dominant_term > 0) - (self.dominant_term < 0),
            },
            "expression": None if self.expression is None else {
                "value": str(self.expression),
                "sign": self.expression_sign,
            },
            "opaque_constants": list(OPAQUE_CONSTANTS),
        }


def eta(p, mu, u, r, M, eta_p):
    """η_{p,μ,u,r,M} after substituting V_p(δ) ≲ δ^{−(η_p+μ)}."""
    mu, u, eta_p = as_fraction(mu), as_fraction(u), as_fraction(eta_p)
    if M < 1:
        raise ParameterError(f"M must be at least 1, got {M}")
    if u < 0 or mu < 0:
        raise ParameterError("u and mu must be non-negative")
    if u > u_bound(r, M):
        raise ParameterError(f"u={u} violates u·(2(3/2)^r)^M ≤ 2 for r={r}, M={M}")

    seq = sequences(p, r)
    infinite = series_sums(p)
    lam = lambda_from_sums(seq.p, infinite.b_gamma, infinite.b_w, infinite.b_tau)
    G, T = seq.sum_b_gamma, seq.sum_b_tau
    finite = SeriesSums(seq.p, G, seq.sum_b_w, T)
    geom = geometric_factor(G, M)
    G_M = G ** M
    weight = mu + eta_p

    value = u * lam * geom + 2 * u * G_M + weight * (1 - u * G_M - u / 2 * T * geom)
    coefficient = lam - Fraction(1, 2) * weight * T
    dominant = coefficient * geom
    expression = None
    if u > 0:
        expression = dominant + Fraction(5, 4) + mu / u + (2 - weight) * G_M
    logger.debug("eta at p=%s r=%d M=%d: dominant coefficient %s", seq.p, r, M, coefficient)
    return NumerologyReport(
        p=seq.p, mu=mu, u=u, r=r, M=M, eta_p=eta_p,
        finite=finite,
        infinite=infinite,
        lambda0=lam,
        lambda_finite=lambda_from_sums(seq.p, G, seq.sum_b_w, T),
        geometric=geom,
        eta=value,
        eta_tilde=value + Fraction(5, 4) * u,
        dominant_coefficient=coefficient,
        dominant_term=dominant,
        expression=expression,
    )


def weighted_partial_sums(p, r_max):
    """Yield (r, Σ_{i≤r} b_iγ_i, Σ_{i≤r} b_iτ_i) for r = 1..r_max without rebuilding the sequences."""
    coeffs = solve_alphas(p)
    if r_max < 1:
        raise ParameterError(f"r_max must be at least 1, got {r_max}")
    a1, a2, b2 = coeffs.alpha1, coeffs.alpha2, coeffs.beta2
    rho0 = coeffs.rho0
    step = a1 * (1 - a2) * (1 - b2)
    G = 2 * (1 - a1)
    head = Fraction(0)  # Σ_{i<r} b_i α₁α₂ρ₀^i
    b, power = Fraction(2), Fraction(1)
    for r in range(1, r_max + 1):
        head += b * a1 * a2 * power
        G += 3 * b / 2 * step * power
        b, power = 3 * b / 2, power * rho0
        yield r, G, head + b * a1 * power


def convergence_profile(p, r_max):
    """Finite sums against their limits for r = 1..r_max."""
    infinite = series_sums(p)
    rows = []
    for r, G, T in weighted_partial_sums(p, r_max):
        rows.append({
            "r": r,
            "sum_b_gamma": str(G),
            "sum_b_tau": str(T),
            "gap_b_gamma": str(infinite.b_gamma - G),
            "gap_b_tau": str(infinite.b_tau - T),
        })
    return rows
