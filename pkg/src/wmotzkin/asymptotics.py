"""One-saddle asymptotics: row-sum growth, moments, and the Gaussian
central window, per drift regime.

Quadratic regimes (A > 0) use the coalescing-singularity master formula
driven by tau(x); the constant regime has an exact two-variable Hermite
representation plus a quadratic saddle; the linear regime has a
transcendental saddle located by the Lambert W function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .closedform import SingularityMap
from .errors import ConvergenceError, DomainError, RegimeError
from .model import DriftKind, ModelParams, Regime, classify, is_balanced
from .specfun import hermite_kdf_sequence, lambert_w0, log_gamma

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Leading-order log row sum at (x, n) plus the length-n moments."""

    log_pn: float
    mu: float
    sigma2: float
    regime: Regime
    n: int
    x: float


@dataclass(frozen=True)
class LinearDriftEstimate(AsymptoticEstimate):
    """Linear-drift estimate, exposing the solved saddle and its W seed."""

    t_star: float = 0.0
    t_star_seed: float = 0.0


def _require(params: ModelParams, kinds: tuple[DriftKind, ...]) -> Regime:
    if params.is_degenerate:
        raise DomainError(
            "degenerate model (alpha0 = a = 0): height is a point mass at 0"
        )
    if not is_balanced(params):
        raise RegimeError(
            f"asymptotic formulas require balanced parameters; "
            f"beta0={params.beta0} != b={params.b}"
        )
    regime = classify(params)
    if regime.kind not in kinds:
        expected = "/".join(k.value for k in kinds)
        raise RegimeError(f"expected {expected} drift, got {regime.kind.value}")
    return regime


def log_pn_quadratic(params: ModelParams, x: float, n: int) -> AsymptoticEstimate:
    """Master estimate of log P_n(x) for A > 0, any quadratic sub-regime."""
    regime = _require(
        params,
        (DriftKind.TWO_REAL_ROOTS, DriftKind.DOUBLE_ROOT, DriftKind.COMPLEX_ROOTS),
    )
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    smap = SingularityMap(params)
    tau = smap.tau(x)
    nu = regime.nu
    log_amp = _log_amplitude(regime, x, tau)
    # sqrt(2 pi)/Gamma(nu) * amp(x) * e^{c0 tau} * n^{nu-1/2} * (n/(e tau))^n
    log_pn = (
        _LOG_SQRT_2PI
        - log_gamma(nu)
        + log_amp
        + regime.c0 * tau
        + (nu - 0.5) * math.log(n)
        + n * (math.log(n) - 1.0 - math.log(tau))
    )
    mu, sigma2 = asymptotic_moments(params, n)
    return AsymptoticEstimate(log_pn, mu, sigma2, regime, n, x)


def _log_amplitude(regime: Regime, x: float, tau: float) -> float:
    """Local amplitude of the blow-up, w ~ amp * e^{c0 t} (1 - t/tau)^{-nu}.

    Expanding each closed form at its singular time gives the unified value
    amp(x) = (A * tau(x) * R(x))^{-nu} with R = x - r2 (two real roots),
    x - r (double root; amp is then exactly 1), or hypot(x-p, q).
    """
    nu = regime.nu
    A = regime.coeffs.A
    if regime.kind is DriftKind.TWO_REAL_ROOTS:
        radial = x - regime.r2
    elif regime.kind is DriftKind.DOUBLE_ROOT:
        return 0.0
    else:
        radial = math.hypot(x - regime.p, regime.q)
    return -nu * (math.log(A) + math.log(tau) + math.log(radial))


def asymptotic_moments(params: ModelParams, n: int) -> tuple[float, float]:
    """Leading-order mean and variance for A > 0:

    mu_n = n*chi(1),  sigma2_n = mu_n + n*(chi(1)^2 - tau''(1)/tau(1)).
    """
    _require(
        params,
        (DriftKind.TWO_REAL_ROOTS, DriftKind.DOUBLE_ROOT, DriftKind.COMPLEX_ROOTS),
    )
    der = SingularityMap(params).derivatives(1.0)
    chi = der.chi
    mu = n * chi
    sigma2 = mu + n * (chi * chi - der.tau2 / der.tau)
    return mu, sigma2


def gaussian_local_law(mu: float, sigma2: float, k: float) -> float:
    """Central-window Gaussian point-probability estimate."""
    if not sigma2 > 0:
        raise DomainError(f"sigma2 must be positive, got {sigma2}")
    z = (k - mu) ** 2 / (2.0 * sigma2)
    return math.exp(-z) / math.sqrt(2.0 * math.pi * sigma2)


def log_pn_constant_drift(params: ModelParams, x: float, n: int) -> AsymptoticEstimate:
    """Saddlepoint estimate of log P_n(x) for the constant regime A = B = 0.

    The saddle solves Y t^2 + X t - (n+1) = 0 with X = alpha0*x + gamma0 and
    Y = alpha0*C.  Moments come from the exact Hermite-ratio identities.
    """
    regime = classify(params)
    if regime.kind is not DriftKind.CONSTANT:
        raise RegimeError(f"expected constant drift, got {regime.kind.value}")
    if not is_balanced(params):
        raise RegimeError(
            f"constant-drift closed form requires balance; "
            f"beta0={params.beta0} != b={params.b}"
        )
    if params.alpha0 == 0 and params.gamma0 == 0:
        raise DomainError("degenerate constant drift: alpha0 = gamma0 = 0")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    X = params.alpha0 * x + params.gamma0
    Y = params.alpha0 * regime.coeffs.C
    if Y == 0.0:
        t_star = (n + 1) / X
    else:
        t_star = (-X + math.sqrt(X * X + 4.0 * Y * (n + 1))) / (2.0 * Y)
    curvature = Y + (n + 1) / (t_star * t_star)
    log_pn = (
        log_gamma(n + 1)
        - 0.5 * math.log(2.0 * math.pi * curvature)
        + X * t_star
        + 0.5 * Y * t_star * t_star
        - (n + 1) * math.log(t_star)
    )
    mu, sigma2 = constant_drift_moments(params, n)
    return AsymptoticEstimate(log_pn, mu, sigma2, regime, n, x)


def log_pn_constant_drift_exact(params: ModelParams, x: float, n: int) -> float:
    """Exact log P_n(x) for A = B = 0 via P_n(x) = H_n(X, Y).

    With Y = 0 this is the closed power form n*log(alpha0*x + gamma0).
    """
    regime = classify(params)
    if regime.kind is not DriftKind.CONSTANT:
        raise RegimeError(f"expected constant drift, got {regime.kind.value}")
    if not is_balanced(params):
        raise RegimeError("constant-drift identity requires balanced parameters")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    X = params.alpha0 * x + params.gamma0
    Y = params.alpha0 * regime.coeffs.C
    if X == 0.0 and Y == 0.0:
        raise DomainError("degenerate constant drift: alpha0 = gamma0 = 0")
    if Y == 0.0:
        return n * math.log(X)
    log_mag, sign = hermite_kdf_sequence(X, Y, n)[n]
    if sign <= 0:
        raise DomainError(f"H_{n}({X}, {Y}) is not positive; no real log")
    return log_mag


def constant_drift_moments(params: ModelParams, n: int) -> tuple[float, float]:
    """Mean/variance at length n from the Hermite-ratio identities (exact)."""
    regime = classify(params)
    if regime.kind is not DriftKind.CONSTANT:
        raise RegimeError(f"expected constant drift, got {regime.kind.value}")
    if params.is_degenerate:
        return (0.0, 0.0)
    X1 = params.alpha0 + params.gamma0
    Y = params.alpha0 * regime.coeffs.C
    if n == 0:
        return (0.0, 0.0)
    seq = hermite_kdf_sequence(X1, Y, n)
    log_hn = seq[n][0]
    mu = params.alpha0 * n * math.exp(seq[n - 1][0] - log_hn)
    if n >= 2:
        ratio2 = math.exp(seq[n - 2][0] - log_hn)
        ekk1 = params.alpha0**2 * n * (n - 1) * ratio2
    else:
        ekk1 = 0.0
    sigma2 = max(ekk1 + mu - mu * mu, 0.0)
    return mu, sigma2


def log_pn_linear_drift(params: ModelParams, x: float, n: int) -> LinearDriftEstimate:
    """Saddlepoint estimate of log P_n(x) for linear drift (A = 0, B > 0).

    The saddle t* > 0 solves (n+1)/t = a_lin + B*y(x)*e^{B t} with
    a_lin = gamma0 - alpha0*C/B and y(x) = (alpha0/B)(x + C/B); Newton is
    seeded with t = W(n/y(x))/B and safeguarded by bisection.
    """
    regime = _require(params, (DriftKind.LINEAR,))
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    B = regime.coeffs.B
    C = regime.coeffs.C
    y_x = (params.alpha0 / B) * (x + C / B)
    a_lin = params.gamma0 - params.alpha0 * C / B
    seed = lambert_w0(n / y_x) / B
    t_star = _solve_linear_saddle(a_lin, B, y_x, n, seed)
    lam = (params.alpha0 / B) * math.expm1(B * t_star)
    curvature = B * B * y_x * math.exp(B * t_star) + (n + 1) / (t_star * t_star)
    log_pn = (
        log_gamma(n + 1)
        - 0.5 * math.log(2.0 * math.pi * curvature)
        + a_lin * t_star
        + (C / B + x) * lam
        - (n + 1) * math.log(t_star)
    )
    frac_up = B / (B + C)
    w_s = lambert_w0(n / ((params.alpha0 / B) * (1.0 + C / B)))
    mu = frac_up * n / w_s
    sigma2 = frac_up * (1.0 - frac_up) * n / w_s + frac_up**2 * n / (w_s * w_s + w_s)
    return LinearDriftEstimate(
        log_pn, mu, sigma2, regime, n, x, t_star=t_star, t_star_seed=seed
    )


def _solve_linear_saddle(
    a_lin: float, B: float, y_x: float, n: int, seed: float
) -> float:
    """Root of f(t) = a_lin + B*y*e^{Bt} - (n+1)/t on t > 0 (f is increasing)."""

    def f(t: float) -> float:
        return a_lin + B * y_x * math.exp(B * t) - (n + 1) / t

    def fprime(t: float) -> float:
        return B * B * y_x * math.exp(B * t) + (n + 1) / (t * t)

    lo = 1e-12
    hi = max(seed, 1.0)
    while f(hi) < 0.0:
        hi *= 2.0
        if hi > 1e9:
            raise ConvergenceError("linear-drift saddle bracket blew up")
    t = min(max(seed, lo), hi)
    for _ in range(100):
        val = f(t)
        if val < 0.0:
            lo = t
        else:
            hi = t
        # Relative residual on the (n+1)/t scale.
        if abs(val) * t <= 1e-12 * (n + 1):
            return t
        step = val / fprime(t)
        t_next = t - step
        if not lo < t_next < hi:
            t_next = 0.5 * (lo + hi)
        t = t_next
    raise ConvergenceError("linear-drift saddle did not reach 1e-12 residual")
