"""Limit cumulant generating function, Legendre transform, and the
large-deviation rate profile of the scaled terminal height K_n / n.

For balanced quadratic drift the n-normalized cumulant generating function
converges to F(theta) = log(tau(1) / tau(e^theta)), a strictly convex
function whose derivative sweeps (0, 1); its Legendre transform I(u) is the
speed-n decay rate of p_{n, floor(u n)}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .closedform import SingularityMap
from .errors import ConvergenceError, DomainError, RegimeError
from .exact import final_log_row
from .model import ModelParams, Regime, classify, is_balanced
from .specfun import log_sum_exp

THETA_LIMIT = 60.0  # |theta| beyond this saturates F' in double precision

INFINITE_RATE = math.inf


@dataclass(frozen=True)
class CgfValues:
    value: float
    deriv1: float
    deriv2: float


def _require_quadratic_balanced(params: ModelParams) -> Regime:
    if params.is_degenerate:
        raise DomainError(
            "degenerate model (alpha0 = a = 0): height is a point mass at 0"
        )
    if not is_balanced(params):
        raise RegimeError(
            f"limit CGF requires balanced parameters; beta0={params.beta0} "
            f"!= b={params.b}"
        )
    regime = classify(params)
    if not regime.is_quadratic:
        raise RegimeError(
            "no speed-n large-deviation scale when A = 0 "
            f"(drift regime {regime.kind.value})"
        )
    return regime


def limit_cgf(params: ModelParams, theta: float) -> CgfValues:
    """F(theta) = log(tau(1)/tau(e^theta)) with F' and F''.

    F'(theta) = x*chi(x) and F''(theta) = x*chi(x) + x^2*chi'(x) at
    x = e^theta, where chi = -tau'/tau and chi' = chi^2 - tau''/tau.
    """
    _require_quadratic_balanced(params)
    smap = SingularityMap(params)
    x = math.exp(theta)
    der = smap.derivatives(x)
    tau1 = smap.tau(1.0)
    chi = der.chi
    chi_prime = chi * chi - der.tau2 / der.tau
    return CgfValues(
        value=math.log(tau1) - math.log(der.tau),
        deriv1=x * chi,
        deriv2=x * chi + x * x * chi_prime,
    )


@dataclass(frozen=True)
class RatePoint:
    u: float
    theta: float
    rate: float


def rate_function(params: ModelParams, u: float) -> RatePoint:
    """I(u) = u*theta(u) - F(theta(u)) with F'(theta(u)) = u, 0 < u < 1.

    Solved by safeguarded Newton; a ConvergenceError signals that u is
    numerically indistinguishable from 0 or 1 within |theta| <= 60.
    """
    _require_quadratic_balanced(params)
    if not 0.0 < u < 1.0:
        raise DomainError(f"u must be in (0, 1), got {u}")

    lo, hi = None, None
    theta = 0.0
    step = 1.0
    g0 = limit_cgf(params, 0.0).deriv1 - u
    if g0 == 0.0:
        return RatePoint(u, 0.0, 0.0)
    if g0 > 0:
        hi = 0.0
        probe = -step
        while probe >= -THETA_LIMIT:
            if limit_cgf(params, probe).deriv1 - u <= 0:
                lo = probe
                break
            hi = probe
            probe -= step
            step *= 2.0
        if lo is None:
            raise ConvergenceError(
                f"F'(theta) stays above u={u} down to theta={-THETA_LIMIT}"
            )
    else:
        lo = 0.0
        probe = step
        while probe <= THETA_LIMIT:
            if limit_cgf(params, probe).deriv1 - u >= 0:
                hi = probe
                break
            lo = probe
            probe += step
            step *= 2.0
        if hi is None:
            raise ConvergenceError(
                f"F'(theta) stays below u={u} up to theta={THETA_LIMIT}"
            )

    theta = 0.5 * (lo + hi)
    for _ in range(100):
        vals = limit_cgf(params, theta)
        resid = vals.deriv1 - u
        if abs(resid) <= 1e-13:
            break
        if resid > 0:
            hi = theta
        else:
            lo = theta
        theta_next = theta - resid / vals.deriv2 if vals.deriv2 > 0 else 0.5 * (lo + hi)
        if not lo < theta_next < hi:
            theta_next = 0.5 * (lo + hi)
        if theta_next == theta:
            break
        theta = theta_next
    else:
        raise ConvergenceError(f"rate solve for u={u} did not converge")
    vals = limit_cgf(params, theta)
    return RatePoint(u, theta, u * theta - vals.value)


def rate_closed_form_double_root(r: float, u: float) -> float:
    """Closed-form rate for a double root at r <= 0:

    I(u) = u log u + (1-u) log(1-u) + (u-1) log(-r) + log(1-r).

    At r = 0 the limit profile degenerates: infinite rate for u < 1, zero
    at u = 1.
    """
    if r > 0:
        raise DomainError(f"double root must satisfy r <= 0, got {r}")
    if not 0.0 < u <= 1.0:
        raise DomainError(f"u must be in (0, 1], got {u}")
    if r == 0.0:
        return 0.0 if u == 1.0 else INFINITE_RATE
    entropy = u * math.log(u) + ((1.0 - u) * math.log(1.0 - u) if u < 1.0 else 0.0)
    return entropy + (u - 1.0) * math.log(-r) + math.log(1.0 - r)


@dataclass(frozen=True)
class RateProfile:
    """Sampled (u, theta(u), I(u)) triples for one parameter set."""

    regime: Regime
    u: np.ndarray
    theta: np.ndarray
    rate: np.ndarray


def rate_profile(params: ModelParams, u_grid) -> RateProfile:
    """Rate profile via the Legendre transform at each u in u_grid."""
    regime = _require_quadratic_balanced(params)
    points = [rate_function(params, float(u)) for u in u_grid]
    return RateProfile(
        regime=regime,
        u=np.array([pt.u for pt in points]),
        theta=np.array([pt.theta for pt in points]),
        rate=np.array([pt.rate for pt in points]),
    )


def parametrized_profile(params: ModelParams, x_grid) -> RateProfile:
    """Rate profile via the x-parametrization u = x*chi(x),
    I = u*log x - log(tau(1)/tau(x)); theta(u) = log x."""
    regime = _require_quadratic_balanced(params)
    smap = SingularityMap(params)
    tau1 = smap.tau(1.0)
    us, thetas, rates = [], [], []
    for x in x_grid:
        x = float(x)
        if not x > 0:
            raise DomainError(f"x grid must be positive, got {x}")
        der = smap.derivatives(x)
        u = x * der.chi
        us.append(u)
        thetas.append(math.log(x))
        rates.append(u * math.log(x) - (math.log(tau1) - math.log(der.tau)))
    return RateProfile(
        regime=regime,
        u=np.array(us),
        theta=np.array(thetas),
        rate=np.array(rates),
    )


@dataclass(frozen=True)
class EmpiricalRateRow:
    u: float
    n: int
    empirical: float  # -(1/n) log p_{n, floor(u n)}
    rate: float


def empirical_rate_check(params: ModelParams, u_grid, n_list) -> list[EmpiricalRateRow]:
    """Exact finite-n decay rates against I(u) on a (u, n) grid."""
    _require_quadratic_balanced(params)
    rates = {float(u): rate_function(params, float(u)).rate for u in u_grid}
    rows = []
    for n in sorted(int(n) for n in n_list):
        log_row = final_log_row(params, n)
        log_total = log_sum_exp(log_row)
        for u in u_grid:
            u = float(u)
            k = math.floor(u * n)
            log_p = float(log_row[k]) - log_total
            rows.append(
                EmpiricalRateRow(u=u, n=n, empirical=-log_p / n, rate=rates[u])
            )
    return rows
