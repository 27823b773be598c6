"""Numerical special functions and sign-aware log-space accumulation.

Everything downstream (exact rows, cumulants, two-variable Hermite values)
funnels its cancellation-prone sums through the signed log-sum-exp here, so
there is a single audited code path for them.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

LOG_ZERO = float("-inf")

_INV_E = math.exp(-1.0)
# Omega constant W(1), used as a fixed reference in tests and seeds.
OMEGA = 0.5671432904097838


def log_sum_exp(values) -> float:
    """log(sum(exp(values))) for nonnegative-term sums, max-shifted.

    -inf entries denote exact zeros and are skipped by the shift; the empty
    sum and the all--inf sum both return -inf.
    """
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        return LOG_ZERO
    m = float(np.max(arr))
    if m == LOG_ZERO:
        return LOG_ZERO
    if math.isinf(m):  # +inf dominates
        return m
    return m + math.log(float(np.sum(np.exp(arr - m))))


def signed_log_sum_exp(log_mags, signs) -> tuple[float, int]:
    """Accumulate terms given as (log magnitude, sign in {-1, 0, +1}).

    Returns (log magnitude, sign) of the signed sum; exact cancellation and
    the all-zero sum come back as (-inf, 0).
    """
    mags = np.asarray(log_mags, dtype=float)
    sgns = np.asarray(signs, dtype=int)
    if mags.shape != sgns.shape:
        raise ValueError("log_mags and signs must have matching shapes")
    live = (sgns != 0) & (mags > LOG_ZERO)
    if not np.any(live):
        return (LOG_ZERO, 0)
    mags = mags[live]
    sgns = sgns[live]
    m = float(np.max(mags))
    total = float(np.sum(sgns * np.exp(mags - m)))
    if total == 0.0:
        return (LOG_ZERO, 0)
    return (m + math.log(abs(total)), 1 if total > 0 else -1)


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def lambert_w0(z: float) -> float:
    """Principal branch of the Lambert W function, w*exp(w) = z, z >= -1/e.

    Seeds: the Maclaurin series for small |z|, the branch-point expansion in
    sqrt(2(e*z+1)) near -1/e, and log(z) - log(log(z)) for large z (Corless
    et al. 1996); Halley iterations then polish to ~1e-15 relative.
    """
    if math.isnan(z):
        raise DomainError("lambert_w0 is undefined for NaN")
    if z < -_INV_E:
        # Allow roundoff dust below the branch point.
        if z < -_INV_E * (1.0 + 1e-12) - 1e-300:
            raise DomainError(f"lambert_w0 requires z >= -1/e, got {z}")
        z = -_INV_E
    if z == 0.0:
        return 0.0

    if z < -0.32:
        # Branch-point series in p = sqrt(2(e z + 1)).
        p = math.sqrt(max(2.0 * (math.e * z + 1.0), 0.0))
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 - p * 43.0 / 540.0)))
        if p == 0.0:
            return -1.0
    elif abs(z) < 0.3:
        w = z * (1.0 + z * (-1.0 + z * (1.5 + z * (-8.0 / 3.0))))
    elif z > 3.0:
        l1 = math.log(z)
        l2 = math.log(l1)
        w = l1 - l2 + l2 / l1
    else:
        w = 0.5 * math.log1p(z)  # crude but inside Halley's basin on (0.3, 3]

    for _ in range(20):
        ew = math.exp(w)
        f = w * ew - z
        w1 = w + 1.0
        denom = ew * w1 - (w + 2.0) * f / (2.0 * w1)
        if denom == 0.0:
            break
        dw = f / denom
        w -= dw
        if abs(dw) <= 1e-16 * (1.0 + abs(w)):
            break
    return w


def hermite_kdf(x_coeff: float, y_coeff: float, n: int) -> tuple[float, int]:
    """H_n(X, Y) of the two-variable Hermite family with EGF exp(X t + Y t^2 / 2).

    Values satisfy H_0 = 1, H_1 = X, H_{m+1} = X H_m + m Y H_{m-1} and are
    returned as (log magnitude, sign) since X may be negative.
    """
    return hermite_kdf_sequence(x_coeff, y_coeff, n)[n]


def hermite_kdf_sequence(
    x_coeff: float, y_coeff: float, n: int
) -> list[tuple[float, int]]:
    """All of H_0..H_n as (log magnitude, sign) pairs."""
    if n < 0:
        raise DomainError(f"order must be nonnegative, got {n}")
    lx, sx = _signed_log(x_coeff)
    ly, sy = _signed_log(y_coeff)
    values = [(0.0, 1)]
    if n == 0:
        return values
    values.append((lx, sx))
    for m in range(1, n):
        lh, sh = values[m]
        lp, sp = values[m - 1]
        term_x = (lx + lh, sx * sh)
        term_y = (math.log(m) + ly + lp, sy * sp)
        values.append(
            signed_log_sum_exp([term_x[0], term_y[0]], [term_x[1], term_y[1]])
        )
    return values


def _signed_log(v: float) -> tuple[float, int]:
    if v == 0.0:
        return (LOG_ZERO, 0)
    return (math.log(abs(v)), 1 if v > 0 else -1)
