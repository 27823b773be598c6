"""Finite-n cumulants of the terminal height and the lattice saddlepoint
(Daniels) point-probability approximation.

All cumulants are taken directly from the exact log-space row, so the
machinery works for unbalanced parameters too; the uniform O(1/n) interior
error guarantee is only established for balanced A > 0 models, and
`CumulantEvaluator.uniform_error_applies` reports that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import asymptotics
from .errors import BoundaryError, ConvergenceError, DomainError
from .exact import _distribution_from_log_row, final_log_row
from .model import ModelParams, classify, is_balanced
from .specfun import LOG_ZERO


@dataclass(frozen=True)
class KappaValues:
    """kappa and its first four theta-derivatives (tilted cumulants)."""

    kappa: float
    mean: float
    variance: float
    third: float
    fourth: float


@dataclass(frozen=True)
class SaddleResult:
    theta: float
    kappa: float
    kappa1: float
    kappa2: float
    log_p_daniels: float
    iterations: int


class CumulantEvaluator:
    """kappa_n(theta) = log sum_k w[n][k] e^{theta k} and its derivatives."""

    def __init__(self, log_row: np.ndarray, uniform_error_applies: bool | None = None):
        log_row = np.asarray(log_row, dtype=float)
        if log_row.ndim != 1 or log_row.size == 0:
            raise DomainError("log_row must be a nonempty 1-d array")
        if np.all(log_row == LOG_ZERO):
            raise DomainError("row carries no mass")
        self.log_row = log_row
        self.n = log_row.size - 1
        self.k = np.arange(log_row.size, dtype=float)
        self.uniform_error_applies = uniform_error_applies
        finite = np.nonzero(log_row > LOG_ZERO)[0]
        self.k_min = int(finite[0])
        self.k_max = int(finite[-1])

    @classmethod
    def from_params(cls, params: ModelParams, n: int) -> "CumulantEvaluator":
        applies = is_balanced(params) and classify(params).is_quadratic
        return cls(final_log_row(params, n), uniform_error_applies=applies)

    def kappa(self, theta: float, order: int = 2) -> KappaValues:
        """Tilted cumulants at theta; orders above `order` are returned as 0."""
        if not 0 <= order <= 4:
            raise DomainError(f"order must be in 0..4, got {order}")
        shifted = self.log_row + theta * self.k
        m = float(np.max(shifted))
        z = np.exp(shifted - m)
        total = float(np.sum(z))
        kappa = m + math.log(total)
        if order == 0:
            return KappaValues(kappa, 0.0, 0.0, 0.0, 0.0)
        p = z / total
        mean = float(np.dot(p, self.k))
        if order == 1:
            return KappaValues(kappa, mean, 0.0, 0.0, 0.0)
        d = self.k - mean
        variance = max(float(np.dot(p, d * d)), 0.0)
        third = float(np.dot(p, d**3)) if order >= 3 else 0.0
        fourth = float(np.dot(p, d**4)) - 3.0 * variance**2 if order >= 4 else 0.0
        return KappaValues(kappa, mean, variance, third, fourth)

    def tilted_log_pmf(self, theta: float) -> np.ndarray:
        """Log probabilities of the theta-tilted law."""
        shifted = self.log_row + theta * self.k
        m = float(np.max(shifted))
        norm = m + math.log(float(np.sum(np.exp(shifted - m))))
        return shifted - norm

    def solve_saddle(self, k: int) -> SaddleResult:
        """Tilt theta with tilted mean k, by safeguarded Newton on kappa'."""
        if k <= 0 or k >= self.n:
            raise BoundaryError(
                f"saddle diverges at the lattice boundary (k={k}, n={self.n})"
            )
        if k <= self.k_min or k >= self.k_max:
            raise BoundaryError(
                f"no mass beyond k={k}: support is [{self.k_min}, {self.k_max}]"
            )
        tol = 1e-9 * max(1.0, float(k))

        lo, hi = 0.0, 0.0
        step = 1.0
        start = self.kappa(0.0, order=1).mean
        if start > k:
            while True:
                lo -= step
                if self.kappa(lo, order=1).mean <= k:
                    hi = lo + step
                    break
                step *= 2.0
        else:
            while True:
                hi += step
                if self.kappa(hi, order=1).mean >= k:
                    lo = hi - step
                    break
                step *= 2.0

        theta = 0.5 * (lo + hi)
        for iteration in range(1, 81):
            vals = self.kappa(theta, order=2)
            resid = vals.mean - k
            if abs(resid) <= tol:
                log_p = (
                    -0.5 * math.log(2.0 * math.pi * vals.variance)
                    + vals.kappa
                    - self.kappa(0.0, order=0).kappa
                    - k * theta
                )
                return SaddleResult(
                    theta, vals.kappa, vals.mean, vals.variance, log_p, iteration
                )
            if resid > 0:
                hi = theta
            else:
                lo = theta
            if vals.variance > 0:
                theta_next = theta - resid / vals.variance
            else:
                theta_next = 0.5 * (lo + hi)
            if not lo < theta_next < hi:
                theta_next = 0.5 * (lo + hi)
            theta = theta_next
        raise ConvergenceError(f"saddle solve for k={k} did not converge")

    def daniels_log_pmf(self, k: int) -> float:
        """Daniels lattice saddlepoint log probability at interior k."""
        return self.solve_saddle(k).log_p_daniels


@dataclass(frozen=True)
class ProfileRow:
    k: int
    log_p_exact: float
    log_p_daniels: float
    log_p_gaussian: float


def profile(params: ModelParams, n: int, epsilon: float) -> list[ProfileRow]:
    """Exact / Daniels / Gaussian log probabilities for k in [eps*n, (1-eps)*n].

    The Gaussian column evaluates the central window law at the exact row
    mean and variance.
    """
    if not 0.0 < epsilon < 0.5:
        raise DomainError(f"epsilon must be in (0, 1/2), got {epsilon}")
    log_row = final_log_row(params, n)
    dist = _distribution_from_log_row(n, log_row)
    ev = CumulantEvaluator(
        log_row,
        uniform_error_applies=is_balanced(params) and classify(params).is_quadratic,
    )
    k_lo = math.ceil(epsilon * n)
    k_hi = math.floor((1.0 - epsilon) * n)
    rows = []
    for k in range(k_lo, k_hi + 1):
        gauss = asymptotics.gaussian_local_law(dist.mean, dist.variance, k)
        rows.append(
            ProfileRow(
                k=k,
                log_p_exact=float(dist.log_p[k]),
                log_p_daniels=ev.daniels_log_pmf(k),
                log_p_gaussian=math.log(gauss) if gauss > 0 else LOG_ZERO,
            )
        )
    return rows
