"""Exact weight triangles, the normalized height distribution, and a
path-enumeration oracle.

The triangle row recurrence is

    w[n+1][k] = alpha_{k-1} w[n][k-1] + gamma_k w[n][k] + beta_k w[n][k+1]

with w[0][0] = 1 and out-of-range entries zero.  Two representations are
supported: exact arbitrary-precision integers (weights grow factorially for
height-linear multiplicities) and log-space doubles, which carry n into the
tens of thousands.  Zero weights map to -inf in log space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Literal

import numpy as np

from .errors import CapacityError, DomainError
from .model import ModelParams
from .specfun import LOG_ZERO, log_sum_exp

Representation = Literal["exact", "log_space"]

# Default budget on the total stored integer size of an exact build (bits).
DEFAULT_BIT_BUDGET = 1 << 30

ORACLE_MAX_N = 14


@dataclass
class Triangle:
    """Weight array rows[n][k], n = 0..n_max, in one representation."""

    params: ModelParams
    n_max: int
    representation: Representation
    rows: list  # list[list[int]] for "exact", list[np.ndarray] for "log_space"

    def row(self, n: int):
        self._check_index(n)
        return self.rows[n]

    def log_row(self, n: int) -> np.ndarray:
        """Row n as log weights (converting on demand for exact builds)."""
        self._check_index(n)
        if self.representation == "log_space":
            return self.rows[n]
        return np.array(
            [math.log(w) if w > 0 else LOG_ZERO for w in self.rows[n]], dtype=float
        )

    def _check_index(self, n: int) -> None:
        if not 0 <= n <= self.n_max:
            raise DomainError(f"row {n} outside built range 0..{self.n_max}")


def _log_weight_tables(params: ModelParams, n_max: int):
    k = np.arange(n_max + 2, dtype=float)
    with np.errstate(divide="ignore"):
        la = np.log(params.a * k + params.alpha0)
        lb = np.log(params.b * k + params.beta0)
        lg = np.log(params.c * k + params.gamma0)
    return la, lb, lg


def iter_log_rows(params: ModelParams, n_max: int) -> Iterator[np.ndarray]:
    """Yield log-space rows 0..n_max keeping O(n) memory."""
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")
    la, lb, lg = _log_weight_tables(params, n_max)
    row = np.zeros(1)
    yield row
    for n in range(n_max):
        up = np.concatenate(([LOG_ZERO], la[: n + 1] + row))
        stay = np.concatenate((lg[: n + 1] + row, [LOG_ZERO]))
        down = np.concatenate((lb[:n] + row[1:], [LOG_ZERO, LOG_ZERO]))
        row = np.logaddexp(np.logaddexp(up, stay), down)
        yield row


def final_log_row(params: ModelParams, n: int) -> np.ndarray:
    """Log-space row n only (streaming build)."""
    for row in iter_log_rows(params, n):
        pass
    return row


def build_triangle(
    params: ModelParams,
    n_max: int,
    representation: Representation = "exact",
    bit_budget: int | None = DEFAULT_BIT_BUDGET,
) -> Triangle:
    """Build rows 0..n_max of the weight triangle.

    Exact builds raise CapacityError once the cumulative integer size passes
    `bit_budget` bits (None disables the check).
    """
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")
    if representation == "log_space":
        return Triangle(params, n_max, representation, list(iter_log_rows(params, n_max)))
    if representation != "exact":
        raise DomainError(f"unknown representation {representation!r}")

    rows: list[list[int]] = [[1]]
    bits_used = 1
    for n in range(n_max):
        prev = rows[n]
        nxt = []
        for k in range(n + 2):
            w = 0
            if k >= 1:
                w += params.up_weight(k - 1) * prev[k - 1]
            if k <= n:
                w += params.level_weight(k) * prev[k]
            if k + 1 <= n:
                w += params.down_weight(k) * prev[k + 1]
            nxt.append(w)
        rows.append(nxt)
        if bit_budget is not None:
            bits_used += sum(w.bit_length() for w in nxt)
            if bits_used > bit_budget:
                raise CapacityError(
                    f"exact triangle exceeds {bit_budget} bits at row {n + 1}; "
                    "use representation='log_space' or raise bit_budget"
                )
    return Triangle(params, n_max, "exact", rows)


def brute_force_oracle(params: ModelParams, n: int) -> list[int]:
    """Row n by enumerating every {up, level, down} step string.

    Independent of the triangle recurrence: each surviving path multiplies
    the weight of an up- or level-step leaving its current height and of a
    down-step arriving at its target height.  Exponential in n.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n > ORACLE_MAX_N:
        raise CapacityError(
            f"oracle enumerates 3^n paths; n={n} exceeds the limit {ORACLE_MAX_N}"
        )
    totals = [0] * (n + 1)

    def walk(steps_left: int, height: int, weight: int) -> None:
        if steps_left == 0:
            totals[height] += weight
            return
        w_up = params.up_weight(height)
        if w_up:
            walk(steps_left - 1, height + 1, weight * w_up)
        w_level = params.level_weight(height)
        if w_level:
            walk(steps_left - 1, height, weight * w_level)
        if height > 0:
            w_down = params.down_weight(height - 1)
            if w_down:
                walk(steps_left - 1, height - 1, weight * w_down)

    walk(n, 0, 1)
    return totals


def polynomial_eval(triangle: Triangle, n: int, x: float) -> float:
    """log of sum_k w[n][k] x^k for x > 0 (stable log-sum-exp)."""
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    lw = triangle.log_row(n)
    k = np.arange(lw.size, dtype=float)
    return log_sum_exp(lw + k * math.log(x))


@dataclass
class HeightDistribution:
    """Normalized terminal-height law at a fixed length n.

    log_p holds the n+1 log probabilities; log_total is the log of the
    normalizing row sum.
    """

    n: int
    log_p: np.ndarray
    mean: float
    variance: float
    log_total: float


def _distribution_from_log_row(n: int, log_row: np.ndarray) -> HeightDistribution:
    log_total = log_sum_exp(log_row)
    if log_total == LOG_ZERO:
        raise DomainError(f"row {n} carries no mass")
    log_p = log_row - log_total
    k = np.arange(n + 1, dtype=float)
    with np.errstate(divide="ignore"):
        log_k = np.log(k)
        log_kk1 = np.log(k) + np.log(np.maximum(k - 1.0, 0.0))
    mean = math.exp(log_sum_exp(log_p + log_k)) if n >= 1 else 0.0
    if n >= 2:
        ekk1 = math.exp(log_sum_exp((log_p + log_kk1)[2:]))
    else:
        ekk1 = 0.0
    variance = ekk1 + mean - mean * mean
    if mean > 0 and variance < 1e-6 * mean:
        # Factorial-moment form cancels catastrophically for near-degenerate
        # laws; fall back to a compensated direct second central moment.
        p = np.exp(log_p)
        variance = math.fsum(p * (k - mean) ** 2)
    variance = max(variance, 0.0)
    return HeightDistribution(n, log_p, mean, variance, log_total)


def distribution(triangle: Triangle, n: int) -> HeightDistribution:
    """Normalized height distribution of row n of a built triangle."""
    return _distribution_from_log_row(n, triangle.log_row(n))


def height_distribution(params: ModelParams, n: int) -> HeightDistribution:
    """Height distribution at length n via the streaming log-space build."""
    return _distribution_from_log_row(n, final_log_row(params, n))
