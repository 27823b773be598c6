"""Closed-form evaluation of the balanced height-generating function.

In the balanced case (beta0 == C) the exponential generating function
w(x, t) = sum_n P_n(x) t^n / n! has an explicit closed form per drift
regime.  When A > 0 it blows up at the moving singular time t = tau(x),
the smallest positive singularity; for A = 0 it is entire in t.

Derivatives of tau reuse one identity: along the drift flow dx/dt = -Q(x)
the time to blow-up satisfies tau'(x) = -1/Q(x), hence
tau''(x) = Q'(x)/Q(x)^2, the same in all three quadratic regimes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError, RegimeError
from .model import DriftKind, ModelParams, Regime, classify, is_balanced

_TWO_PI = 2.0 * math.pi


def _require_balanced(params: ModelParams) -> Regime:
    if not is_balanced(params):
        raise RegimeError(
            f"closed forms require balanced parameters (beta0 == b); "
            f"got beta0={params.beta0}, b={params.b}"
        )
    return classify(params)


@dataclass(frozen=True)
class TauDerivatives:
    tau: float
    tau1: float
    tau2: float

    @property
    def chi(self) -> float:
        """Logarithmic sensitivity -tau'/tau of the singular time."""
        return -self.tau1 / self.tau


class SingularityMap:
    """Smallest positive singular time tau(x) and its derivatives (A > 0).

    The domain is the real component containing x = 1: x > r2 for two real
    roots, x > r for a double root, and x > 0 for complex roots.
    """

    def __init__(self, params: ModelParams):
        regime = classify(params)
        if not regime.is_quadratic:
            raise RegimeError(
                "no moving singularity when A = 0; "
                f"drift regime is {regime.kind.value}"
            )
        self.params = params
        self.regime = regime

    @property
    def domain_low(self) -> float:
        regime = self.regime
        if regime.kind is DriftKind.TWO_REAL_ROOTS:
            return regime.r2
        if regime.kind is DriftKind.DOUBLE_ROOT:
            return regime.r
        return 0.0

    def _check_domain(self, x: float) -> None:
        if not x > self.domain_low:
            raise DomainError(
                f"x={x} outside the singularity domain x > {self.domain_low} "
                f"for {self.regime.describe()}"
            )

    def tau(self, x: float) -> float:
        self._check_domain(x)
        regime = self.regime
        A = regime.coeffs.A
        if regime.kind is DriftKind.TWO_REAL_ROOTS:
            # log((x-r1)/(x-r2)) written via log1p for stability at large x.
            return math.log1p((regime.r2 - regime.r1) / (x - regime.r2)) / (
                A * (regime.r2 - regime.r1)
            )
        if regime.kind is DriftKind.DOUBLE_ROOT:
            return 1.0 / (A * (x - regime.r))
        # pi/2 - arctan((x-p)/q) == arctan(q/(x-p)) since x > 0 >= p here.
        return math.atan2(regime.q, x - regime.p) / (A * regime.q)

    def derivatives(self, x: float) -> TauDerivatives:
        """tau, tau', tau'' at x (tau' = -1/Q, tau'' = Q'/Q^2)."""
        tau = self.tau(x)
        q_val = self.regime.coeffs.poly(x)
        tau1 = -1.0 / q_val
        tau2 = self.regime.coeffs.poly_deriv(x) / (q_val * q_val)
        return TauDerivatives(tau=tau, tau1=tau1, tau2=tau2)


class EgfEvaluator:
    """Evaluates the balanced generating function w(x, t) in its regime."""

    def __init__(self, params: ModelParams):
        self.regime = _require_balanced(params)
        self.params = params
        self.singularities = SingularityMap(params) if self.regime.is_quadratic else None

    def eval(self, x: float, t: float) -> float:
        """w(x, t) for real arguments inside the validity region.

        Quadratic regimes require t < tau(x) (and, for complex roots, the
        cosine phase inside (-pi/2, pi/2)); for A = 0 the function is entire
        in t.  Bases stay positive here, so only real powers are needed.
        """
        params = self.params
        regime = self.regime
        kind = regime.kind
        if kind is DriftKind.CONSTANT:
            C = regime.coeffs.C
            return math.exp(
                params.alpha0 * x * t
                + 0.5 * params.alpha0 * C * t * t
                + params.gamma0 * t
            )
        if kind is DriftKind.LINEAR:
            B = regime.coeffs.B
            C = regime.coeffs.C
            lam = (params.alpha0 / B) * math.expm1(B * t)
            return math.exp(lam * (x + C / B) + (params.gamma0 - params.alpha0 * C / B) * t)

        self.singularities._check_domain(x)
        A = regime.coeffs.A
        nu = regime.nu
        if kind is DriftKind.COMPLEX_ROOTS:
            phase = A * regime.q * t + math.atan((x - regime.p) / regime.q)
            if not -0.5 * math.pi < phase < 0.5 * math.pi:
                raise DomainError(
                    f"(x={x}, t={t}) beyond the first cosine zero of the "
                    "complex-root closed form"
                )
            base = regime.q / (
                math.hypot(x - regime.p, regime.q) * math.cos(phase)
            )
            return math.exp(regime.c0 * t) * base**nu
        tau = self.singularities.tau(x)
        if t >= tau:
            raise DomainError(f"t={t} is at or past the singular time tau({x})={tau}")
        if kind is DriftKind.DOUBLE_ROOT:
            g = 1.0 - A * t * (x - regime.r)
            return math.exp(regime.c0 * t) * g ** (-nu)
        grow = math.exp(A * (regime.r1 - regime.r2) * t)
        denom = (x - regime.r2) - (x - regime.r1) * grow
        base = (regime.r1 - regime.r2) / denom
        if params.alpha0 == A:
            # nu == 1: plain ratio, no power needed.
            return base * math.exp(regime.c0 * t)
        return math.exp(regime.c0 * t) * base**nu

    def _eval_complex(self, x: float, t: complex) -> complex:
        """w(x, t) for complex t with |t| inside the singular radius.

        Principal-branch powers are safe here: on such circles the power
        base stays off the negative real axis (checked per regime).
        """
        params = self.params
        regime = self.regime
        kind = regime.kind
        if kind is DriftKind.CONSTANT:
            C = regime.coeffs.C
            return cmath.exp(
                params.alpha0 * x * t
                + 0.5 * params.alpha0 * C * t * t
                + params.gamma0 * t
            )
        if kind is DriftKind.LINEAR:
            B = regime.coeffs.B
            C = regime.coeffs.C
            lam = (params.alpha0 / B) * (cmath.exp(B * t) - 1.0)
            return cmath.exp(lam * (x + C / B) + (params.gamma0 - params.alpha0 * C / B) * t)

        A = regime.coeffs.A
        nu = regime.nu
        if kind is DriftKind.COMPLEX_ROOTS:
            phase = A * regime.q * t + math.atan((x - regime.p) / regime.q)
            base = regime.q / (math.hypot(x - regime.p, regime.q) * cmath.cos(phase))
            return cmath.exp(regime.c0 * t) * _principal_pow(base, nu)
        if kind is DriftKind.DOUBLE_ROOT:
            g = 1.0 - A * t * (x - regime.r)
            return cmath.exp(regime.c0 * t) * _principal_pow(g, -nu)
        grow = cmath.exp(A * (regime.r1 - regime.r2) * t)
        denom = (x - regime.r2) - (x - regime.r1) * grow
        base = (regime.r1 - regime.r2) / denom
        return cmath.exp(regime.c0 * t) * _principal_pow(base, nu)

    def taylor_coefficients(self, x: float, n_terms: int) -> np.ndarray:
        """Coefficients of the t-expansion at fixed x, i.e. P_n(x)/n!.

        Trapezoidal contour quadrature on a circle of radius 0.5*tau(x) in
        the quadratic regimes; for A = 0 (entire in t) each coefficient gets
        its own saddle-tuned radius.  Node counts double until successive
        estimates agree to 1e-10; failure to converge raises AccuracyError.
        """
        if not 1 <= n_terms <= 30:
            raise DomainError(f"n_terms must be in 1..30, got {n_terms}")
        if not x > 0:
            raise DomainError(f"x must be positive, got {x}")
        if self.regime.is_quadratic:
            self.singularities._check_domain(x)
            rho = 0.5 * self.singularities.tau(x)
            return self._contour_coefficients(x, rho, n_terms)
        out = np.empty(n_terms)
        for n in range(n_terms):
            rho = self._entire_radius(x, n)
            out[n] = self._contour_coefficients(x, rho, n + 1)[n]
        return out

    def _contour_coefficients(self, x: float, rho: float, n_terms: int) -> np.ndarray:
        previous = None
        nodes = 64
        while nodes <= 1 << 15:
            samples = np.array(
                [
                    self._eval_complex(x, cmath.rect(rho, _TWO_PI * j / nodes))
                    for j in range(nodes)
                ]
            )
            spectrum = np.fft.fft(samples)[:n_terms]
            coeffs = spectrum.real / (nodes * rho ** np.arange(n_terms))
            if previous is not None and previous.size == coeffs.size:
                scale = np.maximum(np.abs(coeffs), 1e-300)
                if np.max(np.abs(coeffs - previous) / scale) <= 1e-10:
                    return coeffs
            previous = coeffs
            nodes *= 2
        raise AccuracyError(
            f"contour quadrature for {n_terms} coefficients at x={x} did not "
            "stabilize to 1e-10"
        )

    def _entire_radius(self, x: float, n: int) -> float:
        """Radius matching the modulus saddle of w(x,t)/t^{n+1} (A = 0 only)."""
        params = self.params
        regime = self.regime
        if regime.kind is DriftKind.CONSTANT:
            X = params.alpha0 * x + params.gamma0
            Y = params.alpha0 * regime.coeffs.C
            if X == 0.0 and Y == 0.0:
                return 1.0  # w is constant; any radius works
            if Y == 0.0:
                return (n + 1) / X
            return (-X + math.sqrt(X * X + 4.0 * Y * (n + 1))) / (2.0 * Y)
        B = regime.coeffs.B
        C = regime.coeffs.C
        y_x = (params.alpha0 / B) * (x + C / B)
        a_lin = params.gamma0 - params.alpha0 * C / B
        if y_x == 0.0:
            return (n + 1) / a_lin if a_lin > 0 else 1.0

        def slope(t: float) -> float:
            return t * (a_lin + B * y_x * math.exp(B * t)) - (n + 1)

        lo, hi = 0.0, 1.0
        while slope(hi) < 0.0:
            hi *= 2.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if slope(mid) < 0.0:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-12 * hi:
                break
        return 0.5 * (lo + hi)


def _principal_pow(base: complex, exponent: float) -> complex:
    return cmath.exp(exponent * cmath.log(base))
