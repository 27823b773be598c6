"""Model parameters, drift classification, and step weights.

A path of length n is a walk on the nonnegative integers using up, level,
and down steps.  Step weights vary affinely with the current height:

    up      alpha_k = a*k + alpha0   (leaving height k)
    down    beta_k  = b*k + beta0    (arriving at height k)
    level   gamma_k = c*k + gamma0   (staying at height k)

The quadratic drift polynomial Q(x) = A*x^2 + B*x + C with A = a, B = c,
C = b controls all asymptotics; the sign of its discriminant picks one of
five regimes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ConfigError, DomainError

PARAM_NAMES = ("a", "b", "c", "alpha0", "beta0", "gamma0")


@dataclass(frozen=True)
class ModelParams:
    """The six nonnegative integer step-weight coefficients."""

    a: int
    b: int
    c: int
    alpha0: int
    beta0: int
    gamma0: int

    def __post_init__(self) -> None:
        for name in PARAM_NAMES:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise DomainError(f"{name} must be nonnegative, got {value}")

    @property
    def is_degenerate(self) -> bool:
        """True when no up-step ever carries positive weight.

        The walk is then stuck at height 0 (point mass).  The exact engine
        accepts this; asymptotic and large-deviation routines refuse it.
        """
        return self.alpha0 == 0 and self.a == 0

    def up_weight(self, k: int) -> int:
        return self.a * k + self.alpha0

    def down_weight(self, k: int) -> int:
        return self.b * k + self.beta0

    def level_weight(self, k: int) -> int:
        return self.c * k + self.gamma0

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.alpha0, self.beta0, self.gamma0)

    def to_dict(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in PARAM_NAMES}

    @classmethod
    def from_dict(cls, data: dict) -> "ModelParams":
        unknown = set(data) - set(PARAM_NAMES)
        if unknown:
            raise ConfigError(f"unknown parameter keys: {sorted(unknown)}")
        missing = set(PARAM_NAMES) - set(data)
        if missing:
            raise ConfigError(f"missing parameter keys: {sorted(missing)}")
        try:
            values = {name: int(data[name]) for name in PARAM_NAMES}
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"parameter values must be integers: {exc}") from exc
        for name in PARAM_NAMES:
            if values[name] != data[name]:
                raise ConfigError(f"{name} must be an integer, got {data[name]!r}")
        return cls(**values)

    @classmethod
    def parse(cls, text: str) -> "ModelParams":
        """Parse `a=1 b=5 c=6 alpha0=8 beta0=5 gamma0=1` or the JSON equivalent."""
        stripped = text.strip()
        if not stripped:
            raise ConfigError("empty parameter string")
        if stripped.startswith("{"):
            try:
                data = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"invalid JSON parameters: {exc}") from exc
            if not isinstance(data, dict):
                raise ConfigError("JSON parameters must be an object")
            return cls.from_dict(data)
        data = {}
        for token in stripped.replace(",", " ").split():
            key, sep, value = token.partition("=")
            if not sep:
                raise ConfigError(f"expected key=value, got {token!r}")
            try:
                data[key.strip()] = int(value)
            except ValueError as exc:
                raise ConfigError(f"{key} must be an integer, got {value!r}") from exc
        return cls.from_dict(data)


def is_balanced(params: ModelParams) -> bool:
    """True when the down-step intercept equals the drift constant (beta0 == b)."""
    return params.beta0 == params.b


def step_weights(params: ModelParams, k: int) -> tuple[int, int, int]:
    """Exact integer (alpha_k, beta_k, gamma_k) at height k >= 0."""
    if k < 0:
        raise DomainError(f"height index must be nonnegative, got {k}")
    return (params.up_weight(k), params.down_weight(k), params.level_weight(k))


@dataclass(frozen=True)
class DriftCoefficients:
    """Quadratic drift Q(x) = A*x^2 + B*x + C with A=a, B=c, C=b."""

    A: int
    B: int
    C: int

    @property
    def delta(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def poly(self, x: float) -> float:
        return (self.A * x + self.B) * x + self.C

    def poly_deriv(self, x: float) -> float:
        return 2 * self.A * x + self.B


class DriftKind(Enum):
    CONSTANT = "constant"
    LINEAR = "linear"
    TWO_REAL_ROOTS = "two_real_roots"
    DOUBLE_ROOT = "double_root"
    COMPLEX_ROOTS = "complex_roots"


@dataclass(frozen=True)
class Regime:
    """Drift classification plus the constants used by the closed forms.

    Quadratic kinds carry nu = alpha0/A and the exponential prefactor rate
    c0; the root fields are populated per kind (r1 < r2, double root r, or
    complex pair p +/- i*q with q > 0).
    """

    kind: DriftKind
    coeffs: DriftCoefficients
    r1: float | None = None
    r2: float | None = None
    r: float | None = None
    p: float | None = None
    q: float | None = None
    nu: float | None = None
    nu_exact: Fraction | None = None
    c0: float | None = None

    @property
    def is_quadratic(self) -> bool:
        return self.kind in (
            DriftKind.TWO_REAL_ROOTS,
            DriftKind.DOUBLE_ROOT,
            DriftKind.COMPLEX_ROOTS,
        )

    def describe(self) -> str:
        if self.kind is DriftKind.TWO_REAL_ROOTS:
            return f"two real roots (r1={self.r1:g}, r2={self.r2:g})"
        if self.kind is DriftKind.DOUBLE_ROOT:
            return f"double root (r={self.r:g})"
        if self.kind is DriftKind.COMPLEX_ROOTS:
            return f"complex roots (p={self.p:g}, q={self.q:g})"
        return self.kind.value


def classify(params: ModelParams) -> Regime:
    """Classify the drift regime of a parameter set.

    The branch is decided on the exact integer discriminant, so regime
    selection never suffers floating-point ambiguity; the derived root
    constants are double precision.
    """
    coeffs = DriftCoefficients(A=params.a, B=params.c, C=params.b)
    if coeffs.A == 0:
        if coeffs.B == 0:
            return Regime(kind=DriftKind.CONSTANT, coeffs=coeffs)
        return Regime(kind=DriftKind.LINEAR, coeffs=coeffs)

    nu_exact = Fraction(params.alpha0, coeffs.A)
    nu = float(nu_exact)
    delta = coeffs.delta
    if delta > 0:
        sqrt_delta = math.sqrt(delta)
        r1 = (-coeffs.B - sqrt_delta) / (2 * coeffs.A)
        r2 = (-coeffs.B + sqrt_delta) / (2 * coeffs.A)
        return Regime(
            kind=DriftKind.TWO_REAL_ROOTS,
            coeffs=coeffs,
            r1=r1,
            r2=r2,
            nu=nu,
            nu_exact=nu_exact,
            c0=params.alpha0 * r1 + params.gamma0,
        )
    if delta == 0:
        r = -coeffs.B / (2 * coeffs.A)
        return Regime(
            kind=DriftKind.DOUBLE_ROOT,
            coeffs=coeffs,
            r=r,
            nu=nu,
            nu_exact=nu_exact,
            c0=params.alpha0 * r + params.gamma0,
        )
    p = -coeffs.B / (2 * coeffs.A)
    q = math.sqrt(-delta) / (2 * coeffs.A)
    return Regime(
        kind=DriftKind.COMPLEX_ROOTS,
        coeffs=coeffs,
        p=p,
        q=q,
        nu=nu,
        nu_exact=nu_exact,
        c0=params.alpha0 * p + params.gamma0,
    )
