"""SE and DE variable transformations and their inverses.

=============  ===============================  ===========
kind           t = psi(x)                       target
=============  ===============================  ===========
SE1            sinh x                           (-inf, inf)
SE2            exp x                            (0, inf)
SE3            arcsinh(exp x)                   (0, inf)
DE1            sinh((pi/2) sinh x)              (-inf, inf)
DE2            exp((pi/2) sinh x)               (0, inf)
DE3_OLD        log(1 + exp((pi/2) sinh x))      (0, inf)
DE3_DDAGGER    log(1 + exp(pi sinh x))          (0, inf)
=============  ===============================  ===========

Forward maps saturate instead of overflowing: results too large for a
double become ``sys.float_info.max`` and results on a half line that
underflow become the smallest positive subnormal.
"""
from __future__ import annotations

import enum
import math
import sys

from .errors import DomainError

_HUGE = sys.float_info.max
_TINY = math.ulp(0.0)
_LOG2 = math.log(2.0)
_HALF_PI = 0.5 * math.pi


class TransformKind(enum.Enum):
    SE1 = "se1"
    SE2 = "se2"
    SE3 = "se3"
    DE1 = "de1"
    DE2 = "de2"
    DE3_OLD = "de3_old"
    DE3_DDAGGER = "de3_ddagger"

    @property
    def whole_line(self) -> bool:
        return self in (TransformKind.SE1, TransformKind.DE1)

    @property
    def is_de(self) -> bool:
        return self.name.startswith("DE")


def _sinh(x):
    try:
        return math.sinh(x)
    except OverflowError:
        return math.copysign(_HUGE, x)


def _scaled_sinh(c, x):
    """c * sinh(x), saturated."""
    v = c * _sinh(x)
    return v if math.isfinite(v) else math.copysign(_HUGE, v)


def _exp(x):
    try:
        return math.exp(x)
    except OverflowError:
        return _HUGE


def _softplus(s):
    """log(1 + e^s) without overflow."""
    if s > 0.0:
        return s + math.log1p(math.exp(-s))
    return math.log1p(math.exp(s))


def _log_expm1(t):
    """log(e^t - 1) for t > 0, the inverse of the softplus."""
    if t > 0.5:
        return t + math.log1p(-math.exp(-t))
    return math.log(math.expm1(t))


def _positive(t):
    return t if t > 0.0 else _TINY


def forward(kind: TransformKind, x: float) -> float:
    """Evaluate ``psi(x)`` for the chosen transformation."""
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    if kind is TransformKind.SE1:
        return _sinh(x)
    if kind is TransformKind.SE2:
        return _positive(_exp(x))
    if kind is TransformKind.SE3:
        if x > 20.0:
            # arcsinh(e^x) = x + log(1 + sqrt(1 + e^{-2x}))
            return x + math.log1p(math.sqrt(1.0 + math.exp(-2.0 * x)))
        return _positive(math.asinh(math.exp(x)))
    if kind is TransformKind.DE1:
        return _sinh(_scaled_sinh(_HALF_PI, x))
    if kind is TransformKind.DE2:
        return _positive(_exp(_scaled_sinh(_HALF_PI, x)))
    if kind is TransformKind.DE3_OLD:
        return _positive(_softplus(_scaled_sinh(_HALF_PI, x)))
    if kind is TransformKind.DE3_DDAGGER:
        return _positive(_softplus(_scaled_sinh(math.pi, x)))
    raise DomainError(f"unknown transform {kind!r}")


def inverse(kind: TransformKind, t: float) -> float:
    """Evaluate ``psi^{-1}(t)`` for the chosen transformation."""
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    if not kind.whole_line and not t > 0.0:
        raise DomainError(f"{kind.name} is defined on (0, inf); got t={t!r}")
    if kind is TransformKind.SE1:
        return math.asinh(t)
    if kind is TransformKind.SE2:
        return math.log(t)
    if kind is TransformKind.SE3:
        # log(sinh t), with sinh expanded once it would overflow or lose digits
        if t > 0.5:
            return t + math.log1p(-math.exp(-2.0 * t)) - _LOG2
        return math.log(math.sinh(t))
    if kind is TransformKind.DE1:
        return math.asinh(math.asinh(t) / _HALF_PI)
    if kind is TransformKind.DE2:
        return math.asinh(math.log(t) / _HALF_PI)
    if kind is TransformKind.DE3_OLD:
        return math.asinh(_log_expm1(t) / _HALF_PI)
    if kind is TransformKind.DE3_DDAGGER:
        return math.asinh(_log_expm1(t) / math.pi)
    raise DomainError(f"unknown transform {kind!r}")


def forward_many(kind: TransformKind, xs) -> list:
    return [forward(kind, float(x)) for x in xs]


def inverse_many(kind: TransformKind, ts) -> list:
    return [inverse(kind, float(t)) for t in ts]
