"""Function-class certificates, parameter selection and explicit error bounds.

A :class:`FunctionClass` records the analyticity data ``(K, alpha, beta, d)``
under which a target function has been certified.  From it the module
selects the mesh size ``h`` and truncation numbers ``M, N`` for a given
``n`` and computes the constant ``C`` of the a-priori bound

    SE:      C sqrt(n) exp(-sqrt(pi d mu n))
    DE:      C exp(-pi d n / log(4 d n / mu))
    DE3:     C exp(-pi d n / log(2 d n / mu))      (log(1 + e^{pi sinh t}) map)
"""
from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DomainError, PreconditionError
from .transforms import TransformKind

_LOG_HUGE = math.log(sys.float_info.max)
_LOG2 = math.log(2.0)
_LOG_PI = math.log(math.pi)


class CaseTag(enum.Enum):
    SE_CASE1 = "se1"
    SE_CASE2 = "se2"
    SE_CASE3 = "se3"
    DE_CASE1 = "de1"
    DE_CASE2 = "de2"
    DE_CASE3 = "de3"

    @property
    def is_se(self) -> bool:
        return self.name.startswith("SE")

    @property
    def transform(self) -> TransformKind:
        return _CASE_TRANSFORM[self]


_CASE_TRANSFORM = {
    CaseTag.SE_CASE1: TransformKind.SE1,
    CaseTag.SE_CASE2: TransformKind.SE2,
    CaseTag.SE_CASE3: TransformKind.SE3,
    CaseTag.DE_CASE1: TransformKind.DE1,
    CaseTag.DE_CASE2: TransformKind.DE2,
    CaseTag.DE_CASE3: TransformKind.DE3_DDAGGER,
}


class RateTag(enum.Enum):
    SE_RATE = "se"
    DE_RATE = "de"
    DE3_RATE = "de3"


@dataclass(frozen=True)
class FunctionClass:
    """Certified decay and analyticity data of a target function.

    ``K`` is the envelope magnitude, ``alpha``/``beta`` the decay exponents
    at the left end (or origin) and the right end, and ``d`` the half-width
    of the strip in which the transformed function is analytic.

    ``d < pi/2`` is required except for ``SE_CASE3``, whose constant only
    involves ``cos(d/2)`` and accepts ``d < pi``.  ``DE_CASE3`` requires
    ``alpha == beta <= 1``.
    """

    case: CaseTag
    K: float
    alpha: float
    beta: float
    d: float

    def __post_init__(self):
        for name in ("K", "alpha", "beta", "d"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError(f"{name} must be positive and finite, got {v!r}")
        d_max = math.pi if self.case is CaseTag.SE_CASE3 else math.pi / 2
        if not self.d < d_max:
            raise DomainError(
                f"strip half-width d={self.d!r} must be < {d_max!r} for {self.case.name}"
            )
        if self.case is CaseTag.DE_CASE3:
            if self.alpha != self.beta:
                raise DomainError(
                    "DE_CASE3 needs alpha == beta; use rescale_case3 to normalise"
                )
            if self.alpha > 1.0:
                raise DomainError(f"DE_CASE3 needs mu <= 1, got mu={self.alpha!r}")

    @property
    def mu(self) -> float:
        return min(self.alpha, self.beta)

    @property
    def nu(self) -> float:
        return max(self.alpha, self.beta)

    @classmethod
    def de_case3(cls, K: float, mu: float, d: float) -> "FunctionClass":
        return cls(CaseTag.DE_CASE3, K, mu, mu, d)


@dataclass(frozen=True)
class SincParams:
    h: float
    M: int
    N: int
    n: int

    def __post_init__(self):
        if not (math.isfinite(self.h) and self.h > 0.0):
            raise DomainError(f"h must be positive and finite, got {self.h!r}")
        if self.M < 1 or self.N < 1:
            raise DomainError(f"M, N must be >= 1, got M={self.M}, N={self.N}")
        if max(self.M, self.N) != self.n:
            raise DomainError(f"max(M, N) must equal n={self.n}, got M={self.M}, N={self.N}")


@dataclass(frozen=True)
class ErrorBound:
    """The bound ``constant * rate(n)``; ``n_min`` is the smallest admissible n."""

    constant: float
    rate: RateTag
    d: float
    mu: float
    n_min: int = 1

    def __post_init__(self):
        if not (math.isfinite(self.constant) and self.constant > 0.0):
            raise DomainError(f"bound constant must be positive and finite, got {self.constant!r}")
        if not (self.d > 0.0 and self.mu > 0.0):
            raise DomainError("d and mu must be positive")

    def __call__(self, n: int) -> float:
        return bound_value(self, n)


def _check_n(n):
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")


def _mp_float(x) -> float:
    return float(mpmath.mpf(x))


def _de_threshold(scale: int, d: float, c: float) -> int:
    """Smallest integer n with n >= c e / (scale d), up to a few ulps.

    The slack keeps inputs such as d = e/4 (rounded) exactly at threshold.
    """
    t = c * math.e / (scale * d)
    return max(1, math.ceil(t * (1.0 - 8.0 * sys.float_info.epsilon)))


# --- parameter selection -----------------------------------------------------

def se_mesh(d: float, mu: float, n: int) -> float:
    """h = sqrt(pi d / (mu n)), correctly rounded."""
    with mpmath.workdps(40):
        return _mp_float(mpmath.sqrt(mpmath.pi * mpmath.mpf(d) / (mpmath.mpf(mu) * n)))


def de_mesh(d: float, mu: float, n: int, scale: int = 4) -> float:
    """h = log(scale d n / mu) / n, correctly rounded."""
    with mpmath.workdps(40):
        arg = scale * mpmath.mpf(d) * n / mpmath.mpf(mu)
        if arg <= 1:
            raise PreconditionError(
                f"log({scale} d n / mu) must be positive; got argument {float(arg)!r}"
            )
        return _mp_float(mpmath.log(arg) / n)


def _ceil_ratio(a: float, n: int, b: float) -> int:
    return math.ceil(Fraction(a) * n / Fraction(b))


def _floor_log_ratio(big: float, small: float, h: float) -> int:
    with mpmath.workdps(40):
        return int(mpmath.floor(mpmath.log(mpmath.mpf(big) / mpmath.mpf(small)) / mpmath.mpf(h)))


def select_params_se(cls: FunctionClass, n: int) -> SincParams:
    """Mesh size and truncation numbers for the SE-Sinc approximation."""
    if not cls.case.is_se:
        raise DomainError(f"select_params_se needs an SE class, got {cls.case.name}")
    _check_n(n)
    n = int(n)
    h = se_mesh(cls.d, cls.mu, n)
    if cls.alpha <= cls.beta:
        M, N = n, _ceil_ratio(cls.alpha, n, cls.beta)
    else:
        N, M = n, _ceil_ratio(cls.beta, n, cls.alpha)
    return SincParams(h, M, N, n)


def de_params(alpha: float, beta: float, d: float, n: int) -> SincParams:
    """DE-Sinc parameters for decay exponents (alpha, beta), strip d.

    No threshold check; callers that need a certified bound go through
    :func:`select_params_de`.
    """
    _check_n(n)
    n = int(n)
    mu = min(alpha, beta)
    h = de_mesh(d, mu, n)
    if alpha <= beta:
        M, N = n, n - _floor_log_ratio(beta, alpha, h)
    else:
        N, M = n, n - _floor_log_ratio(alpha, beta, h)
    if min(M, N) < 1:
        raise PreconditionError(f"n={n} leaves no terms on one side (M={M}, N={N})")
    return SincParams(h, M, N, n)


def de_min_n(cls: FunctionClass) -> int:
    """Smallest n admitted by the DE theorem for ``cls``."""
    if cls.case is CaseTag.DE_CASE3:
        return _de_threshold(2, cls.d, cls.mu)
    if cls.case in (CaseTag.DE_CASE1, CaseTag.DE_CASE2):
        return _de_threshold(4, cls.d, cls.nu)
    raise DomainError(f"{cls.case.name} is not a DE class")


def select_params_de(cls: FunctionClass, n: int) -> SincParams:
    """Mesh size and truncation numbers for DE-Sinc, cases 1 and 2."""
    if cls.case not in (CaseTag.DE_CASE1, CaseTag.DE_CASE2):
        raise DomainError(f"select_params_de needs DE_CASE1 or DE_CASE2, got {cls.case.name}")
    _check_n(n)
    n_min = de_min_n(cls)
    if n < n_min:
        raise PreconditionError(
            f"DE theorem requires n >= nu e / (4 d); minimal admissible n is {n_min}, got {n}"
        )
    return de_params(cls.alpha, cls.beta, cls.d, n)


def select_params_de3(cls: FunctionClass, n: int) -> SincParams:
    """Mesh size for the log(1 + e^{pi sinh t}) map; always M = N = n."""
    if cls.case is not CaseTag.DE_CASE3:
        raise DomainError(f"select_params_de3 needs DE_CASE3, got {cls.case.name}")
    _check_n(n)
    n = int(n)
    n_min = de_min_n(cls)
    if n < n_min:
        raise PreconditionError(
            f"DE3 theorem requires n >= mu e / (2 d); minimal admissible n is {n_min}, got {n}"
        )
    return SincParams(de_mesh(cls.d, cls.mu, n, scale=2), n, n, n)


def select_params(cls: FunctionClass, n: int) -> SincParams:
    if cls.case.is_se:
        return select_params_se(cls, n)
    if cls.case is CaseTag.DE_CASE3:
        return select_params_de3(cls, n)
    return select_params_de(cls, n)


def rescale_case3(K_tilde: float, alpha: float, beta: float):
    """Normalise |f(z)| <= K~ |z^alpha e^{-beta z}| to equal exponents.

    With g(w) = f(scale w), scale = alpha/beta, one has
    |g(w)| <= K |w^mu e^{-mu w}| where K = K~ scale^alpha and mu = alpha.
    Returns ``(K, mu, scale)``.
    """
    if not (K_tilde > 0 and alpha > 0 and beta > 0):
        raise DomainError("K, alpha, beta must be positive")
    scale = alpha / beta
    return K_tilde * scale**alpha, alpha, scale


# --- constants ---------------------------------------------------------------

def _logaddexp(a, b):
    hi, lo = max(a, b), min(a, b)
    return hi + math.log1p(math.exp(lo - hi))


def _log_cos(x, what):
    c = math.cos(x)
    if not c > 0.0:
        raise DomainError(f"{what} = {c!r} is not positive; the constant is undefined")
    return math.log(c)


def constant_se(cls: FunctionClass) -> ErrorBound:
    """Explicit constant of the SE-Sinc bound for cases 1-3."""
    if not cls.case.is_se:
        raise DomainError(f"constant_se needs an SE class, got {cls.case.name}")
    K, a, b, d, mu, nu = cls.K, cls.alpha, cls.beta, cls.d, cls.mu, cls.nu
    s = math.sqrt(math.pi * d * mu)
    # log of 2 / (s (1 - e^{-2s})), shared by all three cases
    log_core = _LOG2 - math.log(s) - math.log(-math.expm1(-2.0 * s))
    if cls.case is CaseTag.SE_CASE1:
        log_pref = (nu + 1.0) * _LOG2 + math.log(K) - math.log(s)
        log_inner = log_core - nu * _log_cos(d, "cos d")
    elif cls.case is CaseTag.SE_CASE2:
        log_pref = _LOG2 + math.log(K) - math.log(s)
        log_inner = log_core - 0.5 * (a + b) * _log_cos(d, "cos d")
    else:
        log_pref = _LOG2 + math.log(K) - math.log(s)
        log_inner = log_core + 0.5 * (a + b) * _LOG2 - (a + b) * _log_cos(d / 2, "cos(d/2)")
    C = _exp_constant(log_pref + _logaddexp(log_inner, 0.0))
    return ErrorBound(C, RateTag.SE_RATE, d, mu)


def constant_de(cls: FunctionClass) -> ErrorBound:
    """Explicit constant of the DE-Sinc bound for cases 1-3."""
    if cls.case.is_se:
        raise DomainError(f"constant_de needs a DE class, got {cls.case.name}")
    if not cls.d < math.pi / 2:
        raise DomainError(f"DE constants need d < pi/2, got d={cls.d!r}")
    K, a, b, d, mu, nu = cls.K, cls.alpha, cls.beta, cls.d, cls.mu, cls.nu
    log_cs = _log_cos(0.5 * math.pi * math.sin(d), "cos((pi/2) sin d)")
    log_cd = _log_cos(d, "cos d")
    log_pd = math.log(math.pi * d * mu)
    n_min = de_min_n(cls)
    if cls.case is CaseTag.DE_CASE3:
        log_pref = math.log(K) - (1.0 - mu) * _LOG_PI - math.log(d * mu)
        log_first = (
            2 * _LOG2 - _LOG_PI - math.log(-math.expm1(-math.pi * mu * math.e))
            - 2.0 * mu * log_cs - (mu + 1.0) * log_cd
        )
        log_second = math.log(mu) + (1.0 - mu) * _LOG2 + mu * (math.pi + 2.0) / 2.0
        C = _exp_constant(log_pref + _logaddexp(log_first, log_second))
        return ErrorBound(C, RateTag.DE3_RATE, d, mu, n_min)
    if cls.case is CaseTag.DE_CASE1:
        log_pref = (nu + 1.0) * _LOG2 + math.log(K) - log_pd
        log_cs_pow = nu * log_cs
    else:
        log_pref = _LOG2 + math.log(K) - log_pd
        log_cs_pow = 0.5 * (a + b) * log_cs
    log_first = (
        2 * _LOG2 - _LOG_PI - math.log(-math.expm1(-math.pi * mu * math.e / 2.0))
        - log_cs_pow - log_cd
    )
    log_second = math.log(mu) + math.pi * nu / 4.0
    C = _exp_constant(log_pref + _logaddexp(log_first, log_second))
    return ErrorBound(C, RateTag.DE_RATE, d, mu, n_min)


def _exp_constant(log_c: float) -> float:
    if log_c > _LOG_HUGE:
        raise DomainError(f"error-bound constant exp({log_c:.6g}) exceeds the double range")
    return math.exp(log_c)


def error_bound(cls: FunctionClass) -> ErrorBound:
    return constant_se(cls) if cls.case.is_se else constant_de(cls)


def bound_value(b: ErrorBound, n: int) -> float:
    """Evaluate ``C * rate(n)``."""
    _check_n(n)
    if n < b.n_min:
        raise PreconditionError(
            f"bound holds only for n >= {b.n_min} (theorem threshold); got n={n}"
        )
    d, mu, C = b.d, b.mu, b.constant
    if b.rate is RateTag.SE_RATE:
        return C * math.sqrt(n) * math.exp(-math.sqrt(math.pi * d * mu * n))
    scale = 4.0 if b.rate is RateTag.DE_RATE else 2.0
    arg = scale * d * n / mu
    if not arg > 1.0:
        raise PreconditionError(
            f"log({int(scale)} d n / mu) must exceed 0; got argument {arg!r}"
        )
    return C * math.exp(-math.pi * d * n / math.log(arg))


# --- envelopes ---------------------------------------------------------------

def envelope(case: CaseTag, z, alpha: float, beta: float) -> float:
    """Modulus of the decay envelope declared by ``case`` at ``z``.

    Case 1 uses ``|1 + z^2|^{-gamma/2}`` with gamma = alpha on the left
    half (Re z < 0) and beta on the right; case 2 uses
    ``|z|^alpha |1 + z^2|^{-(alpha+beta)/2}``; SE case 3 uses
    ``|z/(1+z)|^alpha |e^{-beta z}|``; DE case 3 uses ``|z^mu e^{-mu z}|``
    with mu = alpha.
    """
    z = complex(z)
    if case in (CaseTag.SE_CASE1, CaseTag.DE_CASE1):
        q = abs(1.0 + z * z)
        if q == 0.0:
            raise DomainError(f"z={z} is a pole of the envelope")
        gamma = alpha if z.real < 0 else beta
        return q ** (-gamma / 2.0)
    if case in (CaseTag.SE_CASE2, CaseTag.DE_CASE2):
        q = abs(1.0 + z * z)
        if q == 0.0:
            raise DomainError(f"z={z} is a pole of the envelope")
        return abs(z) ** alpha * q ** (-(alpha + beta) / 2.0)
    if case is CaseTag.SE_CASE3:
        if 1.0 + z == 0.0:
            raise DomainError("z=-1 is a pole of the envelope")
        return abs(z / (1.0 + z)) ** alpha * math.exp(-beta * z.real)
    if case is CaseTag.DE_CASE3:
        return abs(z) ** alpha * math.exp(-alpha * z.real)
    raise DomainError(f"unknown case {case!r}")
