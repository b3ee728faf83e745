"""Pointwise checks of the auxiliary inequalities behind the error bounds.

Each ``check_*`` returns True when the inequality holds at the given
point up to a tolerance that only absorbs double rounding.
:func:`run_all` samples random and edge-case inputs and counts failures.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

_HALF_PI = 0.5 * math.pi


def _softplus(x):
    """log(1 + e^x), stable for either sign of x."""
    if x > 0:
        return x + math.log1p(math.exp(-x))
    return math.log1p(math.exp(x))


def check_last_inequality(x: float) -> bool:
    """sqrt(x^2 + pi^2) >= (1 + e^{-x}) log(1 + e^x)."""
    if x < -700.0:
        # (1 + e^{-x}) log(1 + e^x) -> 1 from below; e^{-x} would overflow
        rhs = 1.0
    else:
        rhs = (1.0 + math.exp(-x)) * _softplus(x)
    return math.hypot(x, math.pi) + 1e-12 >= rhs


def _complex_softplus(w: complex) -> complex:
    if w.real > 0:
        return w + cmath.log(1.0 + cmath.exp(-w))
    return cmath.log(1.0 + cmath.exp(w))


def check_log_de(x: float, y: float) -> bool:
    """|log(1 + e^{pi sinh(x+iy)})| <= pi cosh x / ((1 + e^{-pi sinh(x) cos y}) cos((pi/2) sin y) cos y)."""
    w = math.pi * cmath.sinh(complex(x, y))
    lhs = abs(_complex_softplus(w))
    rhs = (
        math.pi * math.cosh(x)
        / (1.0 + math.exp(-math.pi * math.sinh(x) * math.cos(y)))
        / (math.cos(_HALF_PI * math.sin(y)) * math.cos(y))
    )
    return lhs <= rhs * (1.0 + 1e-10)


def check_defunc_estim(x: float, y: float) -> bool:
    """Both modulus bounds on 1/(1 + e^{+-pi sinh(x+iy)}) for |y| < pi/2."""
    w = math.pi * cmath.sinh(complex(x, y))
    c = math.cos(_HALF_PI * math.sin(y))
    a = math.pi * math.sinh(x) * math.cos(y)
    ok = True
    for sign in (1.0, -1.0):
        lhs = abs(1.0 / (1.0 + cmath.exp(sign * w)))
        rhs = 1.0 / ((1.0 + math.exp(sign * a)) * c)
        ok = ok and lhs <= rhs * (1.0 + 1e-10)
    return ok


def check_asinh_lemmas(x: float) -> bool:
    """Real-axis forms of the two arcsinh(e^x) inequalities.

    arcsinh(e^x)/(1 + arcsinh(e^x)) <= e^x/(1 + e^x) and
    1/(e^x + sqrt(1 + e^{2x})) <= 1/(1 + e^x).
    """
    ex = math.exp(x)
    a = math.asinh(ex)
    logistic = 1.0 / (1.0 + math.exp(-x))
    first = a / (1.0 + a) <= logistic * (1.0 + 1e-12)
    if x > 0:
        # both sides ~ e^{-x}; compare e^{-x}-scaled forms to stay in range
        em = math.exp(-x)
        lhs = em / (1.0 + math.sqrt(em * em + 1.0))
        rhs = em / (em + 1.0)
    else:
        lhs = 1.0 / (ex + math.sqrt(1.0 + ex * ex))
        rhs = 1.0 / (1.0 + ex)
    second = lhs <= rhs * (1.0 + 1e-12)
    return first and second


def check_asinh_lemmas_complex(zeta: complex) -> bool:
    """Strip forms on the closed strip |Im zeta| <= pi/2 (with the sqrt(2) factors)."""
    e = cmath.exp(zeta)
    a = cmath.asinh(e)
    first = abs(a / (1.0 + a)) <= math.sqrt(2.0) * abs(e / (1.0 + e)) * (1.0 + 1e-10)
    second = 1.0 / abs(e + cmath.sqrt(1.0 + e * e)) <= math.sqrt(2.0) / abs(1.0 + e) * (1.0 + 1e-10)
    return first and second


@dataclass
class LemmaReport:
    name: str
    checked: int
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures


REAL_EDGES = (0.0, 4 * math.pi / 3, -4 * math.pi / 3, 50.0, -50.0, 699.0, -699.0, 700.0, -700.0)
STRIP_Y_EDGES = (0.0, 1.4, -1.4, _HALF_PI - 1e-3, -(_HALF_PI - 1e-3))
STRIP_X_EDGES = (0.0, 1.0, -1.0, 5.0, -5.0)


def _real_inputs(rng, count):
    return list(REAL_EDGES) + list(rng.uniform(-700.0, 700.0, count))


def _strip_inputs(rng, count):
    pts = [(x, y) for x in STRIP_X_EDGES for y in STRIP_Y_EDGES]
    xs = rng.uniform(-5.0, 5.0, count)
    # open strip |y| < pi/2
    ys = rng.uniform(-1.0, 1.0, count) * (_HALF_PI - 1e-9)
    return pts + list(zip(xs, ys))


def run_all(count: int = 100_000, seed: int = 0, strip_grid: int = 100) -> list:
    """Check every lemma on ``count`` random points plus fixed edge sets."""
    rng = np.random.default_rng(seed)
    reports = []

    def collect(name, fn, inputs):
        bad = [p for p in inputs if not (fn(*p) if isinstance(p, tuple) else fn(p))]
        reports.append(LemmaReport(name, len(inputs), bad[:10]))

    collect("last_inequality", check_last_inequality, _real_inputs(rng, count))
    collect("asinh_lemmas", check_asinh_lemmas, _real_inputs(rng, count))
    collect("log_de", check_log_de, _strip_inputs(rng, count))
    collect("defunc_estim", check_defunc_estim, _strip_inputs(rng, count))
    xs = np.linspace(-30.0, 30.0, strip_grid)
    ys = np.linspace(-_HALF_PI, _HALF_PI, strip_grid)
    collect(
        "asinh_lemmas_strip",
        check_asinh_lemmas_complex,
        [complex(x, y) for x in xs for y in ys],
    )
    return reports
