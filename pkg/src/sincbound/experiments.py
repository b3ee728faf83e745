"""The four benchmark functions, their certificates, grids and sweeps."""
from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import extended
from .approximator import build, max_error_on_grid
from .errors import DomainError
from .theory import (
    CaseTag,
    FunctionClass,
    de_min_n,
    de_params,
    error_bound,
    select_params,
    bound_value,
)
from .transforms import TransformKind

PI = math.pi


def f1(t, lib=math):
    return lib.sqrt(1 + lib.tanh(lib.asinh(t)) ** 2) / (1 + t * t)


def f2(t, lib=math):
    return lib.sqrt(t) * lib.sqrt(1 + lib.tanh(lib.log(t)) ** 2) / (1 + t * t)


def f3(t, lib=math):
    return t ** (lib.pi / 4) * lib.exp(-t)


def f4(t, lib=math):
    return lib.sqrt(lib.cos(3 * lib.asinh(t)) + lib.cosh(lib.pi)) / (1 + t * t)


class ExampleId(enum.Enum):
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"


class Variant(enum.Enum):
    SE = "se"
    DE = "de"


@dataclass(frozen=True)
class BenchmarkExample:
    """A benchmark function with its SE and DE certificates.

    ``rescale`` is the argument scale of the DE branch: the DE approximant
    is built for ``g(u) = f(rescale * u)``.  ``de_kind`` and ``de_nodes``
    describe how DE nodes are placed when no certificate exists.
    """

    id: ExampleId
    f: Callable[[float], float]
    se_class: Optional[FunctionClass]
    de_class: Optional[FunctionClass]
    de_kind: TransformKind
    rescale: Optional[float] = None
    # (alpha, beta, d) for DE node placement when de_class is absent
    de_nodes: Optional[tuple] = None

    @property
    def whole_line(self) -> bool:
        return self.de_kind.whole_line

    def de_target(self) -> Callable[[float], float]:
        if self.rescale is None:
            return self.f
        s, f = self.rescale, self.f
        return lambda u: f(s * u)


def example(id) -> BenchmarkExample:
    id = ExampleId(id)
    if id is ExampleId.F1:
        return BenchmarkExample(
            id, f1,
            FunctionClass(CaseTag.SE_CASE1, 1.5, 2.0, 2.0, PI / 4),
            FunctionClass(CaseTag.DE_CASE1, 1.5, 2.0, 2.0, PI / 6),
            TransformKind.DE1,
        )
    if id is ExampleId.F2:
        return BenchmarkExample(
            id, f2,
            FunctionClass(CaseTag.SE_CASE2, 1.5, 0.5, 1.5, PI / 4),
            FunctionClass(CaseTag.DE_CASE2, 1.5, 0.5, 1.5, PI / 6),
            TransformKind.DE2,
        )
    if id is ExampleId.F3:
        return BenchmarkExample(
            id, f3,
            FunctionClass(CaseTag.SE_CASE3, (1.0 + (PI / 2) ** 2) ** (PI / 8), PI / 4, 0.75, 1.57),
            FunctionClass.de_case3((PI / 4) ** (PI / 4), PI / 4, 1.5),
            TransformKind.DE3_DDAGGER,
            rescale=PI / 4,
        )
    # No d > 0 makes f4 analytic on the DE1 image; nodes use d = arcsin(d_SE / pi).
    return BenchmarkExample(
        id, f4,
        FunctionClass(CaseTag.SE_CASE1, 2.0 * math.cosh(PI), 2.0, 2.0, PI / 3),
        None,
        TransformKind.DE1,
        de_nodes=(2.0, 2.0, math.asin((PI / 3) / PI)),
    )


# Node placement for the comparison run of f3 with log(1 + e^{(pi/2) sinh t}).
F3_OLD_DE = (PI / 4, 1.40)


def _half_exponents():
    return [e / 2.0 for e in range(-100, 101)]


def half_line_grid() -> list:
    """2^e for e = -50, -49.5, ..., 50 (201 points)."""
    return [float(np.exp2(e)) for e in _half_exponents()]


def whole_line_grid() -> list:
    """0 and +-2^e for e = -50, -49.5, ..., 50 (403 points), ascending."""
    pos = half_line_grid()
    return [-t for t in reversed(pos)] + [0.0] + pos


def grid_for(ex: BenchmarkExample) -> list:
    return whole_line_grid() if ex.whole_line else half_line_grid()


@dataclass(frozen=True)
class SweepRecord:
    """One sweep step.  ``bound`` is None when no theorem applies."""

    n: int
    h: float
    M: int
    N: int
    max_error: float
    bound: Optional[float]
    transform: str
    precision: str = "double"

    def dominated(self, rel: float = 1e-12) -> bool:
        return self.bound is None or self.max_error <= self.bound * (1.0 + rel)


def _threads() -> int:
    raw = os.environ.get("SINC_BOUND_THREADS", "0")
    try:
        k = int(raw)
    except ValueError:
        k = 0
    return k if k > 0 else (os.cpu_count() or 1)


def _run(steps, fn):
    workers = min(_threads(), len(steps)) or 1
    if workers == 1:
        return [fn(s) for s in steps]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, steps))


# Double-precision errors at or below this level are re-measured in
# extended precision, since rounding noise is then of the same order.
ESCALATE_BELOW = 1e-12


class Precision(enum.Enum):
    DOUBLE = "double"
    EXTENDED = "extended"
    AUTO = "auto"


def _measure(f, kind, params, grid, scale=None, precision=Precision.AUTO):
    """Return ``(max_error, precision_used)`` for one approximant."""
    if precision is not Precision.EXTENDED:
        if scale is None:
            err = max_error_on_grid(build(f, kind, params), f, grid)
        else:
            a = build(lambda u: f(scale * u), kind, params)
            err = max_error_on_grid(a, f, grid, arg_scale=scale)
        if precision is Precision.DOUBLE or err > ESCALATE_BELOW:
            return err, Precision.DOUBLE
    err = extended.max_error(f, kind, params.h, params.M, params.N, grid, arg_scale=scale)
    return err, Precision.EXTENDED


def _step(f, kind, params_of, bound, grid, scale, precision):
    def run(n):
        p = params_of(n)
        err, used = _measure(f, kind, p, grid, scale, precision)
        b = None if bound is None else bound_value(bound, n)
        return SweepRecord(n, p.h, p.M, p.N, err, b, kind.value, used.value)

    return run


def sweep(id, variant, n_values, precision="auto") -> list:
    """Approximate for each n and pair the measured error with its bound.

    ``precision`` is ``"double"``, ``"extended"`` or ``"auto"`` (double,
    re-measured in extended precision once the error reaches rounding
    level).  For f3 under DE the result holds two row groups:
    ``de3_ddagger`` (certified) followed by ``de3_old`` (no explicit bound).
    Records come back in ascending n within each group.
    """
    ex = example(id)
    variant = Variant(variant)
    precision = Precision(precision)
    n_values = sorted(int(n) for n in n_values)
    if not n_values:
        raise DomainError("no n values to sweep")
    grid = grid_for(ex)

    if variant is Variant.SE:
        cls = ex.se_class
        run = _step(ex.f, cls.case.transform, lambda n: select_params(cls, n),
                    error_bound(cls), grid, None, precision)
        return _run(n_values, run)

    if ex.de_class is None:
        alpha, beta, d = ex.de_nodes
        run = _step(ex.f, ex.de_kind, lambda n: de_params(alpha, beta, d, n),
                    None, grid, None, precision)
        return _run(n_values, run)

    cls = ex.de_class
    run = _step(ex.f, cls.case.transform, lambda n: select_params(cls, n),
                error_bound(cls), grid, ex.rescale, precision)
    records = _run(n_values, run)
    if ex.id is ExampleId.F3:
        mu, d = F3_OLD_DE
        old = _step(ex.f, TransformKind.DE3_OLD, lambda n: de_params(mu, mu, d, n),
                    None, grid, None, precision)
        records += _run(n_values, old)
    return records


def default_n_values(id, variant) -> list:
    """n = 2, 4, ..., 100, starting at the first even admissible n for DE."""
    ex = example(id)
    if Variant(variant) is Variant.SE or ex.de_class is None:
        start = 2
    else:
        start = de_min_n(ex.de_class)
        start += start % 2
    return list(range(max(2, start), 101, 2))
