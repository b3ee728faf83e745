"""Transformed Sinc approximants.

An approximant of f on the interval of ``kind`` is

    f(t) ~ sum_{k=-M}^{N} f(psi(kh)) S(k, h)(psi^{-1}(t)).
"""
from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import BuildError, DomainError
from .sinc_core import CardinalSum, cardinal_sum_many
from .theory import SincParams
from .transforms import TransformKind, forward, inverse

# Preimages this close to a node (relative, in units of eps) are snapped onto it.
_SNAP_ULPS = 16.0


class IntervalTag(enum.Enum):
    WHOLE_LINE = "whole_line"
    HALF_LINE = "half_line"


@dataclass(frozen=True)
class Approximant:
    kind: TransformKind
    params: SincParams
    node_values: tuple
    interval: IntervalTag

    def __post_init__(self):
        p = self.params
        if len(self.node_values) != p.M + p.N + 1:
            raise DomainError(
                f"expected {p.M + p.N + 1} node values, got {len(self.node_values)}"
            )
        expected = IntervalTag.WHOLE_LINE if self.kind.whole_line else IntervalTag.HALF_LINE
        if self.interval is not expected:
            raise DomainError(f"{self.kind.name} approximates on {expected.name}")

    @property
    def cardinal(self) -> CardinalSum:
        return CardinalSum(self.params.h, -self.params.M, self.params.N, self.node_values)

    def nodes(self) -> list:
        """The points ``psi(kh)``, k = -M..N, where f was sampled."""
        h = self.params.h
        return [forward(self.kind, k * h) for k in range(-self.params.M, self.params.N + 1)]

    def __call__(self, t):
        if np.ndim(t) == 0:
            return evaluate(self, float(t))
        return evaluate_many(self, t)


def build(f: Callable[[float], float], kind: TransformKind, params: SincParams) -> Approximant:
    """Sample ``f`` at the nodes ``psi(kh)`` for k = -M..N."""
    values = []
    for k in range(-params.M, params.N + 1):
        t = forward(kind, k * params.h)
        try:
            v = float(f(t))
        except (ArithmeticError, ValueError) as exc:
            raise BuildError(f"f failed at node k={k} (t={t!r}): {exc}", k=k) from exc
        if not math.isfinite(v):
            raise BuildError(f"f returned {v!r} at node k={k} (t={t!r})", k=k)
        values.append(v)
    interval = IntervalTag.WHOLE_LINE if kind.whole_line else IntervalTag.HALF_LINE
    return Approximant(kind, params, tuple(values), interval)


def _preimages(a: Approximant, ts: Sequence[float]) -> np.ndarray:
    h = a.params.h
    xs = np.array([inverse(a.kind, float(t)) for t in ts])
    # Round-trip error of psi^{-1}(psi(kh)) is a few ulps; land exactly on kh.
    j = np.rint(xs / h)
    on_grid = np.abs(xs - j * h) <= _SNAP_ULPS * sys.float_info.epsilon * np.maximum(1.0, np.abs(xs))
    return np.where(on_grid, j * h, xs)


def evaluate_many(a: Approximant, ts) -> np.ndarray:
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    return cardinal_sum_many(a.cardinal, _preimages(a, ts))


def evaluate(a: Approximant, t: float) -> float:
    """Value of the approximant at ``t`` in the original variable."""
    return float(evaluate_many(a, [t])[0])


def max_error_on_grid(a: Approximant, f: Callable[[float], float], grid, arg_scale=None) -> float:
    """``max |f(t) - a(t)|`` over ``grid``.

    If ``a`` was built for ``g(u) = f(arg_scale * u)``, pass ``arg_scale``;
    the approximation of ``f(t)`` is then ``a(t / arg_scale)``.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise DomainError("empty evaluation grid")
    exact = np.array([float(f(t)) for t in grid])
    ts = grid if arg_scale is None else grid / arg_scale
    return float(np.max(np.abs(exact - evaluate_many(a, ts))))
