"""Sinc cardinal basis and finite cardinal sums.

The shifted Sinc function is

    S(k, h)(x) = sin(pi (x/h - k)) / (pi (x/h - k)),

and a finite cardinal sum is sum_{k=lo}^{hi} F(kh) S(k, h)(x).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Below this |u| the quotient sin(pi u)/(pi u) is replaced by its Taylor value.
TAYLOR_CUTOFF = 1e-9


def _scaled(x: float, h: float) -> float:
    """x/h, returned as an exact integer whenever x is the double j*h."""
    s = x / h
    j = round(s)
    return float(j) if j * h == x else s


def _scaled_many(xs, h):
    s = xs / h
    j = np.rint(s)
    return np.where(j * h == xs, j, s)


def _sinc_of_offset(u: float) -> float:
    if u == 0.0:
        return 1.0
    if abs(u) < TAYLOR_CUTOFF:
        pu = math.pi * u
        return 1.0 - pu * pu / 6.0
    # Reduce to |r| <= 1/2 so integer offsets give an exact zero.
    m = round(u)
    r = u - m
    if r == 0.0:
        return 0.0
    s = math.sin(math.pi * r)
    if m % 2:
        s = -s
    return s / (math.pi * u)


def sinc_offsets(u):
    """Vectorised sin(pi u)/(pi u) over an array of offsets ``u``."""
    u = np.asarray(u, dtype=float)
    m = np.rint(u)
    r = u - m
    sign = np.where(np.fmod(m, 2.0) == 0.0, 1.0, -1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = sign * np.sin(np.pi * r) / (np.pi * u)
    small = np.abs(u) < TAYLOR_CUTOFF
    pu = np.pi * u
    out = np.where(small, 1.0 - pu * pu / 6.0, out)
    out = np.where(r == 0.0, np.where(m == 0.0, 1.0, 0.0), out)
    return out


def sinc_basis(k: int, h: float, x: float) -> float:
    """Evaluate S(k, h)(x).

    Returns exactly 1 at x = kh and exactly 0 whenever x/h - k is a
    nonzero integer.
    """
    if not (h > 0.0) or not math.isfinite(h):
        raise DomainError(f"mesh size must be positive and finite, got h={h!r}")
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    return _sinc_of_offset(_scaled(x, h) - k)


@dataclass(frozen=True)
class CardinalSum:
    """Samples ``values[k - lo] = F(kh)`` for ``k = lo..hi``."""

    h: float
    lo: int
    hi: int
    values: tuple

    def __post_init__(self):
        if not (self.h > 0.0) or not math.isfinite(self.h):
            raise DomainError(f"mesh size must be positive and finite, got h={self.h!r}")
        if self.lo > self.hi:
            raise DomainError(f"empty index range lo={self.lo} > hi={self.hi}")
        values = tuple(float(v) for v in self.values)
        if len(values) != self.hi - self.lo + 1:
            raise DomainError(
                f"expected {self.hi - self.lo + 1} values for k={self.lo}..{self.hi}, "
                f"got {len(values)}"
            )
        if not all(math.isfinite(v) for v in values):
            raise DomainError("cardinal sum values must be finite")
        object.__setattr__(self, "values", values)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1, dtype=float)


def cardinal_terms(cs: CardinalSum, xs) -> np.ndarray:
    """Matrix of individual terms ``values[j] * S(lo + j, h)(x_i)``."""
    s = _scaled_many(np.asarray(xs, dtype=float), cs.h)
    u = s[:, None] - cs.indices[None, :]
    return sinc_offsets(u) * np.asarray(cs.values)[None, :]


def cardinal_sum_many(cs: CardinalSum, xs, compensated: bool = True) -> np.ndarray:
    """Evaluate the cardinal sum at each point of ``xs``.

    With ``compensated=True`` every row is accumulated with ``math.fsum``;
    otherwise a plain left-to-right sum is used.
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if not np.all(np.isfinite(xs)):
        raise DomainError("evaluation points must be finite")
    terms = cardinal_terms(cs, xs)
    if compensated:
        return np.array([math.fsum(row) for row in terms])
    out = np.zeros(len(xs))
    for j in range(terms.shape[1]):
        out += terms[:, j]
    return out


def cardinal_sum(cs: CardinalSum, x: float) -> float:
    """Evaluate ``sum_{k=lo}^{hi} values[k-lo] S(k, h)(x)``."""
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    s = _scaled(x, cs.h)
    return math.fsum(
        v * _sinc_of_offset(s - k)
        for k, v in zip(range(cs.lo, cs.hi + 1), cs.values)
    )
