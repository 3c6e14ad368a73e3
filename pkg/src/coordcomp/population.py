"""Deterministic manager and worker skill populations.

Workers sit at midpoint quantiles ``(j - 0.5) / N`` of a Beta(a, b) law, so the
population is fixed by (N, a, b) alone and no random draws are involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .model import DomainError

_CF_EPS = 1e-16
_CF_TINY = 1e-300
_CF_MAX_ITER = 500


class ConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SkillVector:
    values: tuple[float, ...]
    kind: Literal["manager", "worker"]

    def __post_init__(self) -> None:
        if any(not 0 < v <= 1 for v in self.values):
            raise DomainError(f"{self.kind} skills must lie in (0, 1]")
        if any(b < a for a, b in zip(self.values, self.values[1:])):
            raise DomainError(f"{self.kind} skills must be sorted ascending")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def _beta_cf(x: float, a: float, b: float) -> float:
    # modified Lentz evaluation of the incomplete-beta continued fraction
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ConvergenceError(f"incomplete beta continued fraction did not converge (x={x}, a={a}, b={b})")


def _log_beta_front(x: float, a: float, b: float) -> float:
    return (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
            + a * math.log(x) + b * math.log1p(-x))


def _check_shapes(a: float, b: float) -> None:
    if not (math.isfinite(a) and math.isfinite(b)) or a <= 0 or b <= 0:
        raise DomainError(f"shape parameters must be finite and > 0, got a={a}, b={b}")


def _tails(x: float, a: float, b: float) -> tuple[float, float]:
    """(I_x(a, b), 1 - I_x(a, b)), each computed on the side where it is accurate."""
    if x == 0.0:
        return 0.0, 1.0
    if x == 1.0:
        return 1.0, 0.0
    front = math.exp(_log_beta_front(x, a, b))
    # the fraction converges fast only on the near side of the mean
    if x < (a + 1.0) / (a + b + 2.0):
        lower = min(1.0, front * _beta_cf(x, a, b) / a)
        return lower, 1.0 - lower
    upper = min(1.0, front * _beta_cf(1.0 - x, b, a) / b)
    return 1.0 - upper, upper


def regularized_incomplete_beta(x: float, a: float, b: float) -> float:
    """Beta(a, b) CDF, I_x(a, b)."""
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x}")
    _check_shapes(a, b)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x}")
    return _tails(x, a, b)[0]


def _beta_pdf(x: float, a: float, b: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return math.exp(_log_beta_front(x, a, b)) / x / (1.0 - x)


def beta_quantile(p: float, a: float, b: float, tol: float = 1e-12, max_iter: int = 200) -> float:
    """Inverse of :func:`regularized_incomplete_beta` in x.

    Safeguarded Newton on a shrinking bracket, bisecting whenever a Newton
    step leaves it. Above the median the equation is solved on the upper tail
    so flat right tails keep full precision. Iterates to float resolution and
    then requires ``|I_x(a, b) - p| <= tol``.
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie in (0, 1), got {p}")
    _check_shapes(a, b)
    use_upper = p > 0.5
    target = 1.0 - p if use_upper else p
    lo, hi = 0.0, 1.0
    x = min(max(a / (a + b), 1e-3), 1.0 - 1e-3)
    for _ in range(max_iter):
        lower, upper = _tails(x, a, b)
        # f > 0 means x lies right of the root
        f = target - upper if use_upper else lower - target
        if f > 0:
            hi = x
        elif f < 0:
            lo = x
        dens = _beta_pdf(x, a, b)
        step = f / dens if dens > 0 else math.inf
        done = f == 0 or abs(step) <= 2.0 * math.ulp(x) or hi - lo <= 2.0 * math.ulp(hi)
        if done:
            if abs(lower - p) <= tol:
                return x
            break
        nxt = x - step
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        x = nxt
    raise ConvergenceError(
        f"beta quantile did not reach |F(x) - p| <= {tol} in {max_iter} steps (p={p}, a={a}, b={b})"
    )


def make_managers(n: int, s_min: float, s_max: float) -> SkillVector:
    """Evenly spaced manager skills from s_min to s_max inclusive."""
    if n < 2:
        raise DomainError(f"need at least two managers for an evenly spaced grid, got {n}")
    if not 0 < s_min < s_max <= 1:
        raise DomainError(f"need 0 < s_min < s_max <= 1, got {s_min}, {s_max}")
    step = (s_max - s_min) / (n - 1)
    vals = [s_min + i * step for i in range(n)]
    vals[-1] = s_max
    return SkillVector(tuple(vals), "manager")


@lru_cache(maxsize=32)
def _workers(N: int, a: float, b: float) -> SkillVector:
    return SkillVector(tuple(beta_quantile((j - 0.5) / N, a, b) for j in range(1, N + 1)), "worker")


def make_workers(N: int, a: float, b: float) -> SkillVector:
    """Worker skills at the midpoint quantiles of Beta(a, b)."""
    if N < 1:
        raise DomainError(f"need at least one worker, got {N}")
    _check_shapes(a, b)
    return _workers(int(N), float(a), float(b))
