"""Closed-form team-level equations of the coordination-compression model.

Every function here is a pure map from scalars to scalars. Inputs outside the
stated domain raise :class:`DomainError` instead of leaking NaN into sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence


class DomainError(ValueError):
    """An equation was evaluated outside its domain."""


def _finite(**values: float) -> None:
    if all(map(math.isfinite, values.values())):
        return
    name, v = next((k, v) for k, v in values.items() if not math.isfinite(v))
    raise DomainError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class ModelParams:
    """Scalar parameters of the simulated firm. Defaults are the baseline calibration."""

    A: float = 1.0
    alpha: float = 0.65
    c0: float = 0.3
    gamma: float = 1.0
    beta: float = 0.2
    delta: float = 0.0
    T0: float = 200.0
    n_managers: int = 20
    n_workers: int = 400
    manager_skill_min: float = 0.05
    manager_skill_max: float = 1.0
    worker_skill_dist: tuple[float, float] = (2.0, 5.0)
    seed: int = 2026

    def __post_init__(self) -> None:
        _finite(A=self.A, alpha=self.alpha, c0=self.c0, gamma=self.gamma,
                beta=self.beta, delta=self.delta, T0=self.T0)
        if self.A <= 0:
            raise DomainError(f"A must be > 0, got {self.A}")
        if not 0 < self.alpha < 1:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.c0 <= 0:
            raise DomainError(f"c0 must be > 0, got {self.c0}")
        for name in ("gamma", "beta", "delta"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0, got {getattr(self, name)}")
        if self.T0 <= 0:
            raise DomainError(f"T0 must be > 0, got {self.T0}")
        if self.n_managers < 1 or self.n_workers < 1:
            raise DomainError("manager and worker counts must be >= 1")
        if not 0 < self.manager_skill_min <= self.manager_skill_max <= 1:
            raise DomainError(
                "manager skills need 0 < manager_skill_min <= manager_skill_max <= 1, "
                f"got [{self.manager_skill_min}, {self.manager_skill_max}]"
            )
        a, b = self.worker_skill_dist
        if not (a > 0 and b > 0 and math.isfinite(a) and math.isfinite(b)):
            raise DomainError(f"worker_skill_dist shapes must be > 0, got {(a, b)}")


@dataclass(frozen=True)
class Team:
    """One manager plus the workers assigned to them."""

    manager_skill: float
    worker_skills: tuple[float, ...]
    coordination_cost: float
    headcount: int = field(init=False)
    quality: float = field(init=False)
    effective_labor: float = field(init=False)
    output: float = field(init=False)
    A: float = 1.0
    alpha: float = 0.65

    def __post_init__(self) -> None:
        n = len(self.worker_skills)
        q = math.fsum(self.worker_skills)
        leff = effective_labor(q, n, self.coordination_cost)
        object.__setattr__(self, "headcount", n)
        object.__setattr__(self, "quality", q)
        object.__setattr__(self, "effective_labor", leff)
        object.__setattr__(self, "output", team_output(self.A, self.alpha, leff))

    def wages(self) -> tuple[float, list[float]]:
        return split_wages(self.output, self.alpha, self.worker_skills)

    def with_cost(self, cost: float) -> "Team":
        """Same members, re-evaluated under a different coordination cost."""
        return Team(self.manager_skill, self.worker_skills, cost, A=self.A, alpha=self.alpha)


def coordination_cost(c0: float, gamma: float, K_A: float, s: float, beta: float) -> float:
    """Per-worker coordination cost ``c0 / (1 + gamma * K_A * s**beta)``."""
    _finite(c0=c0, gamma=gamma, K_A=K_A, s=s, beta=beta)
    if c0 <= 0:
        raise DomainError(f"c0 must be > 0, got {c0}")
    if K_A < 0 or gamma < 0 or beta < 0:
        raise DomainError(f"K_A, gamma, beta must be >= 0, got {K_A}, {gamma}, {beta}")
    if beta == 0:
        leverage = 1.0
    elif s < 0 or (s == 0 and beta < 1):
        raise DomainError(f"manager skill must be > 0 when beta > 0, got s={s}")
    else:
        leverage = s**beta
    return c0 / (1.0 + gamma * K_A * leverage)


def coordination_cost_slope(c0: float, gamma: float, K_A: float, s: float, beta: float) -> float:
    """Closed-form derivative of :func:`coordination_cost` with respect to K_A."""
    lev = 1.0 if beta == 0 else s**beta
    return -c0 * gamma * lev / (1.0 + gamma * K_A * lev) ** 2


def span(cost: float) -> float:
    """Span of control: the largest team a manager can coordinate at this cost."""
    _finite(cost=cost)
    if cost <= 0:
        raise DomainError(f"coordination cost must be > 0, got {cost}")
    return 1.0 / cost


def effective_labor(quality: float, headcount: int, cost: float) -> float:
    """Team quality discounted by the coordination penalty, ``Q / (1 + c n)``."""
    _finite(quality=quality, cost=cost)
    if quality < 0 or headcount < 0:
        raise DomainError(f"quality and headcount must be >= 0, got {quality}, {headcount}")
    if cost <= 0:
        raise DomainError(f"coordination cost must be > 0, got {cost}")
    if headcount == 0:
        if quality > 0:
            raise DomainError(f"empty team cannot carry quality {quality}")
        return 0.0
    return quality / (1.0 + cost * headcount)


def team_output(A: float, alpha: float, leff: float) -> float:
    _finite(A=A, alpha=alpha, leff=leff)
    if A <= 0 or not 0 < alpha < 1 or leff < 0:
        raise DomainError(f"need A > 0, alpha in (0,1), L_eff >= 0; got {A}, {alpha}, {leff}")
    if leff == 0:
        return 0.0
    return A * leff**alpha


def split_wages(Y: float, alpha: float, worker_skills: Sequence[float]) -> tuple[float, list[float]]:
    """Manager keeps ``(1 - alpha) Y``; workers split ``alpha Y`` in proportion to skill."""
    _finite(Y=Y, alpha=alpha)
    if Y < 0 or not 0 < alpha < 1:
        raise DomainError(f"need Y >= 0 and alpha in (0,1); got {Y}, {alpha}")
    if not worker_skills:
        if Y > 0:
            raise DomainError("positive output with no workers to pay")
        return 0.0, []
    if any(q <= 0 for q in worker_skills):
        raise DomainError("worker skills must be > 0")
    Q = math.fsum(worker_skills)
    pool = alpha * Y
    return (1.0 - alpha) * Y, [q / Q * pool for q in worker_skills]


def task_frontier(T0: float, delta: float, K_A: float) -> float:
    _finite(T0=T0, delta=delta, K_A=K_A)
    if T0 <= 0 or delta < 0 or K_A < 0:
        raise DomainError(f"need T0 > 0, delta >= 0, K_A >= 0; got {T0}, {delta}, {K_A}")
    return T0 * (1.0 + delta * K_A)


def hierarchy_layers(N: int, S: float) -> int:
    """Layers needed to supervise N workers at span S; at least one."""
    _finite(S=S)
    if N < 1:
        raise DomainError(f"workforce must be >= 1, got {N}")
    if S <= 1:
        raise DomainError(f"span must exceed 1, got {S}")
    ratio = math.log(N) / math.log(S)
    # absorb log round-off so exact powers (400 = 20**2) do not gain a layer
    return max(1, math.ceil(ratio - 1e-12))


def manager_demand(N: float, S: float) -> float:
    """Managers needed in a uniform-span hierarchy: ``N / (S - 1)``."""
    _finite(N=N, S=S)
    if N < 1:
        raise DomainError(f"workforce must be >= 1, got {N}")
    if S <= 1:
        raise DomainError(f"span must exceed 1, got {S}")
    return N / (S - 1.0)
