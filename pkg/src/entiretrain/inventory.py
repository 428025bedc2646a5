"""Customer-side stock under entire-train versus daily delivery.

An entire train of ``m_ij`` cars arrives every ``m_ij / n_ij`` days and is
consumed at the daily demand rate, giving a sawtooth stock curve on top of
the safety stock. The baseline is daily delivery of exactly one day's demand,
the cheapest inventory position a transfer shipment can have.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidHorizon, InvalidProfile, NonIntegerInterval

__all__ = [
    "DemandProfile",
    "StockReport",
    "stock_quantities",
    "period_stocks",
    "simulate_stock",
]


@dataclass(frozen=True)
class DemandProfile:
    """Demand contract of one shipment.

    Attributes:
        q_car: Rated load of one railcar (t/car).
        n_ij: Daily demand in railcars (cars/day).
        m_ij: Entire-train size (cars/train), at least ``n_ij``.
        q_safety: Safety stock (t).
        t_days: Contract length (days).
        c_inventory_unit: Holding cost (money / t-day).
    """

    q_car: float
    n_ij: float
    m_ij: float
    q_safety: float = 0.0
    t_days: float = 365.0
    c_inventory_unit: float = 0.0

    def __post_init__(self):
        for name in ("q_car", "n_ij", "m_ij", "t_days"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidProfile(f"{name} must be > 0, got {value}")
        for name in ("q_safety", "c_inventory_unit"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0):
                raise InvalidProfile(f"{name} must be >= 0, got {value}")
        if self.m_ij < self.n_ij:
            raise InvalidProfile(
                f"train size m_ij={self.m_ij} is below daily demand n_ij={self.n_ij}"
            )

    @property
    def interval_days(self) -> float:
        return self.m_ij / self.n_ij


@dataclass(frozen=True)
class StockReport:
    q_train: float
    q_daily: float
    interval_days: float
    s_train_per_day: float
    s_daily_per_day: float
    delta_s: float
    c_inventory_total: float


def stock_quantities(d: DemandProfile) -> StockReport:
    """Closed-form stock figures and total extra inventory cost for ``d``.

    ``delta_s`` is the extra average stock per day, half a car load times the
    gap between train size and daily demand. Safety stock cancels out of it.
    """
    q_train = d.q_car * d.m_ij
    q_daily = d.q_car * d.n_ij
    delta_s = 0.5 * d.q_car * (d.m_ij - d.n_ij)
    return StockReport(
        q_train=q_train,
        q_daily=q_daily,
        interval_days=d.interval_days,
        s_train_per_day=q_train / 2 + d.q_safety,
        s_daily_per_day=q_daily / 2 + d.q_safety,
        delta_s=delta_s,
        c_inventory_total=d.c_inventory_unit * d.t_days * delta_s,
    )


def period_stocks(d: DemandProfile) -> tuple[float, float]:
    """Stock-time areas (t-day) over one delivery interval.

    Returns ``(s_train, s_daily)``: the area under the entire-train sawtooth
    and under the daily-delivery sawtooth for one interval of
    ``m_ij / n_ij`` days, both including the safety-stock band.
    """
    theta = d.interval_days
    q_train = d.q_car * d.m_ij
    q_daily = d.q_car * d.n_ij
    s_train = theta / 2 * q_train + theta * d.q_safety
    s_daily = theta / 2 * q_daily + theta * d.q_safety
    return s_train, s_daily


def simulate_stock(d: DemandProfile, horizon_days: int, steps_per_day: int) -> float:
    """Time-averaged stock (t) from a step-by-step sawtooth simulation.

    A train of ``q_car * m_ij`` tons lands at the start of every interval and
    is drawn down at the daily demand rate. The stock level before and after
    each step is integrated with the trapezoid rule; arrivals are applied at
    step boundaries so the jump is never smeared across a step.

    Raises:
        NonIntegerInterval: ``m_ij / n_ij`` is not a whole number of days.
        InvalidHorizon: ``steps_per_day < 2`` or the horizon is not a positive
            whole multiple of the interval.
    """
    theta = d.interval_days
    theta_int = round(theta)
    if abs(theta - theta_int) > 1e-9 * max(1.0, theta):
        raise NonIntegerInterval(f"interval {theta} days is not an integer")
    if int(steps_per_day) != steps_per_day or steps_per_day < 2:
        raise InvalidHorizon(f"steps_per_day must be an integer >= 2, got {steps_per_day}")
    if int(horizon_days) != horizon_days or horizon_days <= 0 or horizon_days % theta_int:
        raise InvalidHorizon(
            f"horizon {horizon_days} days must be a positive multiple of {theta_int}"
        )

    n_steps = int(horizon_days) * int(steps_per_day)
    dt = 1.0 / steps_per_day
    q_train = d.q_car * d.m_ij
    draw = d.q_car * d.n_ij * dt

    step = np.arange(n_steps)
    arrivals = np.zeros(n_steps)
    arrivals[:: theta_int * steps_per_day] = q_train
    # cycle stock after this step's arrival, before its consumption
    start = np.cumsum(arrivals) - draw * step
    end = start - draw
    stock_time = np.sum(0.5 * (start + end) * dt)
    return float(stock_time / horizon_days + d.q_safety)
