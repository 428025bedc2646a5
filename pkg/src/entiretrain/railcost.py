"""Railroad cost difference between transfer service and an entire train.

All quantities cover the whole contract: ``t_days`` days of ``n_ij`` cars a
day. Positive values are savings for the railroad when it runs the entire
train. Car-mile costs are the same for both modes, so that component is
always zero but kept in the breakdown.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping

from .errors import UnknownYard, ValidationError
from .network import Route, YardParams

logger = logging.getLogger(__name__)

__all__ = [
    "RailCostParams",
    "CostBreakdown",
    "reclass_time_saving",
    "reclass_cost_saving",
    "cost_breakdown",
]


@dataclass(frozen=True)
class RailCostParams:
    """Railroad-side cost parameters.

    Attributes:
        gamma: Money value of one saved car-hour.
        c_loading_extra: Extra loading cost per car when loading a whole train.
        c_unloading_extra: Extra unloading cost per car.
        dg_loading: Loading-time difference in car-hours (usually negligible).
        dg_unloading: Unloading-time difference in car-hours.
    """

    gamma: float = 0.0
    c_loading_extra: float = 0.0
    c_unloading_extra: float = 0.0
    dg_loading: float = 0.0
    dg_unloading: float = 0.0

    def __post_init__(self):
        for name in ("gamma", "c_loading_extra", "c_unloading_extra"):
            if not getattr(self, name) >= 0:
                raise ValidationError(f"{name} must be >= 0")


@dataclass(frozen=True)
class CostBreakdown:
    de_loading: float
    de_unloading: float
    de_reclassification: float
    de_car_miles: float
    de_total: float
    dg_reclassification: float
    dc_reclassification: float


def _yards_on(route: Route, yards: Mapping[str, YardParams]) -> list[YardParams]:
    try:
        return [yards[k] for k in route.reclass_yards]
    except KeyError as exc:
        raise UnknownYard(f"no yard parameters for {exc.args[0]}") from None


def reclass_time_saving(
    route: Route, yards: Mapping[str, YardParams], n_ij: float, t_days: float
) -> float:
    """Car-hours of yard delay avoided over the contract."""
    delay = sum(y.t_broken_up + y.t_classified for y in _yards_on(route, yards))
    return t_days * n_ij * delay


def reclass_cost_saving(
    route: Route, yards: Mapping[str, YardParams], n_ij: float, t_days: float
) -> float:
    """Yard handling cost avoided over the contract."""
    per_car = sum(y.c_classified for y in _yards_on(route, yards))
    return t_days * n_ij * per_car


def cost_breakdown(
    params: RailCostParams,
    route: Route,
    yards: Mapping[str, YardParams],
    n_ij: float,
    t_days: float,
) -> CostBreakdown:
    """Full railroad saving ``de_total`` and its components.

    Loading and unloading terms are the extra per-car handling cost of
    building a whole train, so with zero time differences they are never
    positive. The reclassification term converts avoided yard delay to money
    with ``gamma`` and adds the avoided handling cost.
    """
    cars = t_days * n_ij
    de_loading = params.gamma * params.dg_loading - params.c_loading_extra * cars
    de_unloading = params.gamma * params.dg_unloading - params.c_unloading_extra * cars
    dg = reclass_time_saving(route, yards, n_ij, t_days)
    dc = reclass_cost_saving(route, yards, n_ij, t_days)
    de_reclass = params.gamma * dg + dc
    de_car_miles = 0.0
    breakdown = CostBreakdown(
        de_loading=de_loading,
        de_unloading=de_unloading,
        de_reclassification=de_reclass,
        de_car_miles=de_car_miles,
        de_total=de_loading + de_unloading + de_reclass + de_car_miles,
        dg_reclassification=dg,
        dc_reclassification=dc,
    )
    logger.debug("cost breakdown for %s: %s", route.nodes, breakdown)
    return breakdown
