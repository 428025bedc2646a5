"""Discount trade-off between the railroad and the customer.

For a discount ``beta`` (a fraction of the rail charge ``price``):

* railroad surplus  ``dh = de_total - beta * price``
* customer surplus  ``dr = beta * price - c_inventory``

Both parties accept when their surplus is non-negative. Their sum does not
depend on ``beta``; the discount only moves surplus from one side to the
other, so a win-win discount exists iff ``de_total >= c_inventory``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import BetaOutOfRange, EmptyPortfolio, UnsortedGrid, ValidationError

__all__ = [
    "CaseLabel",
    "TradeoffInputs",
    "TradeoffOutcome",
    "FeasibleInterval",
    "AdoptionPoint",
    "TIE_RTOL",
    "dh",
    "dr",
    "classify",
    "feasible_interval",
    "recommend_beta",
    "evaluate",
    "adoption_curve",
]

# A surplus within TIE_RTOL * price of zero counts as zero (accepted), so that
# boundary discounts like c_inventory / price survive floating-point rounding.
TIE_RTOL = 1e-12


class CaseLabel(str, enum.Enum):
    CASE1_RAILROAD_REFUSES = "CASE1_RAILROAD_REFUSES"
    CASE2_CUSTOMER_REFUSES = "CASE2_CUSTOMER_REFUSES"
    CASE3_RAILROAD_REFUSES_AT_BETA = "CASE3_RAILROAD_REFUSES_AT_BETA"
    CASE4_WIN_WIN = "CASE4_WIN_WIN"


@dataclass(frozen=True)
class TradeoffInputs:
    """Contract-level money figures for one shipment.

    Attributes:
        de_total: Railroad saving from running the entire train.
        price: Undiscounted rail charge, strictly positive.
        c_inventory: Customer's extra inventory cost, non-negative.
    """

    de_total: float
    price: float
    c_inventory: float

    def __post_init__(self):
        if not (math.isfinite(self.price) and self.price > 0):
            raise ValidationError(f"price must be > 0, got {self.price}")
        if not (math.isfinite(self.c_inventory) and self.c_inventory >= 0):
            raise ValidationError(f"c_inventory must be >= 0, got {self.c_inventory}")
        if not math.isfinite(self.de_total):
            raise ValidationError("de_total must be finite")


class FeasibleInterval(NamedTuple):
    beta_min: float
    beta_max: float
    feasible: bool


class AdoptionPoint(NamedTuple):
    beta: float
    offered_fraction: float
    adopting_fraction: float
    win_win_fraction: float


@dataclass(frozen=True)
class TradeoffOutcome:
    """Decision for one shipment.

    When ``feasible`` the surpluses are evaluated at ``beta_recommended``.
    Otherwise there is no recommendation and they are evaluated at the
    smallest discount the customer would accept (capped at 1), which shows how
    far the railroad falls short. ``beta_evaluated`` records which was used.
    ``note`` is ``"infeasible band"`` when both parties refuse at that point
    although the railroad saves money.
    """

    case_label: CaseLabel
    beta_min: float
    beta_max: float
    feasible: bool
    beta_recommended: float | None
    beta_evaluated: float
    dh_at_recommended: float
    dr_at_recommended: float
    note: str | None = None


def _check_beta(beta: float) -> None:
    if not 0.0 <= beta <= 1.0:
        raise BetaOutOfRange(f"beta must lie in [0, 1], got {beta}")


def _accepts(surplus, price):
    return surplus >= -TIE_RTOL * price


def dh(inputs: TradeoffInputs, beta: float) -> float:
    """Railroad surplus after granting discount ``beta``."""
    _check_beta(beta)
    return inputs.de_total - beta * inputs.price


def dr(inputs: TradeoffInputs, beta: float) -> float:
    """Customer surplus: discount received minus extra inventory cost."""
    _check_beta(beta)
    return beta * inputs.price - inputs.c_inventory


def classify(inputs: TradeoffInputs, beta: float) -> CaseLabel:
    """Label the outcome of offering discount ``beta``.

    A railroad that saves nothing refuses regardless of ``beta`` (case 1).
    Otherwise: railroad accepts but customer refuses (case 2), railroad
    refuses (case 3), or both accept (case 4). The combination where both
    refuse despite a non-negative saving is folded into case 3.
    """
    if inputs.de_total < 0:
        return CaseLabel.CASE1_RAILROAD_REFUSES
    rail_ok = _accepts(dh(inputs, beta), inputs.price)
    cust_ok = _accepts(dr(inputs, beta), inputs.price)
    if rail_ok and cust_ok:
        return CaseLabel.CASE4_WIN_WIN
    if rail_ok:
        return CaseLabel.CASE2_CUSTOMER_REFUSES
    return CaseLabel.CASE3_RAILROAD_REFUSES_AT_BETA


def feasible_interval(inputs: TradeoffInputs) -> FeasibleInterval:
    """Discount band ``[beta_min, beta_max]`` in which both sides accept.

    ``beta_min`` is where the customer breaks even (not clamped, so values
    above 1 show the charge cannot cover the inventory cost). ``beta_max`` is
    where the railroad breaks even, clamped to ``[0, 1]``.
    """
    p = inputs.price
    beta_min = inputs.c_inventory / p
    beta_max = min(max(inputs.de_total / p, 0.0), 1.0)
    feasible = (
        inputs.de_total >= 0
        and inputs.de_total >= inputs.c_inventory
        and beta_min <= 1.0
    )
    return FeasibleInterval(beta_min, beta_max, feasible)


def recommend_beta(inputs: TradeoffInputs) -> float | None:
    """Discount that splits the joint surplus equally, or ``None`` if infeasible.

    At this discount both parties keep ``(de_total - c_inventory) / 2``. If the
    split point lies above 1 it is capped at 1, where both still accept.
    """
    if not feasible_interval(inputs).feasible:
        return None
    beta = (inputs.de_total + inputs.c_inventory) / (2 * inputs.price)
    return min(beta, 1.0)


def evaluate(inputs: TradeoffInputs) -> TradeoffOutcome:
    """Interval, recommendation and case label for one shipment."""
    beta_min, beta_max, feasible = feasible_interval(inputs)
    beta_rec = recommend_beta(inputs)
    beta_eval = beta_rec if beta_rec is not None else min(beta_min, 1.0)
    h = dh(inputs, beta_eval)
    r = dr(inputs, beta_eval)
    label = classify(inputs, beta_eval)
    note = None
    if (
        inputs.de_total >= 0
        and not _accepts(h, inputs.price)
        and not _accepts(r, inputs.price)
    ):
        note = "infeasible band"
    return TradeoffOutcome(
        case_label=label,
        beta_min=beta_min,
        beta_max=beta_max,
        feasible=feasible,
        beta_recommended=beta_rec,
        beta_evaluated=beta_eval,
        dh_at_recommended=h,
        dr_at_recommended=r,
        note=note,
    )


def adoption_curve(
    shipment_outcomes: Sequence[TradeoffInputs], betas: Sequence[float]
) -> list[AdoptionPoint]:
    """Share of a portfolio that accepts at each discount in ``betas``.

    For every ``beta``: ``offered_fraction`` counts shipments whose railroad
    surplus is non-negative, ``adopting_fraction`` those whose customer
    surplus is non-negative, ``win_win_fraction`` those with both. One
    discount applies to the whole portfolio.

    Raises:
        EmptyPortfolio: No shipments given.
        UnsortedGrid: ``betas`` is empty or not ascending.
        BetaOutOfRange: A grid value lies outside ``[0, 1]``.
    """
    if len(shipment_outcomes) == 0:
        raise EmptyPortfolio("portfolio has no shipments")
    grid = np.asarray(betas, dtype=float)
    if grid.ndim != 1 or grid.size == 0 or np.any(np.diff(grid) < 0):
        raise UnsortedGrid("beta grid must be a non-empty ascending sequence")
    if grid[0] < 0 or grid[-1] > 1:
        raise BetaOutOfRange("beta grid values must lie in [0, 1]")

    de = np.array([s.de_total for s in shipment_outcomes])[:, None]
    price = np.array([s.price for s in shipment_outcomes])[:, None]
    c_inv = np.array([s.c_inventory for s in shipment_outcomes])[:, None]
    discount = grid[None, :] * price
    offered = (de >= 0) & _accepts(de - discount, price)
    adopting = _accepts(discount - c_inv, price)
    both = offered & adopting
    return [
        AdoptionPoint(float(b), float(o), float(a), float(w))
        for b, o, a, w in zip(
            grid, offered.mean(axis=0), adopting.mean(axis=0), both.mean(axis=0)
        )
    ]
