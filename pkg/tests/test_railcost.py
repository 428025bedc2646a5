import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entiretrain import (
    RailCostParams,
    Route,
    UnknownYard,
    ValidationError,
    YardParams,
    cost_breakdown,
    reclass_cost_saving,
    reclass_time_saving,
)

YARD_4H_40 = YardParams(t_broken_up=1.5, t_classified=2.5, c_classified=40.0)


def route_through(*yards):
    return Route(("O", *yards, "U"), 800.0, tuple(yards))


def test_no_reclassification_is_free():
    r = route_through()
    assert reclass_time_saving(r, {}, 15, 365) == 0
    assert reclass_cost_saving(r, {}, 15, 365) == 0


def test_time_saving_two_yards(two_yard_route):
    yards = {"Y1": YARD_4H_40, "Y2": YARD_4H_40}
    assert reclass_time_saving(two_yard_route, yards, 15, 365) == 43_800


def test_unknown_yard(two_yard_route):
    with pytest.raises(UnknownYard):
        reclass_time_saving(two_yard_route, {"Y1": YARD_4H_40}, 15, 365)
    with pytest.raises(UnknownYard):
        reclass_cost_saving(two_yard_route, {"Y1": YARD_4H_40}, 15, 365)


def test_worked_reclassification_example():
    # 2.5 reclassifications at 40 per car: yards costing 40 + 40 + 20
    yards = {
        "Y1": YardParams(0, 0, 40),
        "Y2": YardParams(0, 0, 40),
        "Y3": YardParams(0, 0, 20),
    }
    assert reclass_cost_saving(route_through("Y1", "Y2", "Y3"), yards, 15, 365) == 547_500


def test_cost_saving_three_yards():
    yards = {"A": YardParams(0, 0, 30), "B": YardParams(0, 0, 40), "C": YardParams(0, 0, 50)}
    assert reclass_cost_saving(route_through("A", "B", "C"), yards, 10, 30) == 36_000


def test_breakdown_all_zero():
    b = cost_breakdown(RailCostParams(), route_through(), {}, 15, 365)
    assert b.de_total == 0
    assert b.de_car_miles == 0


def test_breakdown_worked(two_yard_route):
    params = RailCostParams(gamma=10, c_loading_extra=5, c_unloading_extra=5)
    yards = {"Y1": YARD_4H_40, "Y2": YARD_4H_40}
    b = cost_breakdown(params, two_yard_route, yards, 15, 365)
    assert b.dg_reclassification == 43_800
    assert b.dc_reclassification == 438_000
    assert b.de_reclassification == 876_000
    assert b.de_loading == -27_375
    assert b.de_unloading == -27_375
    assert b.de_car_miles == 0
    assert b.de_total == 821_250


def test_loading_time_terms_are_kept():
    params = RailCostParams(gamma=10, c_loading_extra=1, dg_loading=7, dg_unloading=-3)
    b = cost_breakdown(params, route_through(), {}, 2, 5)
    assert b.de_loading == 10 * 7 - 1 * 2 * 5
    assert b.de_unloading == -30


def test_huge_loading_cost_makes_railroad_refuse():
    b = cost_breakdown(RailCostParams(c_loading_extra=1e6), route_through(), {}, 15, 365)
    assert b.de_total < 0


def test_negative_params_rejected():
    with pytest.raises(ValidationError):
        RailCostParams(gamma=-1)


nonneg = st.floats(0, 100)


@settings(max_examples=100)
@given(
    gamma=nonneg,
    c_load=nonneg,
    c_unload=nonneg,
    yards=st.lists(st.tuples(nonneg, nonneg, nonneg), max_size=5),
    n=st.floats(0.5, 100),
    t=st.floats(1, 1000),
    bump=st.floats(0.1, 10),
    which=st.sampled_from(["t", "c", "load", "unload"]),
)
def test_breakdown_properties(gamma, c_load, c_unload, yards, n, t, bump, which):
    ids = [f"Y{i}" for i in range(len(yards))]
    lookup = {i: YardParams(*y) for i, y in zip(ids, yards)}
    route = route_through(*ids)
    params = RailCostParams(gamma, c_load, c_unload)
    b = cost_breakdown(params, route, lookup, n, t)
    tol = 1e-9 * (1 + abs(b.de_reclassification) + abs(b.de_loading) + abs(b.de_unloading))

    assert b.de_total == pytest.approx(
        b.de_loading + b.de_unloading + b.de_reclassification + b.de_car_miles, abs=tol
    )
    assert b.de_reclassification == pytest.approx(
        gamma * b.dg_reclassification + b.dc_reclassification, abs=tol
    )
    assert b.de_loading <= 0 and b.de_unloading <= 0
    assert b.de_car_miles == 0
    assert cost_breakdown(params, route, lookup, n, 2 * t).de_total == pytest.approx(
        2 * b.de_total, abs=2 * tol
    )

    # monotonicity in one parameter at a time
    if which in ("t", "c") and ids:
        y = lookup[ids[0]]
        grown = (
            YardParams(y.t_broken_up + bump, y.t_classified, y.c_classified)
            if which == "t"
            else YardParams(y.t_broken_up, y.t_classified, y.c_classified + bump)
        )
        b2 = cost_breakdown(params, route, {**lookup, ids[0]: grown}, n, t)
        assert b2.de_total >= b.de_total - tol
    elif which == "load":
        b2 = cost_breakdown(RailCostParams(gamma, c_load + bump, c_unload), route, lookup, n, t)
        assert b2.de_total <= b.de_total + tol
    elif which == "unload":
        b2 = cost_breakdown(RailCostParams(gamma, c_load, c_unload + bump), route, lookup, n, t)
        assert b2.de_total <= b.de_total + tol
