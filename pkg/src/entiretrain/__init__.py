"""Decide when a low-frequency entire train pays off for railroad and customer.

The pipeline per shipment: shortest route and reclassification yards
(:mod:`.network`), railroad saving (:mod:`.railcost`), rail charge
(:mod:`.tariff`), customer inventory cost (:mod:`.inventory`), and the
discount trade-off (:mod:`.tradeoff`). :mod:`.scenario` ties them together
over JSON scenario files.
"""

from .errors import *  # noqa: F401,F403
from .inventory import DemandProfile, StockReport, period_stocks, simulate_stock, stock_quantities
from .network import (
    Link,
    Network,
    Node,
    NodeKind,
    Route,
    ServiceChain,
    YardParams,
    build_network,
    reclassification_set,
    shortest_path,
)
from .railcost import (
    CostBreakdown,
    RailCostParams,
    cost_breakdown,
    reclass_cost_saving,
    reclass_time_saving,
)
from .scenario import (
    Scenario,
    Shipment,
    ShipmentReport,
    analyze,
    emit_adoption_csv,
    golden_scenario_path,
    load_scenario,
    parse_scenario,
    quote,
    scenario_to_dict,
)
from .tariff import TariffCategory, TariffTable, contract_tonnage, rail_charge
from .tradeoff import (
    AdoptionPoint,
    CaseLabel,
    FeasibleInterval,
    TradeoffInputs,
    TradeoffOutcome,
    adoption_curve,
    classify,
    dh,
    dr,
    evaluate,
    feasible_interval,
    recommend_beta,
)

__version__ = "0.1.0"
