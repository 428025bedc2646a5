"""Scenario files, the per-shipment analysis pipeline, and report output.

A scenario is one JSON document::

    {
      "network": {"nodes": [{"id": "O", "kind": "loading_station"}, ...],
                  "links": [{"from": "O", "to": "Y1", "length_km": 50}, ...]},
      "yards": {"Y1": {"t_broken_up": 1.5, "t_classified": 2.5, "c_classified": 40}},
      "tariff": {"categories": [{"id": "coal", "p1": 16.3, "r2": 0.098}]},
      "cost_params": {"gamma": 5, "c_loading_extra": 5, "c_unloading_extra": 5},
      "shipments": [{"id": "S1", "origin": "O", "destination": "U",
                     "category": "coal",
                     "demand": {"q_car": 60, "n_ij": 15, "m_ij": 45,
                                "q_safety": 0, "t_days": 365,
                                "c_inventory_unit": 0.5},
                     "service_chain": [["O", "Y1"], ["Y1", "U"]]}]
    }

``service_chain`` is optional; without it every classification yard on the
route reclassifies the shipment.
"""

from __future__ import annotations

import csv
import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .errors import (
    BadRange,
    EmptyPortfolio,
    EntireTrainError,
    ParseError,
    ScenarioIOError,
    UnknownNode,
    ValidationError,
)
from .inventory import DemandProfile, StockReport, stock_quantities
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
from .railcost import CostBreakdown, RailCostParams, cost_breakdown
from .tariff import TariffCategory, TariffTable, contract_tonnage, rail_charge
from .tradeoff import (
    AdoptionPoint,
    TradeoffInputs,
    TradeoffOutcome,
    adoption_curve,
    classify,
    dh,
    dr,
    evaluate,
)

logger = logging.getLogger(__name__)

__all__ = [
    "Shipment",
    "Scenario",
    "ShipmentReport",
    "parse_scenario",
    "load_scenario",
    "scenario_to_dict",
    "save_scenario",
    "golden_scenario_path",
    "analyze",
    "analyze_shipment",
    "report_to_dict",
    "reports_to_json",
    "write_report_json",
    "format_table",
    "quote",
    "adoption_points",
    "emit_adoption_csv",
    "CSV_HEADER",
]

CSV_HEADER = ("beta", "offered_fraction", "adopting_fraction", "win_win_fraction")

_MISSING = object()


@dataclass(frozen=True)
class Shipment:
    id: str
    origin: str
    destination: str
    demand: DemandProfile
    category: str
    service_chain: ServiceChain | None = None


@dataclass(frozen=True)
class Scenario:
    network: Network
    tariff: TariffTable
    cost_params: RailCostParams
    shipments: tuple[Shipment, ...]

    def __post_init__(self):
        seen = set()
        for s in self.shipments:
            if s.id in seen:
                raise ValidationError(f"duplicate shipment id {s.id}")
            seen.add(s.id)
            for end in (s.origin, s.destination):
                if end not in self.network:
                    raise UnknownNode(f"shipment {s.id}: unknown node {end}")
            if s.origin == s.destination:
                raise ValidationError(f"shipment {s.id}: origin equals destination")
            self.tariff[s.category]
            if s.service_chain is not None:
                for leg in s.service_chain.legs:
                    for end in leg:
                        if end not in self.network:
                            raise UnknownNode(
                                f"shipment {s.id} service chain: unknown node {end}"
                            )

    def shipment(self, shipment_id: str) -> Shipment:
        for s in self.shipments:
            if s.id == shipment_id:
                return s
        raise ValidationError(f"unknown shipment {shipment_id}")


@dataclass(frozen=True)
class ShipmentReport:
    """Everything computed for one shipment.

    If routing or pricing failed, ``error`` holds the reason and the numeric
    sections are ``None``.
    """

    shipment_id: str
    route: Route | None = None
    costs: CostBreakdown | None = None
    stock: StockReport | None = None
    price: float | None = None
    outcome: TradeoffOutcome | None = None
    error: str | None = None

    @property
    def inputs(self) -> TradeoffInputs | None:
        if self.error is not None:
            return None
        return TradeoffInputs(self.costs.de_total, self.price, self.stock.c_inventory_total)


# --------------------------------------------------------------------------
# parsing

def _get(obj, key, path, kind=float, default=_MISSING):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", path)
    where = f"{path}.{key}" if path else key
    if key not in obj:
        if default is _MISSING:
            raise ParseError("missing field", where)
        return default
    value = obj[key]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParseError(f"expected a number, got {value!r}", where)
        return float(value)
    if kind is str:
        if not isinstance(value, str):
            raise ParseError(f"expected a string, got {value!r}", where)
        return value
    if not isinstance(value, kind):
        raise ParseError(f"expected {kind.__name__}, got {type(value).__name__}", where)
    return value


def _parse_chain(raw, path) -> ServiceChain:
    if not isinstance(raw, list):
        raise ParseError("expected a list of [from, to] legs", path)
    legs = []
    for i, leg in enumerate(raw):
        if (
            not isinstance(leg, list)
            or len(leg) != 2
            or not all(isinstance(x, str) for x in leg)
        ):
            raise ParseError("expected a [from, to] pair of node ids", f"{path}[{i}]")
        legs.append((leg[0], leg[1]))
    return ServiceChain(tuple(legs))


def parse_scenario(doc: dict) -> Scenario:
    """Build and validate a :class:`Scenario` from an already-decoded document.

    Raises:
        ParseError: Structure or field types are wrong; the locus names the
            offending field.
        ValidationError: A value or cross-reference is invalid.
    """
    if not isinstance(doc, dict):
        raise ParseError("scenario must be a JSON object", "$")
    network = _get(doc, "network", "", dict)
    raw_nodes = _get(network, "nodes", "network", list)
    raw_links = _get(network, "links", "network", list)
    raw_yards = _get(doc, "yards", "", dict, default={})

    yards = {}
    for yid, params in raw_yards.items():
        path = f"yards.{yid}"
        yards[yid] = YardParams(
            t_broken_up=_get(params, "t_broken_up", path),
            t_classified=_get(params, "t_classified", path),
            c_classified=_get(params, "c_classified", path),
        )

    nodes = []
    yard_nodes = set()
    for i, raw in enumerate(raw_nodes):
        path = f"network.nodes[{i}]"
        nid = _get(raw, "id", path, str)
        kind_name = _get(raw, "kind", path, str)
        try:
            kind = NodeKind(kind_name)
        except ValueError:
            raise ParseError(
                f"kind must be one of {[k.value for k in NodeKind]}", f"{path}.kind"
            ) from None
        if kind is NodeKind.CLASSIFICATION_YARD:
            yard_nodes.add(nid)
        nodes.append(Node(nid, kind, yards.get(nid) if kind is NodeKind.CLASSIFICATION_YARD else None))
    for yid in yards:
        if yid not in yard_nodes:
            raise ValidationError(f"yards.{yid}: not a classification-yard node")

    links = []
    for i, raw in enumerate(raw_links):
        path = f"network.links[{i}]"
        links.append(
            Link(
                _get(raw, "from", path, str),
                _get(raw, "to", path, str),
                _get(raw, "length_km", path),
            )
        )
    net = build_network(nodes, links)

    tariff_doc = _get(doc, "tariff", "", dict)
    cats = []
    for i, raw in enumerate(_get(tariff_doc, "categories", "tariff", list)):
        path = f"tariff.categories[{i}]"
        cats.append(
            TariffCategory(_get(raw, "id", path, str), _get(raw, "p1", path), _get(raw, "r2", path))
        )
    table = TariffTable(cats)

    cp = _get(doc, "cost_params", "", dict)
    params = RailCostParams(
        gamma=_get(cp, "gamma", "cost_params"),
        c_loading_extra=_get(cp, "c_loading_extra", "cost_params"),
        c_unloading_extra=_get(cp, "c_unloading_extra", "cost_params"),
        dg_loading=_get(cp, "dg_loading", "cost_params", default=0.0),
        dg_unloading=_get(cp, "dg_unloading", "cost_params", default=0.0),
    )

    shipments = []
    for i, raw in enumerate(_get(doc, "shipments", "", list)):
        path = f"shipments[{i}]"
        dem = _get(raw, "demand", path, dict)
        dpath = f"{path}.demand"
        demand = DemandProfile(
            q_car=_get(dem, "q_car", dpath),
            n_ij=_get(dem, "n_ij", dpath),
            m_ij=_get(dem, "m_ij", dpath),
            q_safety=_get(dem, "q_safety", dpath, default=0.0),
            t_days=_get(dem, "t_days", dpath),
            c_inventory_unit=_get(dem, "c_inventory_unit", dpath),
        )
        chain_raw = _get(raw, "service_chain", path, list, default=None)
        chain = None if chain_raw is None else _parse_chain(chain_raw, f"{path}.service_chain")
        shipments.append(
            Shipment(
                id=_get(raw, "id", path, str),
                origin=_get(raw, "origin", path, str),
                destination=_get(raw, "destination", path, str),
                demand=demand,
                category=_get(raw, "category", path, str),
                service_chain=chain,
            )
        )
    return Scenario(net, table, params, tuple(shipments))


def load_scenario(path) -> Scenario:
    """Read, parse and validate a scenario file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioIOError(f"cannot read scenario {path}: {exc.strerror or exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    return parse_scenario(doc)


def scenario_to_dict(scenario: Scenario) -> dict:
    """Inverse of :func:`parse_scenario`."""
    net = scenario.network
    return {
        "network": {
            "nodes": [{"id": n.id, "kind": n.kind.value} for n in net.nodes],
            "links": [{"from": l.a, "to": l.b, "length_km": l.length_km} for l in net.links],
        },
        "yards": {n.id: asdict(n.yard_params) for n in net.nodes if n.is_yard},
        "tariff": {
            "categories": [
                {"id": c.category_id, "p1": c.p1, "r2": c.r2} for c in scenario.tariff
            ]
        },
        "cost_params": asdict(scenario.cost_params),
        "shipments": [
            {
                "id": s.id,
                "origin": s.origin,
                "destination": s.destination,
                "category": s.category,
                "demand": asdict(s.demand),
                **(
                    {"service_chain": [list(leg) for leg in s.service_chain.legs]}
                    if s.service_chain is not None
                    else {}
                ),
            }
            for s in scenario.shipments
        ],
    }


def save_scenario(scenario: Scenario, path) -> None:
    try:
        Path(path).write_text(json.dumps(scenario_to_dict(scenario), indent=2) + "\n")
    except OSError as exc:
        raise ScenarioIOError(f"cannot write {path}: {exc}") from exc


def golden_scenario_path() -> Path:
    """Path of the bundled single-shipment reference scenario."""
    return Path(str(resources.files("entiretrain") / "data" / "golden_scenario.json"))


# --------------------------------------------------------------------------
# analysis

def analyze_shipment(scenario: Scenario, shipment: Shipment) -> ShipmentReport:
    """Run the full pipeline for one shipment; failures land in ``error``."""
    net = scenario.network
    d = shipment.demand
    try:
        route = shortest_path(net, shipment.origin, shipment.destination)
        route = reclassification_set(net, route, shipment.service_chain)
        costs = cost_breakdown(scenario.cost_params, route, net.yard_params(), d.n_ij, d.t_days)
        stock = stock_quantities(d)
        price = rail_charge(
            scenario.tariff, shipment.category, route.distance_km, contract_tonnage(d)
        )
        outcome = evaluate(TradeoffInputs(costs.de_total, price, stock.c_inventory_total))
    except EntireTrainError as exc:
        logger.warning("shipment %s not analyzed: %s", shipment.id, exc)
        return ShipmentReport(shipment.id, error=f"{type(exc).__name__}: {exc}")
    return ShipmentReport(shipment.id, route, costs, stock, price, outcome)


def analyze(scenario: Scenario, max_workers: int | None = None) -> list[ShipmentReport]:
    """Reports for every shipment, ordered by shipment id.

    With ``max_workers`` shipments are analyzed on a thread pool; results are
    identical to the sequential run.
    """
    ordered = sorted(scenario.shipments, key=lambda s: s.id)
    if max_workers is None or max_workers <= 1:
        return [analyze_shipment(scenario, s) for s in ordered]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(lambda s: analyze_shipment(scenario, s), ordered))


def _money(x):
    return None if x is None else round(x, 2)


def report_to_dict(report: ShipmentReport) -> dict:
    """JSON-ready form of a report. Money is rounded to cents; nothing else is."""
    out: dict[str, Any] = {"shipment_id": report.shipment_id}
    if report.error is not None:
        out["error"] = report.error
        return out
    r, c, s, o = report.route, report.costs, report.stock, report.outcome
    out["route"] = {
        "nodes": list(r.nodes),
        "distance_km": r.distance_km,
        "q": r.q,
        "reclass_yards": list(r.reclass_yards),
    }
    out["costs"] = {
        "de_loading": _money(c.de_loading),
        "de_unloading": _money(c.de_unloading),
        "de_reclassification": _money(c.de_reclassification),
        "de_car_miles": _money(c.de_car_miles),
        "de_total": _money(c.de_total),
        "dg_reclassification_car_hours": c.dg_reclassification,
        "dc_reclassification": _money(c.dc_reclassification),
    }
    out["stock"] = {
        **{k: v for k, v in asdict(s).items() if k != "c_inventory_total"},
        "c_inventory_total": _money(s.c_inventory_total),
    }
    out["price"] = _money(report.price)
    out["tradeoff"] = {
        "case_label": o.case_label.value,
        "feasible": o.feasible,
        "beta_min": o.beta_min,
        "beta_max": o.beta_max,
        "beta_recommended": o.beta_recommended,
        "beta_evaluated": o.beta_evaluated,
        "dh": _money(o.dh_at_recommended),
        "dr": _money(o.dr_at_recommended),
        "note": o.note,
    }
    return out


def reports_to_json(reports: Sequence[ShipmentReport]) -> str:
    return json.dumps({"reports": [report_to_dict(r) for r in reports]}, indent=2) + "\n"


def write_report_json(reports: Sequence[ShipmentReport], path) -> None:
    try:
        Path(path).write_text(reports_to_json(reports), encoding="utf-8")
    except OSError as exc:
        raise ScenarioIOError(f"cannot write report {path}: {exc}") from exc


def format_table(reports: Sequence[ShipmentReport]) -> str:
    """Fixed-width summary table, one row per shipment."""
    header = (
        f"{'shipment':<12}{'km':>9}{'q':>4}{'dE':>16}{'P':>17}{'C_inv':>15}"
        f"{'beta_min':>10}{'beta_max':>10}{'beta*':>10}  case"
    )
    lines = [header, "-" * len(header)]
    for rep in reports:
        if rep.error is not None:
            lines.append(f"{rep.shipment_id:<12}  ERROR {rep.error}")
            continue
        o = rep.outcome
        beta_rec = "-" if o.beta_recommended is None else f"{o.beta_recommended:.5f}"
        lines.append(
            f"{rep.shipment_id:<12}{rep.route.distance_km:>9.1f}{rep.route.q:>4d}"
            f"{rep.costs.de_total:>16,.2f}{rep.price:>17,.2f}"
            f"{rep.stock.c_inventory_total:>15,.2f}"
            f"{o.beta_min:>10.5f}{o.beta_max:>10.5f}{beta_rec:>10}  {o.case_label.value}"
            + (f" ({o.note})" if o.note else "")
        )
    return "\n".join(lines)


def quote(scenario: Scenario, shipment_id: str, beta: float) -> dict:
    """Surpluses and case label for one shipment at a given discount."""
    report = analyze_shipment(scenario, scenario.shipment(shipment_id))
    if report.error is not None:
        raise ValidationError(f"shipment {shipment_id} cannot be quoted: {report.error}")
    inputs = report.inputs
    return {
        "shipment_id": shipment_id,
        "beta": beta,
        "de_total": inputs.de_total,
        "price": inputs.price,
        "c_inventory": inputs.c_inventory,
        "dh": dh(inputs, beta),
        "dr": dr(inputs, beta),
        "case_label": classify(inputs, beta).value,
    }


# --------------------------------------------------------------------------
# adoption sweep

def adoption_points(
    scenario: Scenario, beta_min: float, beta_max: float, steps: int
) -> list[AdoptionPoint]:
    """Adoption curve over ``steps`` evenly spaced discounts, endpoints included.

    Shipments that could not be analyzed are left out of the portfolio.
    """
    if not (0.0 <= beta_min <= beta_max <= 1.0) or any(map(math.isnan, (beta_min, beta_max))):
        raise BadRange(f"need 0 <= beta_min <= beta_max <= 1, got [{beta_min}, {beta_max}]")
    if int(steps) != steps or steps < 2:
        raise BadRange(f"steps must be an integer >= 2, got {steps}")
    portfolio = [r.inputs for r in analyze(scenario) if r.error is None]
    if not portfolio:
        raise EmptyPortfolio("no shipment in the scenario could be analyzed")
    return adoption_curve(portfolio, np.linspace(beta_min, beta_max, int(steps)))


def emit_adoption_csv(
    scenario: Scenario, beta_min: float, beta_max: float, steps: int, out
) -> list[AdoptionPoint]:
    """Write the adoption curve as CSV and return the points written."""
    points = adoption_points(scenario, beta_min, beta_max, steps)
    try:
        with open(out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for p in points:
                writer.writerow([format(v, ".12g") for v in p])
    except OSError as exc:
        raise ScenarioIOError(f"cannot write {out}: {exc}") from exc
    return points
