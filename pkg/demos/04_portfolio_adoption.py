# %% [markdown]
# # One discount for a whole portfolio
#
# A railroad usually publishes one discount rate. Build a random portfolio of
# shipments on a small corridor, analyze all of them, and see which share of
# customers is offered, accepts, or lands in the win-win band at each rate.
# Some shipments ride direct services that bypass yards, which shrinks the
# saving from running an entire train.

# %%
import random
import tempfile
from pathlib import Path

from entiretrain import analyze, emit_adoption_csv, parse_scenario

rng = random.Random(11)
yards = ["Y1", "Y2", "Y3", "Y4"]
doc = {
    "network": {
        "nodes": [{"id": "O", "kind": "loading_station"}, {"id": "U", "kind": "unloading_station"}]
        + [{"id": y, "kind": "classification_yard"} for y in yards],
        "links": [
            {"from": "O", "to": "Y1", "length_km": 40},
            {"from": "Y1", "to": "Y2", "length_km": 280},
            {"from": "Y2", "to": "Y3", "length_km": 310},
            {"from": "Y3", "to": "Y4", "length_km": 220},
            {"from": "Y4", "to": "U", "length_km": 60},
        ],
    },
    "yards": {y: {"t_broken_up": rng.uniform(1, 3), "t_classified": rng.uniform(2, 4),
                  "c_classified": rng.uniform(25, 55)} for y in yards},
    "tariff": {"categories": [{"id": "coal", "p1": 16.3, "r2": 0.098},
                              {"id": "grain", "p1": 9.8, "r2": 0.061}]},
    "cost_params": {"gamma": 4, "c_loading_extra": 6, "c_unloading_extra": 6},
    "shipments": [],
}
for k in range(40):
    n = rng.randint(3, 30)
    shipment = {
        "id": f"S{k:02d}",
        "origin": "O",
        "destination": "U",
        "category": rng.choice(["coal", "grain"]),
        "demand": {"q_car": 60, "n_ij": n, "m_ij": n * rng.randint(1, 5), "q_safety": 100,
                   "t_days": 365, "c_inventory_unit": rng.uniform(0.1, 6.0)},
    }
    if rng.random() < 0.3:
        shipment["service_chain"] = [["O", "Y1"], ["Y1", "Y4"], ["Y4", "U"]]
    doc["shipments"].append(shipment)

scenario = parse_scenario(doc)
reports = analyze(scenario)
feasible = sum(r.outcome.feasible for r in reports)
print(f"{feasible} of {len(reports)} shipments have a win-win band")

# %%
out = Path(tempfile.mkdtemp()) / "adoption.csv"
points = emit_adoption_csv(scenario, 0.0, 0.05, 26, out)
for p in points[::5]:
    print(f"beta={p.beta:.3f} offered={p.offered_fraction:.2f} "
          f"adopting={p.adopting_fraction:.2f} win-win={p.win_win_fraction:.2f}")
best = max(points, key=lambda p: p.win_win_fraction)
print(f"best single rate {best.beta:.3f}: {best.win_win_fraction:.0%} win-win; CSV at {out}")
