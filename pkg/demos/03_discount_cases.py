# %% [markdown]
# # Which side walks away at a given discount
#
# Sweep the discount for three shipments: one where the railroad loses money
# on an entire train, one with a comfortable win-win band, and one where the
# railroad saves money but not enough to cover the customer's inventory.

# %%
import numpy as np

from entiretrain import TradeoffInputs, classify, evaluate

shipments = {
    "loss-making": TradeoffInputs(de_total=-20_000, price=1_000_000, c_inventory=5_000),
    "win-win":     TradeoffInputs(de_total=80_000, price=1_000_000, c_inventory=30_000),
    "too thin":    TradeoffInputs(de_total=25_000, price=1_000_000, c_inventory=40_000),
}

for name, inputs in shipments.items():
    o = evaluate(inputs)
    print(f"\n{name}: band [{o.beta_min:.3f}, {o.beta_max:.3f}] feasible={o.feasible}"
          + (f", recommended beta {o.beta_recommended:.3f}" if o.feasible else ""))
    for beta in np.round(np.arange(0, 0.101, 0.02), 3):
        print(f"  beta={beta:.2f}  {classify(inputs, float(beta)).value}")
