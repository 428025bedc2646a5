# %% [markdown]
# # Stock under low-frequency entire trains
#
# A train of `m_ij` cars every `m_ij / n_ij` days produces a sawtooth stock
# curve. Its average sits half a train load above the safety stock, while
# daily delivery sits half a day's demand above it. The gap does not depend
# on the safety stock or on the interval length chosen for bookkeeping.

# %%
from entiretrain import DemandProfile, period_stocks, simulate_stock, stock_quantities

for theta in (1, 2, 3, 5, 7):
    d = DemandProfile(q_car=60, n_ij=15, m_ij=15 * theta, q_safety=200, t_days=365,
                      c_inventory_unit=0.5)
    rep = stock_quantities(d)
    sim = simulate_stock(d, horizon_days=4 * theta, steps_per_day=500)
    print(f"every {theta} days: closed form {rep.s_train_per_day:8.1f} t, "
          f"simulated {sim:8.1f} t, extra {rep.delta_s:7.1f} t/day, "
          f"cost {rep.c_inventory_total:>11,.2f}")

# %% [markdown]
# The three-day case written as areas over one period:

# %%
s_train, s_daily = period_stocks(DemandProfile(q_car=60, n_ij=15, m_ij=45))
print(f"S_train = {s_train:.0f} t-day, S_daily = {s_daily:.0f} t-day, "
      f"difference per day = {(s_train - s_daily) / 3:.0f} t")
