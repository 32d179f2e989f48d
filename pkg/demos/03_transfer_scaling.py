# %% [markdown]
# # Exponential versus linear cost
#
# The statevector route stores d^(N+1) amplitudes; the transfer route keeps a
# single m^2 x m^2 matrix. Time both on the GHZ chain with Z on site 1.

# %%
import time

import numpy as np

import qlmps
from qlmps import LocalObservable, ResourceError

ghz = qlmps.ghz_family()
Z = np.diag([1.0, -1.0])


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out.value, time.perf_counter() - t0


for n in (4, 8, 12, 16, 18, 19, 50, 100, 1000):
    obs = LocalObservable.product([Z] + [np.eye(2)] * (n - 1))
    value, t_transfer = timed(qlmps.evaluate_transfer, ghz, obs)
    try:
        _, t_naive = timed(qlmps.evaluate_naive, ghz, obs)
        naive = f"{t_naive * 1e3:9.2f} ms"
    except ResourceError:
        naive = "   over cap"
    print(f"N={n:5d} value={value.real:+.1e} transfer {t_transfer * 1e3:7.2f} ms   naive {naive}")
