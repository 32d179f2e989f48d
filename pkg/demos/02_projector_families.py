# %% [markdown]
# # Families built from orthogonal projectors
#
# Any weights c with sum |c_i|^2 = 1 give a family whose first site is
# c_i |i><i| and whose later sites are |i><i|. Orthogonality of the projectors
# makes the consistency identity exact.

# %%
import numpy as np

import qlmps
from qlmps import LocalObservable, ProjectorFamilySpec

rng = np.random.default_rng(0)
spec = ProjectorFamilySpec.random(rng, m=4, d=3)
family = qlmps.projector_family(spec)
print("weights |c_i|^2:", np.round(np.abs(spec.first_site_coefficients) ** 2, 4))
print(qlmps.check_normalization(family).passed, qlmps.check_consistency(family).passed)

# %% [markdown]
# ## Two routes, one value
#
# The statevector route costs d^(N+1); the transfer route multiplies N
# matrices of side m^2. They agree on every product observable.

# %%
for n in range(1, 5):
    obs = LocalObservable.product([rng.standard_normal((3, 3)) for _ in range(n)])
    a = qlmps.evaluate_naive(family, obs).value
    b = qlmps.evaluate_transfer(family, obs).value
    print(n, a, abs(a - b))

# %% [markdown]
# ## Stabilization, and what happens without the hypotheses
#
# Padding an observable with identities leaves its value unchanged for a
# family satisfying both conditions. The collapsing family keeps the GHZ first
# site but maps every later index to diag(1, 0); it violates the consistency
# identity, and the values double with every added site.

# %%
obs = LocalObservable.product([np.diag([1.0, -1.0, 0.5])])
print(qlmps.check_projectivity(family, obs, 3).values)

broken = qlmps.collapsing_family()
print(qlmps.check_consistency(broken).residuals)
print([v.real for v in qlmps.check_projectivity(broken, LocalObservable.product([np.diag([1.0, -1.0])]), 3).values])
