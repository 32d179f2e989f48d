# %% [markdown]
# # The GHZ chain as an infinite-volume state
#
# Site 1 carries the projectors diag(1, 0) and diag(0, 1) scaled by 1/sqrt(2);
# every later site carries the bare projectors. The finite states built from
# these tensors are GHZ states, and the family satisfies both conditions needed
# for the sequence of finite-volume states to stabilize.

# %%
import numpy as np

import qlmps
from qlmps import LocalObservable

ghz = qlmps.ghz_family()
print(np.round(qlmps.build_statevector(ghz, 3).real, 6))

# %% [markdown]
# ## Conditions
#
# The normalization gate uses the squared first-site traces. The unsquared sum
# is sqrt(2) for this family and is shown next to it.

# %%
s1, s2 = qlmps.normalization_sums(ghz)
print(f"sum |Tr A_i| = {s1:.12f}   sum |Tr A_i|^2 = {s2:.12f}")
consistency = qlmps.check_consistency(ghz)
print(consistency.passed, consistency.residuals, consistency.notes)

# %% [markdown]
# ## Local expectation values
#
# Only the diagonal entries of each factor matter: the state value of
# X_1 (x) ... (x) X_N is the average of the all-zero and all-one products.

# %%
Z = np.diag([1.0, -1.0])
X = np.array([[0.0, 1.0], [1.0, 0.0]])
for label, op in (("Z", Z), ("X", X)):
    for n in range(1, 5):
        obs = LocalObservable.product([op] * n)
        naive = qlmps.evaluate_naive(ghz, obs).value
        transfer = qlmps.evaluate_transfer(ghz, obs).value
        closed = qlmps.ghz_expectation_closed_form([op] * n)
        print(f"{label * n:5s} naive={naive.real:+.3f} transfer={transfer.real:+.3f} closed={closed.real:+.3f}")

# %% [markdown]
# ## Reduced density matrices and entropy
#
# Tracing out the extra site of psi_{N+1} leaves (|0..0><0..0| + |1..1><1..1|) / 2,
# a trace-one matrix with two equal eigenvalues, so the entropy is ln 2 for every N.

# %%
for n in range(1, 7):
    rho = qlmps.reduced_density_matrix(ghz, n)
    print(n, np.round(rho.eigenvalues()[:2], 6), qlmps.von_neumann_entropy(rho), qlmps.von_neumann_entropy(rho, "two"))
