"""Exact values at integer points: parity sums and limits at the non-positive integers."""
# %%
from tornheim import (convolution_check, corollary_numeric, corollary_values, parity_eval,
                      parity_exact, tornheim_direct)

for abc in [(1, 1, 1), (1, 2, 2), (2, 2, 3), (3, 3, 1)]:
    exact = parity_exact(*abc)
    direct = tornheim_direct(*abc)
    print(f"zeta{abc} = {exact}  ~ {parity_eval(*abc).value.real:.15f}  (direct {direct.value.real:.15f})")

# %% limits depend on the order in which arguments reach the lattice
print()
for path in ("joint_st", "u_then", "s_then_u", "t_then_u"):
    print(f"zeta(0,0;0) along {path:8s}:", corollary_values(0, 0, 0, path))

# odd a+b+c: every path agrees, and the continued function reproduces it
print("\nzeta(-1,0;0):", corollary_values(1, 0, 0, "u_then"),
      "numeric", round(corollary_numeric(1, 0, 0, "u_then").value.real, 10))

# %% an exact convolution identity among Bernoulli-type values
bad = [(a, b, c) for a in range(5) for b in range(5) for c in range(5) if convolution_check(a, b, c) != 0]
print("\nconvolution residual nonzero at", bad or "no triple with a, b, c < 5")
