"""The Euler double zeta, the h-function and its functional equation."""
# %%
from tornheim import euler_double_zeta, funeq_sides, h_eval, riemann_zeta

print("zeta(2,1) =", euler_double_zeta(2, 1).value.real, " zeta(3) =", riemann_zeta(3).value.real)

# %% h has simple poles at t = 1 and t = 2
s = 2.5 + 0.4j
for eps in (1e-2, 1e-3, 1e-4):
    print(f"(1-t) h at t = 1-{eps:g}:", (eps * h_eval(s, 1 - eps).value), " -zeta(s) =", -riemann_zeta(s).value)

# %% both sides of the functional equation at a generic point
lhs, rhs = funeq_sides(0.3 + 0.5j, 1.7 - 0.2j)
print("\nfunctional equation sides:", lhs.value, rhs.value)
