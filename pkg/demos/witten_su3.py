"""The Witten zeta function of SU(3), from its value at 0 to its zeros."""
# %%
import math

import numpy as np

from tornheim import (witten_at_zero, witten_deriv_neg_odd, witten_dderiv_neg_even,
                      witten_eval, witten_positive_int)

exact, deriv = witten_at_zero()
print("value at 0:", exact)
print("derivative at 0:", deriv.value.real, " log(2^(4/3) pi) =", math.log(2 ** (4 / 3) * math.pi))

# %% positive integers reduce to products of Riemann zeta values
for a in (2, 3, 4):
    print(f"zeta_SU3({a}) = {witten_positive_int(a).value.real:.15f}")
print("4 pi^6 / 2835 =", 4 * math.pi ** 6 / 2835)

# %% a short scan along the real axis
for x in np.linspace(1.0, 3.0, 5):
    print(f"  s = {x:4.2f}   {witten_eval(complex(x)).value.real: .10f}")

# %% zeros at the negative integers: simple at odd, double at even
for a in (1, 3):
    r = witten_deriv_neg_odd(a)
    print(f"derivative at -{a}: {r.value_or_deriv.value.real: .6e}  sign ok {r.sign_ok}")
for a in (2, 4):
    r = witten_dderiv_neg_even(a)
    print(f"second derivative at -{a}: {r.value_or_deriv.value.real: .6e}  sign ok {r.sign_ok}")
