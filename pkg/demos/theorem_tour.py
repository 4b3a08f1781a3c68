"""Walk through the three-term relation for the Tornheim double series.

Run with ``python demos/theorem_tour.py``.
"""
# %% direct sums versus the contour representation
from tornheim import A_contour, A_shifted, Z_def, tornheim_continued, tornheim_direct, z_decompose

s, t, u = 2.5 + 0.5j, 3.1 - 0.2j, 2.2
z = Z_def(s, t, u)
rhs = A_shifted(s, t, u) + A_shifted(t, s, u)
print("Z from direct sums      ", z.value, "+-", f"{z.abs_err:.1e}")
print("A(s,t;u) + A(t,s;u)     ", rhs.value, "+-", f"{rhs.abs_err:.1e}")
print("difference              ", f"{abs(z.value - rhs.value):.2e}")

# %% the two ways of computing A agree
a1, a2 = A_shifted(s, t, u), A_contour(s, t, u)
print("\nshifted line vs indented contour:", f"{abs(a1.value - a2.value):.2e}")

# %% outside the box of convergence the relation still holds term by term
d = z_decompose(0.5 + 0.2j, 3.5, 2.5)
print("\nat (0.5+0.2i, 3.5, 2.5): Z =", d.z_value.value, " residual", f"{d.residual:.1e}")

# %% continuation through the cosine system
p = (-0.7 + 0.3j, 1.4, 2.6)
w = tornheim_continued(*p)
print("\ncontinued value at", p, "->", w.value)
# inside the convergent region it reproduces the plain double sum
q = (2.4, 2.9, 2.3)
print("continued vs direct at", q, f"{abs(tornheim_continued(*q).value - tornheim_direct(*q).value):.1e}")
