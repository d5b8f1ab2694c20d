"""Modular slices kappa -> Z_{s 2^kappa} h_n(x0, gamma0), their symmetry and zeros."""

# %%
import numpy as np

from gaborzak.symmetry import check_modular_symmetry, valid_cases
from gaborzak.zeros import count_zeros, find_zeros, hermite_slice, search_bracket_from_bounds

# %% The (1/6, 1/2) slice of h_8 is even in kappa, so only kappa > 0 is scanned.
sl = hermite_slice(8, "1/6", "1/2")
print("scale s =", sl.s, " symmetry:", sl.symmetry.characteristic)
for z in find_zeros(sl):
    print(f"  kappa={z.kappa:+.8f}  lambda={z.lam:.8f}  |F|={z.residual:.1e}")

# %% Every symmetry family holds to rounding for h_0 .. h_12.
worst = max(check_modular_symmetry(n, c, np.linspace(-3, 3, 21)) for n in range(13) for c in valid_cases(n % 4))
print(f"largest symmetry residual for n <= 12: {worst:.1e}")

# %% Odd characteristic forces a zero at kappa = 0.
sl2 = hermite_slice(2, "1/4", "1/2")
print("h_2 slice:", sl2.symmetry.characteristic, "F(0) =", sl2(0.0))

# %% Zero counts grow roughly with n.
for x0 in ("1/4", "1/6"):
    print(f"x0={x0}, gamma0=1/2:", [count_zeros(n, x0, "1/2") for n in range(0, 21, 2)])
for x0 in ("1/6", "1/4"):
    print(f"x0={x0}, gamma0=0:  ", [count_zeros(n, x0, "0") for n in range(1, 22, 2)])

# %% The largest zero sits between two closed-form bounds.
print("n, lower, largest zero, upper")
for n in range(4, 21, 4):
    lo, hi = search_bracket_from_bounds(n, 0.25)
    top = max(z.lam for z in find_zeros(hermite_slice(n, "1/4", "1/2")))
    print(f"{n:2d}  {lo:.8f}  {top:.8f}  {hi:.8f}")
