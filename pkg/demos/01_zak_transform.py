"""Zak transforms of Hermite functions: evaluation, dispatch and sanity checks."""

# %%
import math

import numpy as np

from gaborzak.hermite import eval_hermite
from gaborzak.zak import hermite_window, zak_auto, zak_direct, zak_poisson_dual

# %% The Gaussian at the origin is a theta value.
h0 = hermite_window(0)
z = zak_direct(h0, 1.0, 0.0, 0.0)
print(f"Z_1 h0(0,0) = {z.value.real:.15f}  with K={z.truncation_terms}, tail <= {z.tail_bound:.1e}")
print(f"2^(1/4) * sum exp(-pi k^2) = {2**0.25 * sum(math.exp(-math.pi * k * k) for k in range(-6, 7)):.15f}")

# %% Small lambda: the direct series gets long, the dual series stays short.
h8 = hermite_window(8)
for lam in (2.0, 0.5, 0.1, 0.02):
    d = zak_direct(h8, lam, 0.25, 0.5)
    p = zak_poisson_dual(h8, lam, 0.25, 0.5)
    print(f"lam={lam:<5} direct K={d.truncation_terms:<4} dual K={p.truncation_terms:<3} "
          f"|difference|={abs(d.value - p.value):.1e}  auto -> {zak_auto(h8, lam, 0.25, 0.5).method}")

# %% Quasi-periodicity in x and periodicity in gamma.
h5 = hermite_window(5)
x, g, lam = 0.3, 0.17, 1.4
base = zak_auto(h5, lam, x, g).value
print("shift x by 1:", abs(zak_auto(h5, lam, x + 1, g).value - np.exp(2j * np.pi * g) * base))
print("shift gamma by 1:", abs(zak_auto(h5, lam, x, g + 1).value - base))

# %% Unitarity: the L2 norm over the unit square equals the norm of h_n.
t = (np.arange(256) + 0.5) / 256
X, G = np.meshgrid(t, t, indexing="ij")
for n in (0, 3, 8):
    energy = np.mean(np.abs(zak_auto(hermite_window(n), math.sqrt(2), X, G).value) ** 2)
    print(f"n={n}: ||Z h_n||^2 = {energy:.12f}")

# %% Zak values are real on gamma in {0, 1/2}, the basis of the zero search.
print("imag part at gamma=1/2:", zak_auto(h8, 1.7, np.linspace(0, 1, 5), 0.5).value.imag)
print("h_8 at a few points:", eval_hermite(8, np.array([0.0, 0.5, 1.0])))
