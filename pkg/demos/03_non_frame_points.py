"""From Zak zeros to points (alpha, beta) where G(h_n, alpha, beta) is not a frame."""

# %%
import math

from gaborzak.frameset import RationalDensity, enumerate_counterexamples, estimate_frame_bounds, zz_matrix
from gaborzak.zak import hermite_window

# %% Non-frame points of h_8 on alpha*beta = 1/3, with their mirror images.
h8 = hermite_window(8)
points = enumerate_counterexamples(8)
for c in points:
    if c.density == RationalDensity(1, 3):
        print(f"alpha={c.alpha:.8f}  beta={c.beta:.8f}  {c.derivation:<13} from lambda={c.lam:.6f}")

# %% A row of zeros in the Zibulski-Zeevi matrix kills the lower frame bound.
c = points[0]
m = zz_matrix(h8, c.density, c.beta, 1 / 6, 0.5)
print("ZZ matrix at (1/6, 1/2):", m.matrix.round(12), "sigma_min =", m.sigma_min)
fb = estimate_frame_bounds(h8, c.alpha, c.beta, 128, density=c.density)
print(f"grid estimate: A={fb.A:.2e}, B={fb.B:.4f}")

# %% The Gaussian stays a frame at the same densities.
h0 = hermite_window(0)
for p, q in [(1, 2), (1, 3), (2, 3), (1, 4)]:
    a = math.sqrt(p / q)
    print(f"h0 at alpha=beta=sqrt({p}/{q}): A = {estimate_frame_bounds(h0, a, a, 128).A:.6f}")

# %% Odd orders work through the gamma0 = 0 slices.
for c in enumerate_counterexamples(5, expand=False):
    print(f"h5: ({c.alpha:.6f}, {c.beta:.6f}) on alpha*beta={c.density}  [{c.derivation}]")
