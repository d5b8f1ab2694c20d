"""Independent high-precision references (mpmath), sharing no code with the package.

``python tests/oracles.py`` regenerates ``tests/data/oracle_values.json``.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import mpmath as mp

mp.mp.dps = 40

DATA = Path(__file__).parent / "data" / "oracle_values.json"


def hermite_function(n: int, x) -> mp.mpf:
    """h_n(x) = c H_n(sqrt(2 pi) x) e^{-pi x^2} with unit L2 norm, via mpmath.hermite."""
    x = mp.mpf(x)
    norm = mp.power(2, mp.mpf(1) / 4) / mp.sqrt(mp.power(2, n) * mp.factorial(n))
    return norm * mp.hermite(n, mp.sqrt(2 * mp.pi) * x) * mp.exp(-mp.pi * x * x)


def zak(n: int, lam, x, gamma, reach: float = 12.0) -> mp.mpc:
    """Brute-force sqrt(lam) sum_k h_n(lam (x + k)) e^{-2 pi i k gamma} over |lam (x+k)| <= reach."""
    lam, x, gamma = mp.mpf(lam), mp.mpf(x), mp.mpf(gamma)
    k0 = int(mp.floor(-reach / lam - x)) - 1
    k1 = int(mp.ceil(reach / lam - x)) + 1
    s = mp.mpc(0)
    for k in range(k0, k1 + 1):
        s += hermite_function(n, lam * (x + k)) * mp.expj(-2 * mp.pi * k * gamma)
    return mp.sqrt(lam) * s


HERMITE_POINTS = [(n, x) for n in (0, 1, 2, 5, 10, 20, 30) for x in (0.0, 0.3, -0.7, 1.5, 2.5)]
ZAK_POINTS = [
    (0, 1.0, 0.0, 0.0),
    (0, 0.5, 0.2, 0.7),
    (2, 1.0, 0.0, 0.0),
    (3, 1.0, 0.5, 0.5),
    (3, 2.0, 0.3, 0.1),
    (8, 0.05, 0.25, 0.5),
    (8, 0.1, 0.25, 0.5),
    (8, math.sqrt(3.0), 1 / 6, 0.5),
    (8, 3.7, -0.4, 0.9),
    (11, 0.3, 0.45, 0.0),
    (12, 1.3, 0.1, 0.25),
]
# Gaussian Zibulski-Zeevi row norms at integer oversampling: sum_t |Z_{1/beta} h0(x - t/q, w)|^2
GAUSS_ROWNORM_POINTS = [(math.sqrt(0.5), 2, 0.75, 0.5), (math.sqrt(1 / 3), 3, 0.5, 0.5),
                        (0.5, 4, 0.625, 0.5), (math.sqrt(0.5), 2, 0.1, 0.3)]


def gauss_row_norm(beta, q, x, gamma):
    lam = 1 / mp.mpf(beta)
    return sum(abs(zak(0, lam, mp.mpf(x) - mp.mpf(t) / q, gamma)) ** 2 for t in range(q))


def generate() -> dict:
    out = {
        "hermite": [[n, x, float(hermite_function(n, x))] for n, x in HERMITE_POINTS],
        "zak": [[n, lam, x, g, float(mp.re(v)), float(mp.im(v))]
                for n, lam, x, g in ZAK_POINTS for v in [zak(n, lam, x, g)]],
        "gauss_row_norm": [[b, q, x, g, float(gauss_row_norm(b, q, x, g))]
                           for b, q, x, g in GAUSS_ROWNORM_POINTS],
        "hermite_roots_n4": [float(mp.sqrt((3 + mp.sqrt(6)) / 2)), float(mp.sqrt((3 - mp.sqrt(6)) / 2))],
    }
    # Largest root of H_n for a few n, by mpmath's polynomial root finder
    roots = {}
    for n in (5, 10, 20):
        coeffs = mp.taylor(lambda t: mp.hermite(n, t), 0, n)[::-1]
        rs = sorted(float(mp.re(r)) for r in mp.polyroots(coeffs, maxsteps=200, extraprec=200))
        roots[str(n)] = rs[::-1]
    out["hermite_roots"] = roots
    return out


if __name__ == "__main__":
    DATA.parent.mkdir(exist_ok=True)
    DATA.write_text(json.dumps(generate(), indent=1) + "\n")
    print(f"wrote {DATA}")
