"""Zak transform ``Z_lam f(x, w) = sqrt(lam) sum_k f(lam (x + k)) e^{-2 pi i k w}``.

Two evaluation routes are provided.  The direct route truncates the series
with a rigorous tail bound taken from the window's decay envelope.  The
Poisson-dual route uses ``Z_lam f(x, w) = e^{2 pi i x w} (-i)^l Z_{1/lam} f(w, -x)``
for Fourier eigenfunctions (``f^ = (-i)^l f``) and is the stable choice for
``lam < 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Callable, Optional

import numpy as np
from scipy.special import erfc

from .hermite import eval_hermite, hermite_sup_bound, turning_point

__all__ = [
    "Window",
    "GaussianEnvelope",
    "ZakValue",
    "TruncationError",
    "hermite_window",
    "truncation_terms",
    "zak_direct",
    "zak_poisson_dual",
    "zak_auto",
    "zak_modular",
    "MAX_TERMS",
    "DEFAULT_TOL",
]

MAX_TERMS = 4096
ENLARGED_MAX_TERMS = 1 << 20
DEFAULT_TOL = 1e-12
# bound on the number of (point, term) pairs materialised at once
_CHUNK = 1 << 22


class TruncationError(ArithmeticError):
    """The direct series would need more terms than allowed."""


@dataclass(frozen=True)
class GaussianEnvelope:
    """Tail envelope ``sup_{|t| >= R} |f(t)| <= min(sup, C exp(-pi (R - r)^2))``.

    For ``R <= r`` the envelope is the flat bound ``sup``.
    """

    C: float
    r: float
    sup: float

    def __call__(self, R):
        R = np.asarray(R, dtype=float)
        d = np.maximum(R - self.r, 0.0)
        return np.minimum(self.sup, self.C * np.exp(-math.pi * d * d))

    def tail_integral(self, R):
        """``int_R^inf envelope(t) dt``."""
        R = np.asarray(R, dtype=float)
        d = R - self.r
        gauss = 0.5 * self.C * erfc(math.sqrt(math.pi) * np.maximum(d, 0.0))
        return np.where(d >= 0, gauss, gauss + self.sup * (-d))


@dataclass(frozen=True)
class Window:
    """Even or odd, real-valued, rapidly decaying window function.

    ``evaluate`` must be vectorised over numpy arrays and reentrant.
    ``envelope(R)`` bounds ``sup_{|t| >= R} |f(t)|`` and must be nonincreasing;
    ``tail_integral(R)`` bounds ``int_R^inf envelope``.  ``eigen_index`` is set
    when ``f^ = (-i)^l f``.
    """

    evaluate: Callable[[np.ndarray], np.ndarray]
    parity: int
    envelope: Callable[[np.ndarray], np.ndarray]
    tail_integral: Callable[[np.ndarray], np.ndarray]
    eigen_index: Optional[int] = None
    name: str = "f"
    order: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 (even) or 1 (odd)")
        if self.eigen_index is not None and self.eigen_index not in (0, 1, 2, 3):
            raise ValueError("eigen_index must be one of 0, 1, 2, 3")

    def __call__(self, t):
        return self.evaluate(t)

    def tail_sum_bound(self, a, spacing):
        """Bound on ``sum_{j >= 0} sup_{|t| >= a + j*spacing} |f(t)|``."""
        return self.envelope(a) + self.tail_integral(a) / spacing


@lru_cache(maxsize=None)
def _hermite_envelope(n: int) -> GaussianEnvelope:
    # past the turning point h_n(t) exp(pi (t-r)^2) decreases, so the sample
    # maximum sits at t = r; the margin absorbs sampling
    r = turning_point(n) + 1.0
    t = r + np.linspace(0.0, 12.0, 24001)
    ratio = np.abs(eval_hermite(n, t)) * np.exp(math.pi * (t - r) ** 2)
    C = 1.05 * float(np.max(ratio))
    return GaussianEnvelope(C=C, r=r, sup=hermite_sup_bound())


@lru_cache(maxsize=None)
def hermite_window(n: int) -> Window:
    """The Hermite function ``h_n`` as a :class:`Window`."""
    n = int(n)
    if n < 0:
        raise ValueError("Hermite order must be nonnegative")
    env = _hermite_envelope(n)
    return Window(
        evaluate=partial(eval_hermite, n),
        parity=n % 2,
        envelope=env,
        tail_integral=env.tail_integral,
        eigen_index=n % 4,
        name=f"h{n}",
        order=n,
    )


@dataclass
class ZakValue:
    """Zak transform value(s) with the truncation record behind them."""

    value: complex | np.ndarray
    method: str
    truncation_terms: int
    tail_bound: float

    def __complex__(self):
        return complex(self.value)

    def __abs__(self):
        return np.abs(self.value)


def _tail_bound(window: Window, lam, K):
    lam = np.asarray(lam, dtype=float)
    # after reducing x into [-1/2, 1/2) every omitted |k| > K has |lam (x + k)| >= lam (K + 1/2)
    a = lam * (np.asarray(K) + 0.5)
    return 2.0 * np.sqrt(lam) * window.tail_sum_bound(a, lam)


def truncation_terms(window: Window, lam, tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS):
    """Smallest ``K`` with rigorous tail bound ``<= tol`` for each ``lam``.

    Returns ``(K, bound)`` arrays shaped like ``lam``.
    """
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    if np.any(lam <= 0):
        raise ValueError("modular parameter must be positive")
    if tol <= 0:
        raise ValueError("tol must be positive")
    # the bound is nonincreasing in K: double until it holds, then bisect
    env_r = getattr(window.envelope, "r", 0.0)
    lo = np.maximum(np.floor(env_r / lam - 0.5), 0).astype(np.int64) - 1
    hi = lo + 1
    ok = _tail_bound(window, lam, hi) <= tol
    width = np.ones(lam.shape, dtype=np.int64)
    while not np.all(ok):
        bad = ~ok
        lo[bad] = hi[bad]
        hi[bad] = hi[bad] + width[bad]
        width[bad] *= 2
        if np.any(hi[bad] > max_terms):
            hi[bad] = np.minimum(hi[bad], max_terms)
            last = _tail_bound(window, lam[bad], hi[bad]) <= tol
            if not np.all(last):
                worst = float(np.min(lam[bad][~last]))
                raise TruncationError(
                    f"direct Zak series at lambda={worst:.6g} needs more than {max_terms} terms"
                )
        ok[bad] = _tail_bound(window, lam[bad], hi[bad]) <= tol
    while np.any(hi - lo > 1):
        mid = (lo + hi) // 2
        act = hi - lo > 1
        good = _tail_bound(window, lam, mid) <= tol
        hi = np.where(act & good, mid, hi)
        lo = np.where(act & ~good, mid, lo)
    K = hi
    bound = _tail_bound(window, lam, K)
    return K, bound


def _reduce(x, gamma):
    """Split ``x = xr + m`` with ``xr`` in ``[-1/2, 1/2)``; return ``xr`` and the phase."""
    m = np.floor(x + 0.5)
    xr = x - m
    phase = np.exp(2j * np.pi * np.mod(m * gamma, 1.0))
    return xr, phase


def _partial_sum(window: Window, lam, x, gamma, K: int):
    """``sqrt(lam) sum_{|k| <= K} f(lam (x + k)) e^{-2 pi i k gamma}`` on 1-D arrays."""
    k = np.arange(-K, K + 1, dtype=float)
    out = np.empty(x.shape, dtype=complex)
    step = max(1, _CHUNK // k.size)
    for s in range(0, x.size, step):
        sl = slice(s, s + step)
        lm = lam[sl, None]
        xs = x[sl, None]
        g = gamma[sl, None]
        vals = window(lm * (xs + k))
        ph = np.exp(-2j * np.pi * np.mod(k * g, 1.0))
        out[sl] = np.sqrt(lam[sl]) * np.sum(vals * ph, axis=1)
    return out


@lru_cache(maxsize=4096)
def _terms_scalar(window: Window, lam: float, tol: float, max_terms: int):
    K, bound = truncation_terms(window, lam, tol, max_terms)
    return int(K[0]), float(bound[0])


def _direct(window, lam, x, gamma, tol, max_terms):
    """Direct evaluation on broadcast 1-D arrays ``lam, x, gamma``."""
    if lam.size and lam[0] == lam.min() == lam.max():
        k0, b0 = _terms_scalar(window, float(lam[0]), float(tol), int(max_terms))
        K = np.full(lam.shape, k0, dtype=np.int64)
        bound = np.full(lam.shape, b0)
    else:
        K, bound = truncation_terms(window, lam, tol, max_terms)
    xr, phase = _reduce(x, gamma)
    out = np.empty(x.shape, dtype=complex)
    for kk in np.unique(K):
        sel = K == kk
        out[sel] = _partial_sum(window, lam[sel], xr[sel], gamma[sel], int(kk))
    return out * phase, K, bound


def _broadcast(lam, x, gamma):
    lam, x, gamma = np.broadcast_arrays(
        np.asarray(lam, dtype=float), np.asarray(x, dtype=float), np.asarray(gamma, dtype=float)
    )
    shape = x.shape
    return lam.ravel(), x.ravel(), gamma.ravel(), shape


def _pack(values, shape):
    values = values.reshape(shape)
    if values.ndim == 0:
        return complex(values)
    return values


def _check_lam(lam):
    if not np.all(np.asarray(lam) > 0):
        raise ValueError(f"modular parameter lambda must be positive, got {lam!r}")


def zak_direct(window: Window, lam: float, x, gamma, tol: float = DEFAULT_TOL,
               max_terms: int = MAX_TERMS) -> ZakValue:
    """Truncated Zak series with tail bound ``<= tol``.

    ``x`` and ``gamma`` may be arrays (broadcast together); ``lam`` is a scalar.
    Raises :class:`TruncationError` when more than ``max_terms`` terms per side
    would be needed.
    """
    _check_lam(lam)
    if tol <= 0:
        raise ValueError("tol must be positive")
    lam_a, x_a, g_a, shape = _broadcast(float(lam), x, gamma)
    vals, K, bound = _direct(window, lam_a, x_a, g_a, tol, max_terms)
    return ZakValue(_pack(vals, shape), "direct", int(K.max()), float(bound.max()))


def _dual_values(window, lam, x, gamma, tol, max_terms):
    ell = window.eigen_index
    inner, K, bound = _direct(window, 1.0 / lam, gamma, -x, tol, max_terms)
    phase = np.exp(2j * np.pi * np.mod(x * gamma, 1.0)) * (-1j) ** ell
    return phase * inner, K, bound


def zak_poisson_dual(window: Window, lam: float, x, gamma, tol: float = DEFAULT_TOL,
                     max_terms: int = MAX_TERMS) -> ZakValue:
    """Zak transform through the Poisson summation identity.

    Needs ``window.eigen_index``; the series is summed at modular parameter
    ``1/lam``.
    """
    if window.eigen_index is None:
        raise ValueError("Poisson-dual evaluation needs a Fourier eigen-window (eigen_index set)")
    _check_lam(lam)
    if tol <= 0:
        raise ValueError("tol must be positive")
    lam_a, x_a, g_a, shape = _broadcast(float(lam), x, gamma)
    vals, K, bound = _dual_values(window, lam_a, x_a, g_a, tol, max_terms)
    return ZakValue(_pack(vals, shape), "poisson-dual", int(K.max()), float(bound.max()))


def zak_auto(window: Window, lam: float, x, gamma, tol: float = DEFAULT_TOL) -> ZakValue:
    """Direct series for ``lam >= 1``, Poisson dual below (when available)."""
    _check_lam(lam)
    if lam >= 1.0:
        return zak_direct(window, lam, x, gamma, tol)
    if window.eigen_index is not None:
        return zak_poisson_dual(window, lam, x, gamma, tol)
    return zak_direct(window, lam, x, gamma, tol, max_terms=ENLARGED_MAX_TERMS)


def zak_modular(window: Window, lam, x, gamma, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Auto-dispatched Zak values for arrays of ``lam`` (broadcast with ``x``, ``gamma``).

    Each element is routed as in :func:`zak_auto`; returns a complex array.
    """
    _check_lam(lam)
    lam_a, x_a, g_a, shape = _broadcast(lam, x, gamma)
    out = np.empty(lam_a.shape, dtype=complex)
    big = lam_a >= 1.0
    if np.any(big):
        out[big] = _direct(window, lam_a[big], x_a[big], g_a[big], tol, MAX_TERMS)[0]
    small = ~big
    if np.any(small):
        if window.eigen_index is not None:
            out[small] = _dual_values(window, lam_a[small], x_a[small], g_a[small], tol, MAX_TERMS)[0]
        else:
            out[small] = _direct(window, lam_a[small], x_a[small], g_a[small], tol,
                                 ENLARGED_MAX_TERMS)[0]
    return out.reshape(shape)
