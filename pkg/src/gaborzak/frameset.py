"""Zibulski-Zeevi matrices and non-frame points of rationally oversampled Gabor systems.

For ``alpha * beta = p/q < 1`` (coprime) the Zibulski-Zeevi matrix at ``(x, w)``
is the ``p x q`` matrix with entries
``p^{-1/2} Z_{1/beta} g(x - t p/q, w + k/p)``; the frame bounds of
``G(g, alpha, beta)`` are the essential infimum of ``sigma_min^2`` and
supremum of ``sigma_max^2`` over ``[0,1)^2``.  A row of zeros kills the lower
bound, which is how every counterexample here is certified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from ._parallel import parallel_map
from .zak import DEFAULT_TOL, Window, hermite_window, zak_auto
from .zeros import KAPPA_RANGE, KAPPA_STEP, ZeroRecord, find_zeros, hermite_slice

__all__ = [
    "RationalDensity",
    "ZZSample",
    "FrameBounds",
    "Counterexample",
    "ObstructionError",
    "zz_matrix",
    "estimate_frame_bounds",
    "zero_row_obstruction",
    "counterexamples_from_zero",
    "expand_by_fourier_symmetry",
    "enumerate_counterexamples",
    "verify_counterexample",
]

DEDUP_TOL = 1e-9
VERIFY_TOL = 1e-8


class ObstructionError(ArithmeticError):
    """A claimed zero row did not verify."""


@dataclass(frozen=True, order=True)
class RationalDensity:
    """``alpha * beta = p/q`` with ``gcd(p, q) = 1`` and ``p/q < 1``."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("p and q must be positive integers")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p} and q={self.q} are not coprime")
        if self.p >= self.q:
            raise ValueError(f"density p/q = {self.p}/{self.q} must be < 1")

    @property
    def value(self) -> float:
        return self.p / self.q

    @classmethod
    def from_product(cls, product: float, max_q: int = 64, tol: float = 1e-7) -> "RationalDensity":
        """Recognise ``alpha * beta`` as a rational ``p/q`` with ``q <= max_q``.

        The default tolerance admits parameters quoted to eight digits.
        """
        if product >= 1.0 - tol:
            raise ValueError(f"alpha*beta = {product:.12g} >= 1: no frame is possible (density precondition)")
        if product <= 0:
            raise ValueError("alpha*beta must be positive")
        fr = Fraction(product).limit_denominator(max_q)
        if abs(float(fr) - product) > tol:
            raise ValueError(
                f"alpha*beta = {product:.12g} is not a rational with denominator <= {max_q}"
            )
        return cls(fr.numerator, fr.denominator)

    def __str__(self):
        return f"{self.p}/{self.q}"


@dataclass
class ZZSample:
    x: float
    gamma: float
    matrix: np.ndarray
    sigma_min: float
    sigma_max: float


@dataclass
class FrameBounds:
    """Grid estimate of the frame bounds; ``argmin``/``argmax`` are ``(x, w)``."""

    A: float
    B: float
    argmin: tuple[float, float]
    argmax: tuple[float, float]
    density: RationalDensity
    grid_n: int
    grid_A: float
    grid_B: float
    row_norm: Optional[tuple[float, float]] = None


def _zz_entries(window: Window, density: RationalDensity, beta: float, x, gamma, tol: float):
    """ZZ matrices for arrays ``x``, ``gamma`` (same shape); returns ``shape + (p, q)``."""
    p, q = density.p, density.q
    x = np.asarray(x, dtype=float)[..., None, None]
    gamma = np.asarray(gamma, dtype=float)[..., None, None]
    k = np.arange(p)[:, None]
    t = np.arange(q)[None, :]
    X = x - t * (p / q)
    G = gamma + k / p
    X, G = np.broadcast_arrays(X, G)
    z = zak_auto(window, 1.0 / beta, X, G, tol).value
    return np.asarray(z) / math.sqrt(p)


def zz_matrix(window: Window, density: RationalDensity, beta: float, x: float, gamma: float,
              tol: float = DEFAULT_TOL) -> ZZSample:
    """Zibulski-Zeevi matrix at a single point with its extreme singular values."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    m = _zz_entries(window, density, beta, x, gamma, tol)
    sv = np.linalg.svd(m, compute_uv=False)
    return ZZSample(float(x), float(gamma), m, float(sv[-1]), float(sv[0]))


def _singular_values(window, density, beta, x, gamma, tol):
    m = _zz_entries(window, density, beta, x, gamma, tol)
    return np.linalg.svd(m, compute_uv=False)


def _grid_rows(window, density, beta, grid_n, tol):
    xs = np.arange(grid_n) / grid_n

    def row_block(rows):
        X, G = np.meshgrid(xs[rows], xs, indexing="ij")
        sv = _singular_values(window, density, beta, X, G, tol)
        return sv[..., -1], sv[..., 0]

    blocks = np.array_split(np.arange(grid_n), max(1, min(grid_n, 8)))
    parts = parallel_map(row_block, blocks)
    smin = np.concatenate([a for a, _ in parts], axis=0)
    smax = np.concatenate([b for _, b in parts], axis=0)
    return xs, smin, smax


def _polish(fun, starts, maxiter=300):
    best_val, best_pt = np.inf, None
    for x0 in starts:
        res = minimize(fun, np.asarray(x0, dtype=float), method="Nelder-Mead",
                       options={"xatol": 1e-12, "fatol": 1e-24, "maxiter": maxiter,
                                "initial_simplex": np.asarray(x0) + np.array([[0, 0], [2e-3, 0], [0, 2e-3]])})
        if res.fun < best_val:
            best_val, best_pt = float(res.fun), (float(res.x[0]) % 1.0, float(res.x[1]) % 1.0)
    return best_val, best_pt


def estimate_frame_bounds(window: Window, alpha: float, beta: float, grid_n: int = 128,
                          tol: float = DEFAULT_TOL, density: Optional[RationalDensity] = None,
                          refine: bool = False, n_starts: int = 3) -> FrameBounds:
    """Frame bounds of ``G(window, alpha, beta)`` for rational ``alpha * beta``.

    ``A = min sigma_min^2`` and ``B = max sigma_max^2`` over the lattice
    ``(i/grid_n, j/grid_n)``; ``beta`` is used as given and ``alpha`` only
    through the density ``p/q``.  With ``refine`` the best ``n_starts`` lattice
    points are also polished by a local Nelder-Mead search, which gets closer
    to the essential infimum/supremum when the extremum sits off-grid; the bare
    lattice values stay available as ``grid_A``/``grid_B``.  For ``p = 1`` the row-norm formula
    ``sum_t |Z g(x + t/q, w)|^2`` is evaluated as a cross-check.
    """
    if alpha <= 0 or beta <= 0:
        raise ValueError("alpha and beta must be positive")
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    if density is None:
        density = RationalDensity.from_product(alpha * beta)
    elif abs(density.value - alpha * beta) > 1e-7:
        raise ValueError(f"alpha*beta = {alpha * beta:.12g} does not match density {density}")

    xs, smin, smax = _grid_rows(window, density, beta, grid_n, tol)
    lo2, hi2 = smin**2, smax**2
    grid_A, grid_B = float(lo2.min()), float(hi2.max())
    flat_lo = np.argsort(lo2, axis=None, kind="stable")[:n_starts]
    flat_hi = np.argsort(-hi2, axis=None, kind="stable")[:n_starts]
    starts_lo = [(xs[i // grid_n], xs[i % grid_n]) for i in flat_lo]
    starts_hi = [(xs[i // grid_n], xs[i % grid_n]) for i in flat_hi]
    A, argmin = grid_A, starts_lo[0]
    B, argmax = grid_B, starts_hi[0]
    if refine:
        def f_lo(v):
            return float(_singular_values(window, density, beta, v[0], v[1], tol)[-1] ** 2)

        def f_hi(v):
            return -float(_singular_values(window, density, beta, v[0], v[1], tol)[0] ** 2)

        a, pa = _polish(f_lo, starts_lo)
        if a < A:
            A, argmin = a, pa
        b, pb = _polish(f_hi, starts_hi[:1], maxiter=100)
        if -b > B:
            B, argmax = -b, pb

    row_norm = None
    if density.p == 1:
        X, G = np.meshgrid(xs, xs, indexing="ij")
        t = np.arange(density.q) / density.q
        z = zak_auto(window, 1.0 / beta, X[..., None] + t, G[..., None], tol).value
        rn = np.sum(np.abs(z) ** 2, axis=-1)
        row_norm = (float(rn.min()), float(rn.max()))
    return FrameBounds(A, B, argmin, argmax, density, grid_n, grid_A, grid_B, row_norm)


def zero_row_obstruction(window: Window, q: int, lam: float, x0: float, gamma0: float,
                         tol: float = VERIFY_TOL) -> bool:
    """True when ``|Z_lam g(x0 + t/q, gamma0)| < tol`` for ``t = 0..q-1``."""
    if q < 1:
        raise ValueError("q must be >= 1")
    t = np.arange(q)
    z = zak_auto(window, lam, x0 + t / q, np.full(q, float(gamma0))).value
    return bool(np.all(np.abs(z) < tol))


@dataclass(frozen=True)
class Counterexample:
    """A point ``(alpha, beta)`` where ``G(h_n, alpha, beta)`` is not a frame."""

    alpha: float
    beta: float
    density: RationalDensity
    source_zero: ZeroRecord = field(compare=False)
    derivation: str
    n: Optional[int] = None

    @property
    def lam(self) -> float:
        return self.source_zero.lam


# (x0, w0) -> [(alpha multiplier of lam, density, tag)], and the row length q
_RULES = {
    (Fraction(1, 4), Fraction(1, 2)): ([(Fraction(1, 2), "cor-a-i")], 2),
    (Fraction(1, 6), Fraction(1, 2)): ([(Fraction(1, 3), "cor-a-ii"), (Fraction(2, 3), "cor-a-ii")], 3),
    (Fraction(1, 6), Fraction(0)): ([(Fraction(1, 3), "cor-b-i")], 3),
    (Fraction(1, 3), Fraction(0)): ([(Fraction(1, 3), "cor-b-i")], 3),
    (Fraction(1, 4), Fraction(0)): ([(Fraction(1, 4), "cor-b-ii")], 4),
}


def _rule(zero: ZeroRecord):
    if zero.x0 is None or zero.gamma0 is None:
        raise ValueError("zero record carries no slice position")
    key = (Fraction(zero.x0).limit_denominator(1000), Fraction(zero.gamma0 % 1.0).limit_denominator(1000))
    if key not in _RULES:
        raise ValueError(f"no obstruction rule for slice (x0, gamma0) = ({key[0]}, {key[1]})")
    return key, _RULES[key]


def verify_counterexample(c: Counterexample, window: Optional[Window] = None,
                          tol: float = VERIFY_TOL) -> bool:
    """Re-check the zero row behind ``c`` (for a swap, behind its mirror image)."""
    if window is None:
        window = hermite_window(c.n)
    base = expand_by_fourier_symmetry(c) if c.derivation == "fourier-swap" else c
    (x0, g0), (_, q) = _rule(base.source_zero)
    return zero_row_obstruction(window, q, 1.0 / base.beta, float(x0), float(g0), tol)


def counterexamples_from_zero(zero: ZeroRecord, n: int, tol: float = VERIFY_TOL,
                              window: Optional[Window] = None) -> list[Counterexample]:
    """Non-frame points produced by one slice zero.

    ``(1/4, 1/2)``: ``(lam/2, 1/lam)``; ``(1/6, 1/2)``: ``(lam/3, 1/lam)`` and
    ``(2 lam/3, 1/lam)``; ``(1/6, 0)`` or ``(1/3, 0)``: ``(lam/3, 1/lam)``;
    ``(1/4, 0)``: ``(lam/4, 1/lam)``.  Each point is re-verified first.
    """
    if window is None:
        window = hermite_window(n)
    (x0, g0), (items, q) = _rule(zero)
    if not zero_row_obstruction(window, q, zero.lam, float(x0), float(g0), tol):
        raise ObstructionError(
            f"Z_lam h_{n}({x0} + t/{q}, {g0}) is not below {tol:g} at lam={zero.lam!r}"
        )
    out = []
    for mult, tag in items:
        d = RationalDensity(mult.numerator, mult.denominator)
        out.append(Counterexample(float(mult) * zero.lam, 1.0 / zero.lam, d, zero, tag, n))
    return out


def expand_by_fourier_symmetry(c: Counterexample) -> Counterexample:
    """Swap ``(alpha, beta) -> (beta, alpha)``; the frame bounds are unchanged."""
    if c.derivation == "fourier-swap":
        # undoing a swap restores the original tag
        (_, _), (items, _) = _rule(c.source_zero)
        tag = items[0][1]
    else:
        tag = "fourier-swap"
    return replace(c, alpha=c.beta, beta=c.alpha, derivation=tag)


def _slices_for(n: int):
    if n % 2 == 0:
        return [(Fraction(1, 4), Fraction(1, 2)), (Fraction(1, 6), Fraction(1, 2))]
    return [(Fraction(1, 6), Fraction(0)), (Fraction(1, 3), Fraction(0)), (Fraction(1, 4), Fraction(0))]


def enumerate_counterexamples(n: int, expand: bool = True, kappa_range=KAPPA_RANGE,
                              step: float = KAPPA_STEP, verify_tol: float = VERIFY_TOL) -> list[Counterexample]:
    """All certified non-frame points for ``h_n`` from the standard slices.

    Sorted by ``(density, alpha)``; points closer than ``1e-9`` are merged.
    """
    if n in (0, 1):
        raise ValueError(f"no obstruction known for h_{n}")
    if n < 3 or (n % 2 == 0 and n < 4):
        raise ValueError(f"counterexample search needs n >= 3 (n >= 4 if even), got n={n}")
    window = hermite_window(n)
    found: list[Counterexample] = []
    for x0, g0 in _slices_for(n):
        sl = hermite_slice(n, x0, g0)
        for z in find_zeros(sl, kappa_range, step):
            found.extend(counterexamples_from_zero(z, n, verify_tol, window))
    if expand:
        found.extend([expand_by_fourier_symmetry(c) for c in found])
    found.sort(key=lambda c: (c.density.value, c.alpha, c.derivation == "fourier-swap"))
    out: list[Counterexample] = []
    for c in found:
        dup = any(
            o.density == c.density and abs(o.alpha - c.alpha) < DEDUP_TOL and abs(o.beta - c.beta) < DEDUP_TOL
            for o in out[-8:]
        )
        if not dup:
            out.append(c)
    return out
