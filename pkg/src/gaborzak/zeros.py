"""Zeros of the Zak transform as a function of the modular parameter.

A modular slice is ``F(kappa) = Z_{s 2^kappa} f(x0, w0)`` at fixed ``(x0, w0)``
with ``w0 in {0, 1/2}``; for real even/odd windows it is real-valued.  Zeros
are located by sign changes on a ``kappa`` grid and refined by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .hermite import SQRT_2PI, hermite_roots, root_lower_bound_x1, turning_point
from .symmetry import SymmetryCase, find_symmetry_case
from .zak import DEFAULT_TOL, Window, hermite_window, zak_modular

__all__ = [
    "ModularSlice",
    "ZeroRecord",
    "SignChangeLostError",
    "scan_sign_changes",
    "refine_zero",
    "find_zeros",
    "search_bracket_from_bounds",
    "count_zeros",
    "natural_scale",
    "hermite_slice",
    "KAPPA_RANGE",
    "KAPPA_STEP",
]

KAPPA_RANGE = (-6.0, 6.0)
KAPPA_STEP = 1e-3
KAPPA_TOL = 1e-12
F_TOL = 1e-9

_NATURAL_SCALE = {
    (Fraction(1, 4), Fraction(1, 2)): math.sqrt(2.0),
    (Fraction(1, 6), Fraction(1, 2)): math.sqrt(3.0),
    (Fraction(1, 6), Fraction(0)): math.sqrt(3.0),
    (Fraction(1, 3), Fraction(0)): math.sqrt(3.0),
    (Fraction(1, 4), Fraction(0)): 2.0,
}


class SignChangeLostError(ArithmeticError):
    """A bracket stopped enclosing a sign change during refinement."""


def natural_scale(x0, gamma0) -> float:
    """Default ``s`` for the slices that produce counterexamples (else 1)."""
    key = (Fraction(x0).limit_denominator(1000), Fraction(gamma0).limit_denominator(1000))
    return _NATURAL_SCALE.get(key, 1.0)


@dataclass
class ModularSlice:
    """``kappa -> Z_{s 2^kappa} window(x0, gamma0)`` with ``gamma0 in {0, 1/2}``."""

    window: Window
    x0: float
    gamma0: float
    s: float = 1.0
    tol: float = DEFAULT_TOL
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.x0 = float(self.x0)
        self.gamma0 = float(self.gamma0)
        if not self.s > 0:
            raise ValueError("scale s must be positive")
        g = self.gamma0 % 1.0
        if not (g == 0.0 or g == 0.5):
            raise ValueError("gamma0 must be 0 or 1/2 (mod 1) for a real-valued slice")
        if self.trivially_zero:
            raise ValueError(
                f"slice ({self.x0}, {self.gamma0}) of a "
                f"{'odd' if self.window.parity else 'even'} window vanishes identically"
            )

    @property
    def trivially_zero(self) -> bool:
        half_x = abs(2 * self.x0 - round(2 * self.x0)) < 1e-14
        if self.window.parity == 1:
            return half_x
        odd_half_x = half_x and round(2 * self.x0) % 2 == 1
        return odd_half_x and self.gamma0 % 1.0 == 0.5

    @property
    def symmetry(self) -> Optional[SymmetryCase]:
        if "symmetry" not in self._cache:
            self._cache["symmetry"] = find_symmetry_case(self.window, self.x0, self.gamma0, self.s)
        return self._cache["symmetry"]

    def lam(self, kappa):
        return self.s * np.exp2(kappa)

    def __call__(self, kappa):
        """Real slice values at ``kappa`` (scalar or array)."""
        k = np.asarray(kappa, dtype=float)
        z = zak_modular(self.window, self.lam(k), self.x0, self.gamma0, self.tol)
        out = z.real
        if out.ndim == 0:
            return float(out)
        return out

    def grid(self, lo: float, hi: float, step: float):
        """``(kappa, F)`` on the grid ``lo + i*step``; cached per ``(lo, hi, step)``."""
        key = ("grid", lo, hi, step)
        if key not in self._cache:
            n = int(math.floor((hi - lo) / step + 1e-9))
            kap = lo + step * np.arange(n + 1)
            self._cache[key] = (kap, self(kap))
        return self._cache[key]


def hermite_slice(n: int, x0, gamma0, s: Optional[float] = None, tol: float = DEFAULT_TOL) -> ModularSlice:
    """Modular slice of ``h_n``; ``s`` defaults to :func:`natural_scale`."""
    if s is None:
        s = natural_scale(x0, gamma0)
    return ModularSlice(hermite_window(n), float(Fraction(x0)), float(Fraction(gamma0)), s, tol)


@dataclass(frozen=True)
class ZeroRecord:
    """Refined zero of a modular slice."""

    kappa: float
    lam: float
    residual: float
    bracket: tuple[float, float]
    x0: Optional[float] = None
    gamma0: Optional[float] = None
    s: Optional[float] = None


def _sign_brackets(kap: np.ndarray, F: np.ndarray) -> list[tuple[float, float]]:
    sgn = np.sign(F)
    nz = np.nonzero(sgn)[0]
    # exact zeros on the grid are skipped so that a zero sitting on a node
    # still yields one bracket across it
    change = sgn[nz[:-1]] * sgn[nz[1:]] < 0
    return [(float(kap[a]), float(kap[b])) for a, b in zip(nz[:-1][change], nz[1:][change])]


def scan_sign_changes(sl: ModularSlice, kappa_lo: float, kappa_hi: float, step: float) -> list[tuple[float, float]]:
    """Grid pairs ``(k_i, k_j)`` on which ``F`` strictly changes sign, ascending."""
    if not step > 0:
        raise ValueError("step must be positive")
    if not kappa_lo < kappa_hi:
        raise ValueError("need kappa_lo < kappa_hi")
    kap, F = sl.grid(kappa_lo, kappa_hi, step)
    return _sign_brackets(kap, F)


def refine_zero(sl: ModularSlice, bracket, kappa_tol: float = KAPPA_TOL, f_tol: float = F_TOL,
                max_iter: int = 200) -> ZeroRecord:
    """Bisect a sign-change bracket down to width ``kappa_tol``."""
    a, b = map(float, bracket)
    fa, fb = sl(a), sl(b)
    if not fa * fb < 0:
        raise SignChangeLostError(f"no sign change on [{a}, {b}]: F = {fa:.3e}, {fb:.3e}")
    for _ in range(max_iter):
        if b - a < kappa_tol:
            break
        m = 0.5 * (a + b)
        fm = sl(m)
        if fm == 0.0:
            a = b = m
            fa = fb = 0.0
            break
        if fa * fm < 0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    else:
        raise SignChangeLostError(f"bisection did not reach width {kappa_tol} on [{a}, {b}]")
    k = 0.5 * (a + b)
    res = abs(sl(k))
    if res >= f_tol:
        raise SignChangeLostError(
            f"zero at kappa={k:.12g} has residual {res:.3e} >= {f_tol:.1e}; "
            "the slice may be discontinuous or mis-evaluated"
        )
    return ZeroRecord(k, float(sl.lam(k)), res, (a, b), sl.x0, sl.gamma0, sl.s)


def find_zeros(sl: ModularSlice, kappa_range=KAPPA_RANGE, step: float = KAPPA_STEP,
               kappa_tol: float = KAPPA_TOL, f_tol: float = F_TOL,
               use_symmetry: bool = True) -> list[ZeroRecord]:
    """All sign-change zeros of the slice in ``kappa_range``, ascending in ``kappa``.

    When the slice has a modular symmetry and the range is symmetric about 0,
    only ``kappa > 0`` is scanned; negative zeros are mirrored and, for odd
    characteristic, the forced zero at ``kappa = 0`` is added.
    """
    lo, hi = map(float, kappa_range)
    case = sl.symmetry if use_symmetry else None
    if case is not None and abs(lo + hi) < 1e-15 and hi > 0:
        odd = case.predicted_sign == -1
        # an odd slice has F(0) = 0 up to rounding; start one step out
        start = step if odd else 0.0
        positive = [refine_zero(sl, br, kappa_tol, f_tol) for br in scan_sign_changes(sl, start, hi, step)]
        zeros = []
        for z in reversed(positive):
            a, b = z.bracket
            zeros.append(ZeroRecord(-z.kappa, float(sl.lam(-z.kappa)), z.residual, (-b, -a),
                                    sl.x0, sl.gamma0, sl.s))
        if odd:
            zeros.append(refine_zero(sl, (-step, step), kappa_tol, f_tol))
        zeros.extend(positive)
        return zeros
    return [refine_zero(sl, br, kappa_tol, f_tol) for br in scan_sign_changes(sl, lo, hi, step)]


def search_bracket_from_bounds(n: int, x0) -> tuple[float, float]:
    """Interval in ``lam`` that contains the largest zero of ``lam -> Z_lam h_n(x0, .)``.

    From ``x_1 < sqrt(2 pi) x0 lam < sqrt(2n+1)`` and the lower bound on the
    largest Hermite root ``x_1``.
    """
    x0 = float(Fraction(x0)) if isinstance(x0, str) else float(x0)
    if n < 3:
        raise ValueError("bounds on the largest zero need n >= 3")
    if not 0 < x0 <= 0.25:
        raise ValueError(f"x0 must lie in (0, 1/4], got {x0}")
    c = x0 * SQRT_2PI
    return root_lower_bound_x1(n) / c, math.sqrt(2 * n + 1) / c


def witness_lambdas(n: int, x0: float) -> tuple[float, float]:
    """``(lam0, lam1)`` with ``F(lam0) < 0 < F(lam1)`` by the existence argument.

    ``lam1 x0`` lies past the turning point and ``lam0 x0`` sits in
    ``[(n-2)/(n-1) x~_1, x~_1)`` where ``x~_1`` is the largest zero of ``h_n``.
    """
    xt1 = hermite_roots(n).x1 / SQRT_2PI
    lam1 = 1.01 * turning_point(n) / x0
    lam0 = 0.5 * ((n - 2) / (n - 1) + 1.0) * xt1 / x0
    return lam0, lam1


def count_zeros(n: int, x0, gamma0, kappa_range=KAPPA_RANGE, step: float = KAPPA_STEP,
                s: Optional[float] = None) -> int:
    """Number of refined zeros of the ``h_n`` slice in the ``kappa`` window."""
    sl = hermite_slice(n, x0, gamma0, s)
    return len(find_zeros(sl, kappa_range, step))
