"""Modular symmetries of the Zak transform of Fourier eigen-windows.

For ``g`` with ``g^ = (-i)^l g`` the map ``kappa -> Z_{s 2^kappa} g(x0, w0)``
is even or odd in ``kappa`` for the following families:

* ``w0 = 1/2``, ``x0 = (1/2 + p)/s^2``, ``s^2 in {2, 3}``, ``l in {0, 2}``
  (``s^2 = 2`` also for ``l in {1, 3}``); sign ``(-1)^floor(l/2)``.
* ``w0 = 0``, ``x0 = p/s^2``, ``s^2 in {2, 3, 4}``, ``l in {1, 3}``;
  sign ``(-1)^((l-1)/2)``.

An odd characteristic forces ``Z_s g(x0, w0) = 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .zak import DEFAULT_TOL, Window, hermite_window, zak_auto, zak_modular

__all__ = [
    "SymmetryCase",
    "predicted_sign",
    "valid_cases",
    "check_modular_symmetry",
    "check_zak_poisson_lemma",
    "check_pairing_identities",
    "known_zero_lattice",
    "find_symmetry_case",
]


@dataclass(frozen=True)
class SymmetryCase:
    """One modular-symmetry configuration ``(s^2, p, w0, l)``."""

    s_squared: int
    p: int
    gamma0: Fraction
    eigen_index: int

    def __post_init__(self):
        object.__setattr__(self, "gamma0", Fraction(self.gamma0))
        if not 0 <= self.p < self.s_squared:
            raise ValueError(f"p must lie in [0, s^2 - 1], got p={self.p}, s^2={self.s_squared}")
        if not _in_domain(self.s_squared, self.gamma0, self.eigen_index):
            raise ValueError(
                f"no modular symmetry for s^2={self.s_squared}, gamma0={self.gamma0}, "
                f"l={self.eigen_index}"
            )

    @property
    def s(self) -> float:
        return math.sqrt(self.s_squared)

    @property
    def x0(self) -> Fraction:
        if self.gamma0 == Fraction(1, 2):
            return (Fraction(1, 2) + self.p) / self.s_squared
        return Fraction(self.p, self.s_squared)

    @property
    def predicted_sign(self) -> int:
        return predicted_sign(self.eigen_index, self)

    @property
    def characteristic(self) -> str:
        return "even" if self.predicted_sign == 1 else "odd"


def _in_domain(s_squared: int, gamma0: Fraction, ell: int) -> bool:
    if gamma0 == Fraction(1, 2):
        if s_squared == 2:
            return ell in (0, 1, 2, 3)
        return s_squared == 3 and ell in (0, 2)
    if gamma0 == 0:
        return s_squared in (2, 3, 4) and ell in (1, 3)
    return False


def predicted_sign(ell: int, case: SymmetryCase) -> int:
    """Sign relating ``Z_{s lam} g(x0, w0)`` and ``Z_{s/lam} g(x0, w0)``."""
    if not _in_domain(case.s_squared, case.gamma0, ell):
        raise ValueError(f"l={ell} is outside the symmetry domain of {case}")
    if case.gamma0 == Fraction(1, 2):
        return -1 if (ell // 2) % 2 else 1
    return -1 if ((ell - 1) // 2) % 2 else 1


def valid_cases(ell: int) -> list[SymmetryCase]:
    """Every symmetry case available for eigen-index ``l``."""
    out = []
    for gamma0 in (Fraction(1, 2), Fraction(0)):
        for s2 in (2, 3, 4):
            if _in_domain(s2, gamma0, ell):
                out.extend(SymmetryCase(s2, p, gamma0, ell) for p in range(s2))
    return out


def find_symmetry_case(window: Window, x0, gamma0, s: float, rtol: float = 1e-12) -> Optional[SymmetryCase]:
    """Match a modular slice ``(x0, w0, s)`` against the symmetry families.

    ``x0`` is compared modulo 1.  Returns ``None`` when no family applies.
    """
    ell = window.eigen_index
    if ell is None:
        return None
    s2 = s * s
    s2_int = round(s2)
    if abs(s2 - s2_int) > rtol * max(1.0, s2):
        return None
    g = float(gamma0) % 1.0
    if abs(g - 0.5) < 1e-14:
        gamma = Fraction(1, 2)
    elif abs(g) < 1e-14 or abs(g - 1.0) < 1e-14:
        gamma = Fraction(0)
    else:
        return None
    if not _in_domain(s2_int, gamma, ell):
        return None
    for p in range(s2_int):
        case = SymmetryCase(s2_int, p, gamma, ell)
        d = (float(x0) - float(case.x0)) % 1.0
        if min(d, 1.0 - d) < 1e-12:
            return case
    return None


def check_modular_symmetry(n: int, case: SymmetryCase, kappas, tol: float = DEFAULT_TOL) -> float:
    """Largest ``|F(kappa) - sign F(-kappa)|`` over ``kappas``.

    ``F(kappa) = Z_{s 2^kappa} h_n(x0, w0)``.
    """
    ell = n % 4
    if ell != case.eigen_index:
        raise ValueError(f"h_{n} has eigen-index {ell}, case expects {case.eigen_index}")
    sign = predicted_sign(ell, case)
    w = hermite_window(n)
    k = np.asarray(kappas, dtype=float)
    lam_plus = case.s * np.exp2(k)
    lam_minus = case.s * np.exp2(-k)
    x0, g0 = float(case.x0), float(case.gamma0)
    f_plus = zak_modular(w, lam_plus, x0, g0, tol)
    f_minus = zak_modular(w, lam_minus, x0, g0, tol)
    return float(np.max(np.abs(f_plus - sign * f_minus)))


def check_zak_poisson_lemma(n: int, lam: float, s_squared: int, x: float, p: int,
                            tol: float = DEFAULT_TOL) -> float:
    """Residual of the split Poisson identity

    ``Z_{s lam} g((x+p)/s^2, x) = (-i)^l e^{2 pi i x (x+p)/s^2} / s
    * sum_r e^{2 pi i r (x+p)/s^2} Z_{s/lam} g((x+r)/s^2, -x)``.
    """
    if not 0 <= p < s_squared:
        raise ValueError("p must lie in [0, s^2 - 1]")
    w = hermite_window(n)
    s = math.sqrt(s_squared)
    u = (x + p) / s_squared
    lhs = complex(zak_auto(w, s * lam, u, x, tol).value)
    r = np.arange(s_squared)
    inner = zak_auto(w, s / lam, (x + r) / s_squared, -x, tol).value
    rhs = (-1j) ** (n % 4) * np.exp(2j * np.pi * x * u) / s * np.sum(np.exp(2j * np.pi * r * u) * inner)
    return abs(lhs - rhs)


def _pairing_half(w: Window, lam: float, s2: int, p: int, tol: float) -> float:
    """Pairing of the ``w = -1/2`` sum (terms ``r`` and ``s^2-1-r``)."""
    j = w.parity
    s = math.sqrt(s2)
    u = (0.5 + p) / s2
    r = np.arange(s2)
    z = zak_auto(w, s / lam, (0.5 + r) / s2, -0.5, tol).value
    full = np.sum(np.exp(2j * np.pi * r * u) * z)
    half = s2 // 2 if s2 % 2 == 0 else (s2 - 1) // 2
    rr = np.arange(half)
    paired = np.sum(
        (np.exp(2j * np.pi * rr * u) + (-1) ** j * np.exp(2j * np.pi * ((s2 - 1 - rr) * u + 0.5))) * z[:half]
    )
    if s2 % 2:
        paired += np.exp(2j * np.pi * (s2 - 1) / 2 * u) * z[(s2 - 1) // 2]
    return abs(full - paired)


def _pairing_zero(w: Window, lam: float, s2: int, p: int, tol: float) -> float:
    """Pairing of the ``w = 0`` sum (terms ``r`` and ``s^2-r``)."""
    j = w.parity
    s = math.sqrt(s2)
    u = p / s2
    r = np.arange(s2)
    z = zak_auto(w, s / lam, r / s2, 0.0, tol).value
    full = np.sum(np.exp(2j * np.pi * r * u) * z)
    top = s2 // 2 - 1 if s2 % 2 == 0 else (s2 - 1) // 2
    rr = np.arange(1, top + 1)
    paired = np.sum((np.exp(2j * np.pi * rr * u) + (-1) ** j * np.exp(2j * np.pi * u * (s2 - rr))) * z[rr])
    paired += z[0]
    if s2 % 2 == 0:
        paired += np.exp(2j * np.pi * p / 2) * z[s2 // 2]
    return abs(full - paired)


def check_pairing_identities(n: int, lam: float, s_squared: int, p: int, tol: float = DEFAULT_TOL) -> float:
    """Max residual of the term pairings at ``w = 1/2`` and ``w = 0``.

    The even/odd branch is selected by the parity of ``s^2``; the window parity
    comes from ``n``.
    """
    if not 0 <= p < s_squared:
        raise ValueError("p must lie in [0, s^2 - 1]")
    w = hermite_window(n)
    return max(_pairing_half(w, lam, s_squared, p, tol), _pairing_zero(w, lam, s_squared, p, tol))


def known_zero_lattice(ell: int) -> list[tuple[float, float, float]]:
    """Forced zeros ``(lam, x, w)`` in ``[0,1)^2`` for eigen-index 2 or 3.

    These come from odd modular characteristics at ``kappa = 0``.
    """
    sq2, sq3 = math.sqrt(2.0), math.sqrt(3.0)
    if ell == 2:
        pts = [(1.0, 0.0, 0.0)]
        pts += [(sq2, x, 0.5) for x in (0.25, 0.5, 0.75)]
        pts += [(sq3, x, 0.5) for x in (1 / 6, 0.5, 5 / 6)]
        return pts
    if ell == 3:
        pts = [(1.0, 0.5, 0.5)]
        for s in (2, 3, 4):
            pts += [(math.sqrt(s), k / s, 0.0) for k in range(s)]
        pts += [(sq2, x, 0.5) for x in (0.25, 0.75)]
        return pts
    raise ValueError(f"no non-trivial forced zeros are known for eigen-index {ell}")
