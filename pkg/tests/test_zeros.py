import math

import numpy as np
import pytest

from gaborzak.hermite import turning_point
from gaborzak.zak import hermite_window
from gaborzak.zeros import (
    ModularSlice,
    SignChangeLostError,
    count_zeros,
    find_zeros,
    hermite_slice,
    refine_zero,
    scan_sign_changes,
    search_bracket_from_bounds,
    witness_lambdas,
)

H8_ZEROS = [-2.01794767, -1.45344028, -0.67928838, 0.67928838, 1.45344028, 2.01794767]
LARGEST_ZERO_DATA = {  # n: (lower, largest zero, upper) for x0 = 1/4
    4: (2.62211623342099, 2.63600358223107, 4.78730736481719),
    6: (3.69348781844744, 3.75102328412274, 5.75362739175159),
    8: (4.56029011109392, 4.67662070190268, 6.57952464247954),
    10: (5.3034912118052, 5.48331661876521, 7.31273279143145),
    12: (5.96261400303117, 6.20710288356161, 7.97884560802865),
    14: (6.56014455725242, 6.86890611430174, 8.59347971398312),
    16: (7.11021093712182, 7.48214481861465, 9.16699568847508),
    18: (7.62233106106616, 8.05602339998763, 9.70668461991024),
    20: (8.10325750767108, 8.59717564752081, 10.2179079399006),
}
# zero counts computed here and confirmed by brute-force summation without symmetry
ODD_COUNTS = {
    "1/6": [0, 1, 4, 5, 6, 9, 10, 11, 16, 15, 18],
    "1/4": [0, 1, 2, 5, 6, 7, 8, 13, 12, 15, 20],
}


def test_h8_scan_and_refine():
    sl = hermite_slice(8, "1/6", "1/2")
    assert sl.s == pytest.approx(math.sqrt(3))
    assert len(scan_sign_changes(sl, -3, 3, 1e-3)) == 6
    z = find_zeros(sl)
    assert [r.kappa for r in z] == pytest.approx(H8_ZEROS, abs=1e-8)
    for r in z:
        assert r.residual < 1e-9
        assert r.bracket[0] <= r.kappa <= r.bracket[1]
        assert r.bracket[1] - r.bracket[0] < 1e-12
        assert r.lam == pytest.approx(math.sqrt(3) * 2**r.kappa)


def test_gaussian_slice_has_no_zeros():
    assert scan_sign_changes(hermite_slice(0, "1/6", "1/2"), -6, 6, 1e-3) == []


def test_forced_zero_at_kappa_zero():
    sl = hermite_slice(2, "1/4", "1/2")
    br = scan_sign_changes(sl, -6, 6, 1e-3)
    assert len(br) == 1 and br[0][0] <= 0 <= br[0][1]
    assert abs(refine_zero(sl, br[0]).kappa) < 1e-12
    assert sl.symmetry.characteristic == "odd"


def test_symmetric_and_full_scans_agree():
    for n, x0, g0 in [(8, "1/6", "1/2"), (10, "1/4", "1/2"), (7, "1/3", "0"), (11, "1/4", "0")]:
        sl = hermite_slice(n, x0, g0)
        a = [z.kappa for z in find_zeros(sl)]
        b = [z.kappa for z in find_zeros(sl, use_symmetry=False)]
        assert a == pytest.approx(b, abs=1e-9)
        assert a == pytest.approx([-k for k in reversed(a)], abs=1e-8)


def test_largest_zero_inside_closed_form_bracket():
    for n, (lo, lam1, hi) in LARGEST_ZERO_DATA.items():
        blo, bhi = search_bracket_from_bounds(n, 0.25)
        assert (blo, bhi) == pytest.approx((lo, hi), abs=1e-9)
        zeros = find_zeros(hermite_slice(n, "1/4", "1/2"))
        top = max(z.lam for z in zeros)
        assert top == pytest.approx(lam1, abs=1e-9)
        assert blo < top < bhi


def test_bracket_preconditions():
    with pytest.raises(ValueError):
        search_bracket_from_bounds(2, 0.25)
    with pytest.raises(ValueError):
        search_bracket_from_bounds(5, 0.3)
    with pytest.raises(ValueError):
        search_bracket_from_bounds(5, 0.0)


def test_even_counts():
    published = {"1/4": [0, 1, 2, 3, 6, 9, 10, 15, 16, 17, 16], "1/6": [0, 1, 2, 5, 6, 7, 10, 13, 18, 19, 20]}
    for x0, row in published.items():
        assert [count_zeros(n, x0, "1/2") for n in range(0, 21, 2)] == row


def test_odd_counts_frozen():
    for x0, row in ODD_COUNTS.items():
        assert [count_zeros(n, x0, "0") for n in range(1, 22, 2)] == row


def test_counts_stable_under_finer_step():
    for n, x0, g0 in [(16, "1/6", "1/2"), (20, "1/4", "1/2"), (17, "1/6", "0"), (21, "1/4", "0")]:
        assert count_zeros(n, x0, g0) == count_zeros(n, x0, g0, step=5e-4)


@pytest.mark.parametrize("n", range(4, 21, 2))
def test_existence_even(n):
    for x0 in (0.05, 0.10, 0.15, 0.20, 0.25):
        sl = ModularSlice(hermite_window(n), x0, 0.5, 1.0)
        assert len(find_zeros(sl, (-6, 6), 1e-2)) >= 1


@pytest.mark.parametrize("n", range(3, 22, 2))
def test_existence_odd(n):
    for x0 in (0.05, 0.10, 0.15, 0.20, 0.25):
        sl = ModularSlice(hermite_window(n), x0, 0.0, 1.0)
        assert len(find_zeros(sl, (-6, 6), 1e-2)) >= 1


@pytest.mark.parametrize("n", range(3, 22))
def test_sign_witnesses(n):
    g0 = 0.5 if n % 2 == 0 else 0.0
    for x0 in (0.05, 0.10, 0.15, 0.20, 0.25):
        sl = ModularSlice(hermite_window(n), x0, g0, 1.0)
        lam0, lam1 = witness_lambdas(n, x0)
        assert lam1 * x0 > turning_point(n)
        assert sl(math.log2(lam1)) > 0
        assert sl(math.log2(lam0)) < 0


def test_slice_validation():
    w = hermite_window(3)
    with pytest.raises(ValueError):
        ModularSlice(w, 0.5, 0.0)  # odd window, half-integer x: identically zero
    with pytest.raises(ValueError):
        ModularSlice(hermite_window(4), 0.5, 0.5)
    with pytest.raises(ValueError):
        ModularSlice(w, 0.2, 0.3)
    with pytest.raises(ValueError):
        ModularSlice(w, 0.2, 0.0, s=-1.0)


def test_lost_sign_change_is_reported():
    sl = hermite_slice(8, "1/6", "1/2")
    with pytest.raises(SignChangeLostError):
        refine_zero(sl, (0.0, 0.1))


def test_grid_values_are_cached():
    sl = hermite_slice(6, "1/4", "1/2")
    a = sl.grid(0.0, 1.0, 0.01)
    assert sl.grid(0.0, 1.0, 0.01) is a
    assert np.allclose(a[1], sl(a[0]))
