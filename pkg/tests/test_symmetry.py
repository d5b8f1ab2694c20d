import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaborzak.symmetry import (
    SymmetryCase,
    check_modular_symmetry,
    check_pairing_identities,
    check_zak_poisson_lemma,
    find_symmetry_case,
    known_zero_lattice,
    predicted_sign,
    valid_cases,
)
from gaborzak.verify import SUITES, run_suite
from gaborzak.zak import hermite_window, zak_auto

KAPPAS = np.linspace(-3, 3, 21)


def test_predicted_signs():
    assert predicted_sign(0, SymmetryCase(3, 0, Fraction(1, 2), 0)) == 1
    assert predicted_sign(2, SymmetryCase(2, 0, Fraction(1, 2), 2)) == -1
    assert predicted_sign(3, SymmetryCase(4, 1, Fraction(0), 3)) == -1
    assert SymmetryCase(4, 1, Fraction(0), 3).characteristic == "odd"


def test_domain_rejections():
    with pytest.raises(ValueError):
        SymmetryCase(3, 0, Fraction(1, 2), 1)
    with pytest.raises(ValueError):
        SymmetryCase(4, 0, Fraction(1, 2), 0)
    with pytest.raises(ValueError):
        SymmetryCase(3, 0, Fraction(0), 2)
    with pytest.raises(ValueError):
        SymmetryCase(2, 2, Fraction(0), 1)
    with pytest.raises(ValueError):
        predicted_sign(1, SymmetryCase(3, 0, Fraction(1, 2), 0))


@pytest.mark.parametrize("n", range(13))
def test_modular_symmetry_every_case(n):
    for case in valid_cases(n % 4):
        assert check_modular_symmetry(n, case, KAPPAS) < 1e-10


@pytest.mark.parametrize("n", range(13))
def test_odd_characteristic_forces_zero(n):
    for case in valid_cases(n % 4):
        if case.predicted_sign == -1:
            z = zak_auto(hermite_window(n), case.s, float(case.x0), float(case.gamma0)).value
            assert abs(z) < 1e-10


def test_ceiling_sign_would_be_wrong_for_eigen_index_one():
    # floor(l/2) = 0 but ceil(l/2) = 1 at l = 1: the slice is even, not odd
    case = SymmetryCase(2, 0, Fraction(1, 2), 1)
    w = hermite_window(5)
    k = np.array([0.3, 0.8, 1.4])
    plus = zak_auto(w, case.s * 2.0 ** k[0], float(case.x0), 0.5).value
    minus = zak_auto(w, case.s * 2.0 ** -k[0], float(case.x0), 0.5).value
    assert abs(plus - minus) < 1e-12 and abs(plus + minus) > 1e-3


def test_modular_symmetry_rejects_wrong_index():
    with pytest.raises(ValueError):
        check_modular_symmetry(4, SymmetryCase(2, 0, Fraction(1, 2), 2), KAPPAS)


@pytest.mark.parametrize("args", [(5, 1.3, 3, 0.5, 0), (4, 1.0, 2, 0.5, 1), (0, 2.0, 4, 0.0, 0)])
def test_poisson_lemma_examples(args):
    assert check_zak_poisson_lemma(*args) < 1e-10


@given(st.integers(0, 12), st.floats(0.3, 3.0), st.sampled_from([2, 3, 4, 5]), st.floats(-1, 1), st.data())
def test_poisson_lemma_property(n, lam, s2, x, data):
    p = data.draw(st.integers(0, s2 - 1))
    assert check_zak_poisson_lemma(n, lam, s2, x, p) < 1e-10


@pytest.mark.parametrize("args", [(6, 1.1, 4, 1), (7, 0.9, 3, 2), (4, 1.0, 2, 0)])
def test_pairing_examples(args):
    assert check_pairing_identities(*args) < 1e-10


@given(st.integers(0, 12), st.floats(0.3, 3.0), st.integers(2, 7), st.data())
def test_pairing_property(n, lam, s2, data):
    p = data.draw(st.integers(0, s2 - 1))
    assert check_pairing_identities(n, lam, s2, p) < 1e-10


def test_lattice_contents():
    two = known_zero_lattice(2)
    three = known_zero_lattice(3)
    assert any(np.allclose(p, (math.sqrt(3), 1 / 6, 0.5)) for p in two)
    assert any(np.allclose(p, (1.0, 0.0, 0.0)) for p in two)
    assert any(np.allclose(p, (math.sqrt(2), 0.25, 0.5)) for p in three)
    for pts in (two, three):
        assert all(0 <= x < 1 and 0 <= g < 1 for _, x, g in pts)
    for ell in (0, 1):
        with pytest.raises(ValueError):
            known_zero_lattice(ell)


@pytest.mark.parametrize("n", [k for k in range(16) if k % 4 in (2, 3)])
def test_lattice_points_vanish(n):
    w = hermite_window(n)
    for lam, x, g in known_zero_lattice(n % 4):
        assert abs(zak_auto(w, lam, x, g).value) < 1e-10


def test_find_symmetry_case():
    w8 = hermite_window(8)
    case = find_symmetry_case(w8, 1 / 6, 0.5, math.sqrt(3))
    assert case == SymmetryCase(3, 0, Fraction(1, 2), 0)
    assert find_symmetry_case(w8, 1 / 6 + 1, 0.5, math.sqrt(3)) == case
    assert find_symmetry_case(w8, 0.2, 0.5, math.sqrt(3)) is None
    assert find_symmetry_case(hermite_window(7), 1 / 6, 0.0, math.sqrt(3)) is None
    assert find_symmetry_case(hermite_window(7), 1 / 3, 0.0, math.sqrt(3)).p == 1


@pytest.mark.parametrize("suite", list(SUITES))
def test_identity_suites_pass(suite):
    r = run_suite(suite, n_max=12)
    assert r.passed, r
    assert r.checks > 0


def test_suite_report_is_thread_independent(monkeypatch):
    a = run_suite("thm46", n_max=6)
    monkeypatch.setenv("GFS_THREADS", "4")
    b = run_suite("thm46", n_max=6)
    assert a == b
