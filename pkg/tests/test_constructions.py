# coding=utf-8
import math
from fractions import Fraction

import numpy as np
import pytest

from mps.constructions import (
    complex_core_matrix,
    conference_block_family,
    conference_core_family,
    construct,
    design_family,
    full_j_matrix,
    hadamard_core_family,
    n2_matrix,
    real_from_design,
    real_from_design_exact,
    upper_interval,
)
from mps.core import (
    check_trace_identity,
    is_hermitian,
    is_unitary,
    mps_profile,
    reflection_probability,
    scattering_probabilities,
)
from mps.designs import (
    hadamard_to_design,
    identity_design,
    normalize_to_standard,
    paley_conference,
    sylvester_hadamard,
)
from mps.errors import (
    DesignInvalid,
    NotHadamard,
    NotHermitianConference,
    OutOfRange,
    ParameterMismatch,
)
from mps.models import Family, FamilySpec, HadamardMatrix


def grid(low, high, count=12):
    return np.linspace(low, high, count)


def assert_member(S, d, tol):
    """Hermite、酉、d 吻合、迹恒等式、散射概率"""
    assert is_hermitian(S, tol)
    assert is_unitary(S, tol)
    profile = mps_profile(S, tol)
    assert abs(profile.d - float(d)) <= 1e-9 * max(1.0, float(d))
    assert check_trace_identity(profile, tol)
    n = S.n
    for j in (1, n):
        probs = scattering_probabilities(S, j, tol)
        assert probs.sum() == pytest.approx(1.0, abs=1e-9)
        assert probs[j - 1] == pytest.approx(reflection_probability(n, d), abs=1e-9)


@pytest.mark.parametrize("n", range(2, 11))
def test_full_j(n, tol):
    assert_member(full_j_matrix(n), Fraction(n, 2) - 1, tol)


@pytest.mark.parametrize("d", [0.0, 0.5, 3.0, 7.25])
def test_n2(d, tol):
    assert_member(n2_matrix(d), d, tol)


@pytest.mark.parametrize("n", range(4, 31, 2))
def test_upper_interval_sweep(n, tol):
    for d in grid(max(0.0, n / 2 - 3), n / 2 - 1):
        assert_member(upper_interval(n, d, tol), d, tol)


@pytest.mark.parametrize("n", [6, 14, 30])
def test_hadamard_core_sweep(n, tol):
    H = sylvester_hadamard(n // 2 + 1)
    for d in grid(n / 4 - 1.5, n / 2 - 1):
        assert_member(hadamard_core_family(n, d, H, tol), d, tol)


def test_hadamard_core_order_twelve(hadamard12, tol):
    for d in grid(4.0, 10.0):
        assert_member(hadamard_core_family(22, d, hadamard12, tol), d, tol)


@pytest.mark.parametrize("n", [10, 26])
def test_conference_core_sweep(n, tol):
    C = paley_conference(n // 2 + 1)
    for d in grid(n / 4 - 1.5 - 1 / (n - 2), n / 2 - 1):
        assert_member(conference_core_family(n, d, C, tol), d, tol)


@pytest.mark.parametrize("n", range(6, 31, 2))
def test_complex_core(n, tol):
    S = complex_core_matrix(n, tol)
    assert_member(S, n / 4 - 1.5, tol)


def test_complex_core_is_not_real(tol):
    assert not complex_core_matrix(8, tol).is_real(tol)


@pytest.mark.parametrize("n", [12, 28])
def test_conference_block_sweep(n, tol):
    C = paley_conference(n // 2)
    for d in grid(0.0, 1.0):
        assert_member(conference_block_family(n, d, C, tol), d, tol)


def test_design_family_sweep(fano, tol):
    """d = −1 + n/2 − (k−λ)(1 − cos 2α)"""
    for alpha in grid(0.0, math.pi / 2):
        d = 6 - 2 * (1 - math.cos(2 * alpha))
        assert_member(design_family(14, fano, alpha, tol), d, tol)


def test_design_family_identity_design(tol):
    design = identity_design(5)
    S = design_family(10, design, 0.4, tol)
    assert_member(S, 4 - (1 - math.cos(0.8)), tol)


def test_real_from_fano_is_exact(fano, tol):
    """Q Qᵀ = 17 I，整数精确"""
    M = real_from_design_exact(14, 2, fano)
    Q2 = M.q2
    assert np.array_equal(Q2 @ Q2.T, 4 * 17 * np.eye(14, dtype=np.int64))
    assert_member(real_from_design(14, 2, fano, tol), 2, tol)


def test_real_from_degenerate_design(tol):
    M = real_from_design_exact(10, 2, identity_design(5))
    assert M.n == 10
    assert M.d == 2


def test_construct_dispatch(tol):
    cases = [
        (FamilySpec(Family.FULL_J, n=6), 2),
        (FamilySpec(Family.N2, d=Fraction(3, 2)), 1.5),
        (FamilySpec(Family.UPPER_INTERVAL, n=8, d=2), 2),
        (FamilySpec(Family.HADAMARD_CORE, n=14, d=3), 3),
        (FamilySpec(Family.CONFERENCE_CORE, n=10, d=2), 2),
        (FamilySpec(Family.COMPLEX_CORE, n=8), 0.5),
        (FamilySpec(Family.CONFERENCE_BLOCK, n=12, d=0.5), 0.5),
        (FamilySpec(Family.DESIGN_REAL, n=14, d=2), 2),
        (FamilySpec(Family.DESIGN_REAL, n=22, d=4), 4),
    ]
    for spec, d in cases:
        assert_member(construct(spec, tol), d, tol)


def test_construct_design_complex_needs_alpha():
    with pytest.raises(OutOfRange):
        construct(FamilySpec(Family.DESIGN_COMPLEX, n=14))


def test_construct_design_real_without_design():
    with pytest.raises(ParameterMismatch):
        construct(FamilySpec(Family.DESIGN_REAL, n=26, d=4))


def test_upper_interval_rejects():
    with pytest.raises(OutOfRange):
        upper_interval(5, 1)
    with pytest.raises(OutOfRange):
        upper_interval(8, 0.5)


def test_hadamard_core_rejects_bad_input():
    fake = HadamardMatrix(order=4, H=np.ones((4, 4), dtype=np.int64), kind="real")
    with pytest.raises(NotHadamard):
        hadamard_core_family(6, 1, fake)
    with pytest.raises(NotHadamard):
        hadamard_core_family(10, 2, sylvester_hadamard(4))
    with pytest.raises(OutOfRange):
        hadamard_core_family(14, 1, sylvester_hadamard(8))


def test_conference_core_below_interval():
    with pytest.raises(OutOfRange):
        conference_core_family(10, 0.5, paley_conference(6))


def test_conference_block_wrong_order():
    with pytest.raises(NotHermitianConference):
        conference_block_family(10, 0.5, paley_conference(6))


def test_design_mismatch(fano):
    with pytest.raises(DesignInvalid):
        design_family(10, fano, 0.3)
    with pytest.raises(ParameterMismatch):
        real_from_design(14, 4, fano)


def test_design_family_meets_hadamard_core(tol):
    """α = π/2 时设计族与 Hadamard 核族在同一 d 上重合"""
    H = sylvester_hadamard(8)
    design = hadamard_to_design(H)
    S = design_family(14, design, math.pi / 2, tol)
    T = hadamard_core_family(14, 2, H, tol)
    assert mps_profile(S, tol).d == pytest.approx(2.0)
    assert np.allclose(S.entries, T.entries, atol=1e-12)


def test_cores_commute_with_j(fano, tol):
    """±1 核与 J 精确可交换，取指数后仍在 1e−9 内可交换"""
    cores = [
        normalize_to_standard(sylvester_hadamard(8))[1],
        normalize_to_standard(paley_conference(6))[1],
        2 * fano.incidence - 1,
    ]
    for K in cores:
        J = np.ones_like(K)
        assert np.array_equal(K @ J, J @ K)
        for alpha in (0.3, 1.1, math.pi / 2):
            G = np.exp(1j * alpha * K)
            assert np.max(np.abs(G @ J - J @ G)) <= 1e-9


EDGE = 1e-6


@pytest.mark.parametrize(
    "build, low, high",
    [
        (lambda d: upper_interval(8, d), 1.0, 3.0),
        (lambda d: hadamard_core_family(14, d, sylvester_hadamard(8)), 2.0, 6.0),
        (lambda d: conference_core_family(10, d, paley_conference(6)), 0.875, 4.0),
        (lambda d: conference_block_family(12, d, paley_conference(6)), 0.0, 1.0),
    ],
    ids=["upper_interval", "hadamard_core", "conference_core", "conference_block"],
)
def test_interval_endpoints(build, low, high, tol):
    """区间两端可取，越出 1e−6 即拒绝"""
    for d in (low, high):
        assert_member(build(d), d, tol)
    for d in (low - EDGE, high + EDGE):
        with pytest.raises(OutOfRange):
            build(d)
