# coding=utf-8
import numpy as np
import pytest

from mps.designs import (
    KNOWN_DIFFERENCE_SETS,
    cyclic_design,
    design_params_for,
    design_to_hadamard,
    fourier_complex_hadamard,
    hadamard_to_design,
    identity_design,
    known_design,
    make_design,
    normalize_to_standard,
    paley_conference,
    sylvester_hadamard,
    verify_conference,
    verify_design,
    verify_hadamard,
)
from mps.errors import BadOrder, DesignInvalid, NotNormalizable
from mps.models import ConferenceMatrix, DesignParams


def test_fano(fano):
    assert (fano.v, fano.k, fano.lam) == (7, 3, 1)
    assert verify_design(fano.incidence, 7, 3, 1)
    assert not fano.degenerate


@pytest.mark.parametrize("params", sorted(KNOWN_DIFFERENCE_SETS))
def test_difference_sets(params):
    v, k, lam = params
    design = cyclic_design(v, KNOWN_DIFFERENCE_SETS[params])
    assert (design.v, design.k, design.lam) == params
    A = design.incidence
    assert np.array_equal(A @ A.T, (k - lam) * np.eye(v) + lam * np.ones((v, v)))


def test_verify_design_rejects():
    A = np.eye(4, dtype=np.int64)
    assert not verify_design(A, 4, 1, 0)
    assert verify_design(A, 4, 1, 0, allow_degenerate=True)
    assert not verify_design(A, 4, 2, 1)
    with pytest.raises(DesignInvalid):
        make_design(A, 4, 2, 1)


def test_identity_design():
    design = identity_design(5)
    assert design.degenerate
    assert design.to_dict()["lambda"] == 0


@pytest.mark.parametrize("N", [1, 2, 4, 8, 16])
def test_sylvester(N):
    assert verify_hadamard(sylvester_hadamard(N))


@pytest.mark.parametrize("N", [3, 6, 12])
def test_sylvester_bad_order(N):
    with pytest.raises(BadOrder):
        sylvester_hadamard(N)


@pytest.mark.parametrize("N", [6, 14, 18, 30])
def test_paley(N):
    C = paley_conference(N)
    assert verify_conference(C, hermitian=True)


@pytest.mark.parametrize("N", [4, 5, 8, 10])
def test_paley_bad_order(N):
    with pytest.raises(BadOrder):
        paley_conference(N)


@pytest.mark.parametrize("N", [2, 3, 5, 7])
def test_fourier(N):
    assert verify_hadamard(fourier_complex_hadamard(N))


def test_normalize_scrambled_conference(rng):
    C = paley_conference(6).C
    cols = rng.permutation(6)
    signs = np.array([1, -1, 1, -1, -1, 1])
    scrambled = ConferenceMatrix(order=6, C=(signs[:, None] * C)[:, cols])
    std, core = normalize_to_standard(scrambled)
    assert np.all(np.diag(std.C) == 0)
    assert np.all(std.C[0, 1:] == 1)
    assert np.all(std.C[1:, 0] == 1)
    assert core.shape == (5, 5)
    assert verify_conference(std)


def test_normalize_rejects_bad_zero_pattern():
    C = ConferenceMatrix(order=3, C=np.array([[0, 0, 1], [1, 1, 1], [1, 1, 1]]))
    with pytest.raises(NotNormalizable):
        normalize_to_standard(C)


def test_normalize_hadamard(hadamard12):
    std, core = normalize_to_standard(hadamard12)
    assert np.all(std.H[0] == 1)
    assert np.all(std.H[:, 0] == 1)
    assert np.all(core.sum(axis=1) == -1)


def test_design_params_for():
    assert design_params_for(14, 2) == DesignParams(q=1, k=3, lam=1)
    assert design_params_for(22, 4) == DesignParams(q=1, k=5, lam=2)
    assert design_params_for(10, 2) == DesignParams(q=3, k=1, lam=0)
    assert design_params_for(6, 0) == DesignParams(q=1, k=1, lam=0)
    assert design_params_for(26, 4) is None
    assert design_params_for(14, 3) is None
    assert design_params_for(7, 1) is None


def test_hadamard_design_correspondence(hadamard12):
    design = hadamard_to_design(sylvester_hadamard(8))
    assert (design.v, design.k, design.lam) == (7, 3, 1)
    design = hadamard_to_design(hadamard12)
    assert (design.v, design.k, design.lam) == (11, 5, 2)
    assert verify_hadamard(design_to_hadamard(design))


def test_design_to_hadamard_rejects():
    with pytest.raises(BadOrder):
        design_to_hadamard(known_design(13, 4, 1))
    with pytest.raises(BadOrder):
        hadamard_to_design(sylvester_hadamard(2))


def test_known_design_providers():
    assert known_design(5, 1, 0).degenerate
    assert known_design(15, 7, 3).v == 15
    assert known_design(13, 4, 1).k == 4
    assert known_design(16, 6, 2) is None
