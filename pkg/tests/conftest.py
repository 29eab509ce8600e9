import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np
import pytest

from mps import create_app
from mps.designs import KNOWN_DIFFERENCE_SETS, cyclic_design, design_to_hadamard, fano_design
from mps.models import Tolerance


@pytest.fixture
def app(tmp_path):
    app = create_app()
    app.config["TESTING"] = True
    app.config["OUTPUT_FOLDER"] = str(tmp_path / "output")
    app.config["MPS_SEARCH_THREADS"] = 1
    yield app


@pytest.fixture
def runner(app):
    return app.test_cli_runner()


@pytest.fixture
def tol():
    return Tolerance(1e-9)


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


@pytest.fixture
def fano():
    return fano_design()


@pytest.fixture
def hadamard12():
    """由 (11,5,2) 二次剩余差集拼出的 12 阶 Hadamard 矩阵"""
    return design_to_hadamard(cyclic_design(11, KNOWN_DIFFERENCE_SETS[(11, 5, 2)]))
