"""Gedeelde fixtures."""
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from src.core.qmat import random_ilo as draw_ilo
from src.states.builders import CanonicalParams, omega


@pytest.fixture
def rng():
    return np.random.default_rng(2012)


@pytest.fixture
def omega_1111():
    return omega(CanonicalParams(1, 1, 1, 1))


@pytest.fixture
def omega_1234():
    return omega(CanonicalParams(1, 2, 3, 4))


@pytest.fixture
def random_ilo(rng):
    """Een goed geconditioneerd paar (V, W)."""
    return draw_ilo(rng, max_cond=10)
