"""Tests voor Φ."""
import numpy as np
import pytest

from src.core.errors import OutOfBox
from src.core.qmat import birank, is_ppt
from src.invariants.phi import phi
from src.states.builders import choi_canonical_params, choi_quadruple, omega

from .values import TILES_PARAMS, TILES_POINT, random_box_point


class TestPhi:
    def test_tiles(self):
        p = phi(TILES_POINT)
        np.testing.assert_allclose((p.a, p.b, p.c, p.d), TILES_PARAMS, rtol=1e-10)

    @pytest.mark.parametrize("lam", [0.1, 0.5, 0.9])
    def test_choi(self, lam):
        p = phi(choi_quadruple(lam))
        expected = choi_canonical_params(lam)
        np.testing.assert_allclose((p.a, p.b, p.c, p.d), (expected.a, expected.b, expected.c, expected.d), rtol=1e-9)

    def test_random_points_give_rank4_ppt(self, rng):
        for _ in range(5):
            rho = omega(phi(random_box_point(rng)))
            assert birank(rho) == (4, 4)
            assert is_ppt(rho)

    @pytest.mark.parametrize("q", [(0.5, 0.5, 1.0, 0.5), (1.5, 0.5, -1.0, 0.5), (0.5, 0.5, -1.0, 1.0)])
    def test_out_of_box(self, q):
        with pytest.raises(OutOfBox):
            phi(q)
