"""Referentiewaarden voor de tests."""
import math

import numpy as np

GOLDEN = (
    (math.sqrt(5) - 1) / 2,
    (math.sqrt(5) - 1) / 2,
    -(math.sqrt(5) + 1) / 2,
    (3 - math.sqrt(5)) / 2,
)

TILES_POINT = (1 / 2, 2 / 3, -1.0, 1 / 2)

TILES_ORBIT = [
    (1 / 2, 1 / 2, -2.0, 1 / 4),
    (1 / 2, 2 / 3, -1.0, 1 / 2),
    (2 / 3, 1 / 2, -2.0, 1 / 2),
    (2 / 3, 3 / 4, -3.0, 1 / 3),
    (3 / 4, 2 / 3, -1.0, 1 / 3),
]

# Φ(TILES_POINT)
TILES_PARAMS = (
    7 * math.sqrt(21) / 27,
    2 / (3 * math.sqrt(5)),
    math.sqrt(21) / 2,
    2 / math.sqrt(5),
)


def random_box_point(rng: np.random.Generator) -> tuple[float, float, float, float]:
    """Punt van R: x, y, w ∈ (0,1), z < 0, weg van de randen."""
    x, y, w = rng.uniform(0.1, 0.9, size=3)
    z = -rng.uniform(0.2, 4.0)
    return float(x), float(y), float(z), float(w)
