"""
Afbeelding Φ: R → Ω van een invariantenkwadrupel naar parameters van ω.
"""
from typing import Sequence
import logging
import math

from ..core.errors import OutOfBox
from ..states.builders import CanonicalParams
from .jinvariants import in_box

logger = logging.getLogger(__name__)


def _root(name: str, radicand: float) -> float:
    if not radicand > 0:
        # op R zijn alle radicanden positief
        raise AssertionError(f"Radicand voor {name} is niet positief: {radicand}")
    return math.sqrt(radicand)


def phi(q: Sequence[float]) -> CanonicalParams:
    """
    Parameters (a, b, c, d) met ω(a,b,c,d) van invariantenkwadrupel q.

    Raises:
        OutOfBox: q ligt niet in R
    """
    x, y, z, w = (float(v) for v in q)
    if not in_box((x, y, z, w)):
        raise OutOfBox(f"Punt {(x, y, z, w)} ligt niet in R")

    b = _root("b", -(z * w / y) * (1 - y) * (1 - x * y) / ((1 - z * w) * (1 - x * z * w)))
    c = _root("c", -(1 / z) * (1 - x * z) * (y - z * w) / ((1 - w) * (1 - x * y)))
    d = _root("d", x * (1 - z) * (1 - w) / ((1 - x) * (1 - x * z * w)))
    a = (b * c * d / w) * (1 - x) * (1 - x * z * w) * (y - z * w) / ((1 - y) * (1 - x * z) ** 2)
    return CanonicalParams(a, b, c, d)
