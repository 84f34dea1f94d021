"""
Analyserapport voor één toestand.

Basisvelden (birang, PPT) worden altijd gevuld. Klassespecifieke velden
(kernproductvectoren, census, ppPNNp-kwadrupel, checkerboard) blijven leeg
als de toestand buiten de klasse valt; de reden staat dan in `errors`.
"""
from dataclasses import dataclass, field
from typing import Optional
import logging

from ..config.settings import ToleranceProfile, resolve_tolerances
from ..core.errors import PPTESError
from ..core.product import ProductVector
from ..core.qmat import StateLike, birank, extreme_necessary, is_ppt
from ..equivalence.checkerboard import CheckerboardVerdict, checkerboard_class
from ..equivalence.slocc import find_ordering, kernel_sextuple
from ..finder.product_vectors import in_general_position
from ..invariants.group import apply_ordering
from ..invariants.jinvariants import PPPNNP, census_summary, sextuple_invariants, symbol_census

logger = logging.getLogger(__name__)


@dataclass
class StateReport:
    """Resultaat van analyze."""
    birank: tuple[int, int]
    ppt: bool
    extreme_candidate: bool
    kernel_pvs: list[ProductVector] = field(default_factory=list)
    general_position: Optional[bool] = None
    census: dict[str, int] = field(default_factory=dict)
    census_summary: Optional[str] = None
    pppnnp_ordering: Optional[tuple[int, ...]] = None
    quadruple: Optional[tuple[float, ...]] = None
    checkerboard: Optional[CheckerboardVerdict] = None
    errors: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "birank": list(self.birank),
            "ppt": self.ppt,
            "extreme_candidate": self.extreme_candidate,
            "kernel_pvs": len(self.kernel_pvs) if self.kernel_pvs else None,
            "kernel_vectors": [v.to_dict() for v in self.kernel_pvs],
            "general_position": self.general_position,
            "census": self.census_summary,
            "census_counts": self.census,
            "pppnnp_ordering": list(self.pppnnp_ordering) if self.pppnnp_ordering else None,
            "quadruple": list(self.quadruple) if self.quadruple else None,
            "checkerboard": self.checkerboard.to_dict() if self.checkerboard else None,
            "errors": self.errors,
        }


def analyze_state(rho: StateLike, tol: Optional[ToleranceProfile] = None) -> StateReport:
    """Bouw het rapport; fouten in klassespecifieke stappen worden vastgelegd, niet doorgegeven."""
    tol = resolve_tolerances(tol)
    ranks = birank(rho, tol)
    report = StateReport(birank=ranks, ppt=is_ppt(rho, tol), extreme_candidate=extreme_necessary(ranks))

    try:
        s = kernel_sextuple(rho, tol)
    except PPTESError as e:
        logger.warning(f"Klassespecifieke velden overgeslagen: {e}")
        report.errors["kernel"] = f"{type(e).__name__}: {e}"
        return report

    report.kernel_pvs = s
    report.general_position = in_general_position(s, tol)

    try:
        report.census = symbol_census(s, tol)
        report.census_summary = census_summary(report.census)
        order = find_ordering(s, PPPNNP, tol)
        if order is not None:
            report.pppnnp_ordering = order
            report.quadruple = sextuple_invariants(apply_ordering(s, order), tol).quadruple
    except PPTESError as e:
        report.errors["invariants"] = f"{type(e).__name__}: {e}"

    try:
        report.checkerboard = checkerboard_class(rho, tol)
    except PPTESError as e:
        report.errors["checkerboard"] = f"{type(e).__name__}: {e}"

    logger.info(f"Analyse: birang {ranks}, {len(s)} kernproductvectoren, census {report.census_summary}")
    return report
