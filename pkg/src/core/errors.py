"""
Exceptions voor pptes-rank4.

Alle fouten erven van PPTESError zodat de CLI ze op één plek kan
vertalen naar exitcodes.
"""
from typing import Optional, Sequence


class PPTESError(Exception):
    """Basisklasse voor alle fouten in dit pakket."""
    pass


# Invoer en klasse

class DimensionMismatch(PPTESError):
    """Matrix heeft niet de verwachte afmetingen (9×9 voor 3×3 toestanden)."""
    pass


class InvalidState(PPTESError):
    """Matrix is geen geldige (niet-genormaliseerde) toestand."""
    pass


class InvalidParameter(PPTESError):
    """Parameter buiten het toegestane domein."""
    pass


class UnsupportedClass(PPTESError):
    """Toestand is geen 3×3 PPTES van birang (4,4)."""
    pass


class FixtureValidationError(PPTESError):
    """UPB-fixture voldoet niet aan orthogonaliteit of onuitbreidbaarheid."""
    pass


class StateFileError(PPTESError):
    """StateFile JSON kan niet gelezen of geïnterpreteerd worden."""
    pass


# Numerieke onbeslisbaarheid

class IndeterminateSearch(PPTESError):
    """Newton-polijsten convergeerde niet voor een kandidaatcluster."""
    pass


class DegenerateQuintuple(PPTESError):
    """Een Δ-determinant in een noemer is (numeriek) nul."""
    pass


class NonRealInvariant(PPTESError):
    """Invariant heeft een imaginair deel boven de tolerantie."""
    pass


class IndeterminateSymbol(PPTESError):
    """Invariant ligt binnen ε_symbol van 0 of 1."""

    def __init__(self, message: str, permutation: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.permutation = tuple(permutation) if permutation is not None else None


class DenominatorVanishes(PPTESError):
    """Noemer van een rationale afbeelding verdwijnt."""

    def __init__(self, factor: str, value: complex):
        super().__init__(f"Noemerfactor {factor} verdwijnt (waarde {value:.3e})")
        self.factor = factor
        self.value = value


class OutOfBox(PPTESError):
    """Kwadrupel ligt niet in het blok R = p×p×N×p."""
    pass


class RootMismatch(PPTESError):
    """Gesloten vormen van de kubische wortels wijken af van de numerieke wortels."""
    pass


# Defecten en reductiestappen

class NoPpPNNpOrdering(PPTESError, AssertionError):
    """Geen ordening met symbool ppPNNp gevonden (kan niet voor een PPTES van rang vier)."""
    pass


class ReconstructionFailed(PPTESError):
    """Interne equivalentiecontrole na reconstructie faalde."""
    pass


class NotEntangled(PPTESError):
    """Het bereik bevat een productvector; de toestand is separabel."""
    pass


class NotPPT(PPTESError):
    """De partiële transponering is niet positief semidefiniet."""
    pass


class DegenerateCombination(PPTESError):
    """Geen combinatie van blokken bereikt de vereiste normalisatie."""
    pass


# Exitcodes voor de CLI
INPUT_ERRORS = (
    StateFileError,
    InvalidParameter,
    InvalidState,
    DimensionMismatch,
    OutOfBox,
    UnsupportedClass,
    FixtureValidationError,
    NotPPT,
    NotEntangled,
)

INDETERMINATE_ERRORS = (
    IndeterminateSearch,
    IndeterminateSymbol,
    NonRealInvariant,
    DegenerateQuintuple,
    DenominatorVanishes,
    DegenerateCombination,
)
