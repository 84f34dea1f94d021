"""Config module."""
from .settings import (
    settings,
    Settings,
    ToleranceProfile,
    FinderConfig,
    resolve_tolerances,
    STATE_KIND_NAMES_NL,
    SYMBOL_LETTER_NAMES_NL,
)

__all__ = [
    "settings",
    "Settings",
    "ToleranceProfile",
    "FinderConfig",
    "resolve_tolerances",
    "STATE_KIND_NAMES_NL",
    "SYMBOL_LETTER_NAMES_NL",
]
