"""
Configuratie instellingen voor pptes-rank4.

Toleranties en finder-parameters komen uit drie lagen:
defaults hieronder, daarna tolerances.yaml, daarna omgevingsvariabelen
(optioneel uit een .env bestand).
"""
from pathlib import Path
from dataclasses import dataclass, fields, replace
from typing import Optional
import logging
import os

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)


# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent.parent

# Config files
CONFIG_DIR = PROJECT_ROOT / "src" / "config"
TOLERANCES_CONFIG = CONFIG_DIR / "tolerances.yaml"

# Omgevingsvariabelen die toleranties overschrijven
ENV_OVERRIDES = {
    "PPTES_TOL_RANK": "eps_rank",
    "PPTES_TOL_PSD": "eps_psd",
    "PPTES_TOL_MATCH": "eps_match",
    "PPTES_TOL_SYMBOL": "eps_symbol",
}


@dataclass(frozen=True)
class ToleranceProfile:
    """Numerieke toleranties (allemaal relatief, allemaal > 0)."""
    eps_rank: float = 1e-9      # singuliere waarde cutoff t.o.v. sigma_max
    eps_psd: float = 1e-9       # eigenwaarde-ondergrens t.o.v. ||rho||
    eps_match: float = 1e-6     # vergelijken van invarianten
    eps_symbol: float = 1e-7    # minimale afstand tot {0, 1} voor een symbool

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not value > 0:
                # lokale import: errors importeert niets uit config
                from ..core.errors import InvalidParameter
                raise InvalidParameter(f"Tolerantie {f.name} moet > 0 zijn, kreeg {value}")

    def with_overrides(self, **overrides) -> "ToleranceProfile":
        """Kopie met alleen de opgegeven (niet-None) waarden vervangen."""
        values = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **values) if values else self


@dataclass(frozen=True)
class FinderConfig:
    """Parameters van de productvectorzoeker."""
    newton_max_iter: int = 50
    infinite_samples: int = 20       # steekproeven voor de Infinite-detectie
    dedup_tol: float = 1e-8          # projectieve afstand voor duplicaten
    candidate_tol: float = 1e-3      # losse drempel voor kandidaten uit de resultant
    residual_tol: float = 1e-10      # eindcontrole <w_j|a⊗b>
    resultant_samples: int = 32      # eenheidswortels voor de resultant-fit
    chart_seed: int = 20120611       # vaste unitaire kaartrotatie


@dataclass
class Settings:
    """Applicatie-brede instellingen."""

    tolerances: ToleranceProfile = None
    finder: FinderConfig = None

    # Uitvoer
    significant_digits: int = 12
    json_indent: int = 2

    def __post_init__(self):
        if self.tolerances is None:
            self.tolerances = ToleranceProfile()
        if self.finder is None:
            self.finder = FinderConfig()

    @classmethod
    def load(cls, path: Optional[Path] = None, use_env: bool = True) -> "Settings":
        """
        Laad instellingen uit YAML en omgevingsvariabelen.

        Args:
            path: YAML bestand (default: TOLERANCES_CONFIG)
            use_env: Ook PPTES_* omgevingsvariabelen toepassen

        Returns:
            Settings instantie
        """
        path = path or TOLERANCES_CONFIG
        config = {}

        if path.exists():
            with open(path, "r", encoding="utf-8") as f:
                config = yaml.safe_load(f) or {}
        else:
            logger.debug(f"Geen tolerantieconfig gevonden: {path}")

        tolerances = ToleranceProfile(**config.get("tolerances", {}))
        finder = FinderConfig(**config.get("finder", {}))
        output = config.get("output", {})

        if use_env:
            load_dotenv()
            overrides = {}
            for env_name, attr in ENV_OVERRIDES.items():
                raw = os.getenv(env_name)
                if raw:
                    overrides[attr] = float(raw)
            tolerances = tolerances.with_overrides(**overrides)
            if os.getenv("PPTES_SEED"):
                finder = replace(finder, chart_seed=int(os.getenv("PPTES_SEED")))

        return cls(
            tolerances=tolerances,
            finder=finder,
            significant_digits=int(output.get("significant_digits", 12)),
            json_indent=int(output.get("json_indent", 2)),
        )


def resolve_tolerances(tol: Optional[ToleranceProfile]) -> ToleranceProfile:
    """Gebruik de meegegeven toleranties of de globale defaults."""
    return tol if tol is not None else settings.tolerances


# Singleton instance
settings = Settings.load()


# Toestandsfamilies in het Nederlands (CLI uitvoer)
STATE_KIND_NAMES_NL = {
    "omega": "Canonieke vorm ω(a,b,c,d)",
    "checkerboard": "Checkerboard normaalvorm (u,v)",
    "checkerboard-raw": "Algemene checkerboard toestand",
    "choi": "Choi familie ρ_λ",
    "upb-pyramid": "UPB-complement (Pyramid)",
    "upb-tiles": "UPB-complement (Tiles)",
}

# Symboolletters
SYMBOL_LETTER_NAMES_NL = {
    "p": "(0, 1)",
    "P": "(1, ∞)",
    "N": "(−∞, 0)",
}
