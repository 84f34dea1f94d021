"""
JSON-toestandsbestanden lezen en schrijven.

Formaat:
    {"schema": 1, "dimA": 3, "dimB": 3, "rows": 9, "cols": 9,
     "entries": [[re, im], ...], "provenance": {...}}

Complexe getallen als [re, im], matrix row-major.
"""
from pathlib import Path
from typing import Any, Optional, Sequence
import json
import logging

import numpy as np

from ..config.settings import ToleranceProfile, settings
from ..core.errors import PPTESError, StateFileError
from ..core.product import ProductVector
from ..core.qmat import DIM_A, DIM_B, BipartiteState

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def round_significant(value: float, digits: Optional[int] = None) -> float:
    digits = digits or settings.significant_digits
    return float(f"{float(value):.{digits}g}")


def complex_to_json(z: complex, digits: Optional[int] = None) -> list[float]:
    z = complex(z)
    return [round_significant(z.real, digits), round_significant(z.imag, digits)]


def complex_from_json(value: Any) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    raise StateFileError(f"Ongeldig complex getal: {value!r}")


def to_jsonable(obj: Any, digits: Optional[int] = None) -> Any:
    """Zet resultaten (dicts, tuples, numpy-waarden) om naar JSON-typen."""
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v, digits) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist(), digits)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return complex_to_json(obj, digits)
    if isinstance(obj, (float, np.floating)):
        return round_significant(obj, digits)
    return obj


def matrix_to_json(m: np.ndarray, digits: Optional[int] = None) -> dict:
    m = np.asarray(m, dtype=complex)
    rows, cols = m.shape
    return {
        "rows": rows,
        "cols": cols,
        "entries": [complex_to_json(z, digits) for z in m.ravel()],
    }


def matrix_from_json(data: dict) -> np.ndarray:
    """
    Raises:
        StateFileError: ontbrekende velden of verkeerd aantal elementen
    """
    try:
        rows, cols = int(data["rows"]), int(data["cols"])
        entries = data["entries"]
    except (KeyError, TypeError, ValueError) as e:
        raise StateFileError(f"Matrix mist velden: {e}") from e
    if len(entries) != rows * cols:
        raise StateFileError(f"Verwacht {rows * cols} elementen, kreeg {len(entries)}")
    return np.array([complex_from_json(v) for v in entries], dtype=complex).reshape(rows, cols)


def product_vectors_to_json(vectors: Sequence[ProductVector]) -> list[dict]:
    return [v.to_dict() for v in vectors]


def product_vectors_from_json(data: Sequence[dict]) -> list[ProductVector]:
    try:
        return [ProductVector.from_dict(d) for d in data]
    except (KeyError, TypeError, ValueError) as e:
        raise StateFileError(f"Ongeldige productvectorlijst: {e}") from e


def state_to_json(rho: BipartiteState, provenance: Optional[dict] = None) -> dict:
    data = {"schema": SCHEMA_VERSION, "dimA": rho.dim_a, "dimB": rho.dim_b}
    data.update(matrix_to_json(rho.matrix))
    data["provenance"] = to_jsonable(provenance or {})
    return data


def state_from_json(data: dict, tol: Optional[ToleranceProfile] = None) -> BipartiteState:
    """
    Raises:
        StateFileError: onbekend schema, verkeerde dimensies of geen geldige toestand
    """
    if not isinstance(data, dict):
        raise StateFileError("Toestandsbestand moet een JSON-object zijn")
    if data.get("schema", SCHEMA_VERSION) != SCHEMA_VERSION:
        raise StateFileError(f"Onbekende schemaversie: {data.get('schema')}")
    dim_a, dim_b = int(data.get("dimA", DIM_A)), int(data.get("dimB", DIM_B))
    matrix = matrix_from_json(data)
    try:
        return BipartiteState.from_matrix(matrix, dim_a, dim_b, tol)
    except PPTESError as e:
        raise StateFileError(f"Geen geldige toestand: {e}") from e


def write_state_file(rho: BipartiteState, path: Optional[Path], provenance: Optional[dict] = None) -> str:
    """Schrijf naar `path`, of geef alleen de JSON-tekst terug als path None is."""
    text = json.dumps(state_to_json(rho, provenance), indent=settings.json_indent)
    if path is not None:
        path = Path(path)
        path.write_text(text + "\n", encoding="utf-8")
        logger.info(f"Toestand opgeslagen: {path}")
    return text


def read_state_file(path: Path, tol: Optional[ToleranceProfile] = None) -> BipartiteState:
    """
    Raises:
        StateFileError: bestand ontbreekt of is geen geldige toestand
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise StateFileError(f"Bestand niet gevonden: {path}") from e
    except json.JSONDecodeError as e:
        raise StateFileError(f"Ongeldige JSON in {path}: {e}") from e
    return state_from_json(data, tol)
