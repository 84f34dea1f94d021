"""Output modules: JSON-toestandsbestanden."""
from .state_files import (
    SCHEMA_VERSION,
    matrix_from_json,
    matrix_to_json,
    product_vectors_from_json,
    product_vectors_to_json,
    read_state_file,
    state_from_json,
    state_to_json,
    to_jsonable,
    write_state_file,
)

__all__ = [
    "SCHEMA_VERSION",
    "matrix_from_json",
    "matrix_to_json",
    "product_vectors_from_json",
    "product_vectors_to_json",
    "read_state_file",
    "state_from_json",
    "state_to_json",
    "to_jsonable",
    "write_state_file",
]
