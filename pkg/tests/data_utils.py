__all__ = [
    "get_data_path",
    "PATH_CAR_UVL",
    "PATH_TABLE1_GROUPS",
    "PATH_TABLE1_GROUPS_YAML",
    "PATH_VOID_DIMACS",
]

from pathlib import Path

_PATH_TO_DATA = Path(__file__).parent / "data" / "multiwise"
PATH_CAR_UVL = _PATH_TO_DATA / "car.uvl"
PATH_TABLE1_GROUPS = _PATH_TO_DATA / "table1.json"
PATH_TABLE1_GROUPS_YAML = _PATH_TO_DATA / "table1.yml"
PATH_VOID_DIMACS = _PATH_TO_DATA / "void.dimacs"


def get_data_path(name):
    return _PATH_TO_DATA / name
