__all__ = [
    "load_feature_model",
    "DimacsInputConverter",
    "DimacsOutputConverter",
    "load_dimacs",
    "parse_dimacs",
    "save_dimacs",
    "write_dimacs",
    "load_sample",
    "read_sample",
    "save_sample",
    "write_sample",
    "UVLInputConverter",
    "load_feature_tree",
    "parse_feature_tree",
    "save_feature_tree",
    "write_feature_tree",
]

from multiwise.io._common import load_feature_model
from multiwise.io.dimacs import (
    DimacsInputConverter,
    DimacsOutputConverter,
    load_dimacs,
    parse_dimacs,
    save_dimacs,
    write_dimacs,
)
from multiwise.io.sample_file import load_sample, read_sample, save_sample, write_sample
from multiwise.io.uvl import (
    UVLInputConverter,
    load_feature_tree,
    parse_feature_tree,
    save_feature_tree,
    write_feature_tree,
)
