__all__ = [
    "compile_to_cnf",
    "Configuration",
    "PartialConfiguration",
    "Selection",
    "InputConverter",
    "OutputConverter",
    "CapExceededError",
    "ExperimentRunError",
    "ModelParseError",
    "SampleFormatError",
    "UnknownFeatureError",
    "UnsatisfiableConfigurationError",
    "VoidModelError",
    "FeatureModel",
    "And",
    "Expr",
    "FeatureChild",
    "FeatureNode",
    "FeatureTree",
    "GroupKind",
    "Iff",
    "Implies",
    "Not",
    "Or",
    "Var",
    "Operation",
    "OperationDescription",
    "derive_seed",
    "generate_id",
]

from multiwise.core.cnf import compile_to_cnf
from multiwise.core.configuration import Configuration, PartialConfiguration, Selection
from multiwise.core.conversion import InputConverter, OutputConverter
from multiwise.core.errors import (
    CapExceededError,
    ExperimentRunError,
    ModelParseError,
    SampleFormatError,
    UnknownFeatureError,
    UnsatisfiableConfigurationError,
    VoidModelError,
)
from multiwise.core.feature_model import FeatureModel
from multiwise.core.feature_tree import (
    And,
    Expr,
    FeatureChild,
    FeatureNode,
    FeatureTree,
    GroupKind,
    Iff,
    Implies,
    Not,
    Or,
    Var,
)
from multiwise.core.operation import Operation, OperationDescription
from multiwise.core.seeding import derive_seed, generate_id
