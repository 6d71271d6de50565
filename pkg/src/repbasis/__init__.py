"""Exact representation functions of integer sets, their inverse
constructions, and brute-force cross-verification."""

from .construct import TargetFn
from .errors import (
    BudgetError,
    CongruenceError,
    DegenerateError,
    HeadCountError,
    InternalError,
    InvalidGadget,
    NoRootError,
    RepbasisError,
    SparsityError,
    TruncationError,
)
from .intset import DensityProfile, EventuallyPeriodicSet, FiniteIntSet
from .polyring import LaurentPoly
from .repfn import RepTable

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CongruenceError",
    "DegenerateError",
    "DensityProfile",
    "EventuallyPeriodicSet",
    "FiniteIntSet",
    "HeadCountError",
    "InternalError",
    "InvalidGadget",
    "LaurentPoly",
    "NoRootError",
    "RepTable",
    "RepbasisError",
    "SparsityError",
    "TargetFn",
    "TruncationError",
    "__version__",
]
