"""Spectra of the PT-symmetric Hamiltonians p^2 + x^(2M) (ix)^eps."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    BranchCutError,
    ConvergenceError,
    DomainError,
    Error,
    ModelSpec,
    OverflowError,
    UnsupportedError,
)
