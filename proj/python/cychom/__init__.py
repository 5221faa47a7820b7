"""Exact verification of cyclic-action ring identities and Tate quotients."""

from ._core import (
    DEFAULT_SEED,
    CychomError,
    Family,
    FreePoly,
    InputError,
    MathError,
    Outcome,
    Report,
    Ring,
    __version__,
    cohomology,
    ring_verify,
    special_case,
    verify_universal,
)

__all__ = [
    "DEFAULT_SEED",
    "CychomError",
    "Family",
    "FreePoly",
    "InputError",
    "MathError",
    "Outcome",
    "Report",
    "Ring",
    "__version__",
    "cohomology",
    "ring_verify",
    "special_case",
    "verify_universal",
]
