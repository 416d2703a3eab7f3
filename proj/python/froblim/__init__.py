"""Exact-arithmetic invariants of the mirror family of weighted projective
spaces: spectra, Birkhoff normal forms, pairings and the limit Frobenius
structures at x = 0. All values are exact rationals rendered as "p/q" strings.
"""

from ._core import (
    __version__,
    check,
    connection_matrices,
    jordan_data,
    limit_manifold,
    log_report,
    preprimitive,
    run,
    spectrum,
)

__all__ = [
    "__version__",
    "check",
    "connection_matrices",
    "jordan_data",
    "limit_manifold",
    "log_report",
    "preprimitive",
    "run",
    "spectrum",
]
