"""Dual Schubert varieties for the four fundamental pairs of flag varieties.

Start with :func:`dual_of` for one coset or :func:`enumerate_suitable` for a
whole space; the closed forms live in :mod:`schubdual.closedform`.
"""

from .closedform import grassmann_dual, grassmann_suitable, spinor_admissible, spinor_dual
from .dualcore import DualityOutcome, dual_of, dual_schubert_oracle, enumerate_suitable, is_suitable_heights
from .errors import SchubDualError
from .rootsys import A, E6, Case, Dspin, SchubertIndex, parse_index

__version__ = "0.1.0"

__all__ = [
    "A",
    "Case",
    "Dspin",
    "DualityOutcome",
    "E6",
    "SchubDualError",
    "SchubertIndex",
    "dual_of",
    "dual_schubert_oracle",
    "enumerate_suitable",
    "grassmann_dual",
    "grassmann_suitable",
    "is_suitable_heights",
    "parse_index",
    "spinor_admissible",
    "spinor_dual",
]
