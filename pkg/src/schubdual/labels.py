"""Cotangent labels: naming lattice roots by their Levi-restricted weights.

Every root gamma with coefficient 1 on the marked node spans one weight
space of the cotangent space at the base point.  The polarization rules are
stated in Levi coordinates, so each such root gets a short combinatorial
label:

* A(r, n):  epsilon_x - epsilon_y   ->  pair (x, y), x <= r < y
* Dspin(p): epsilon_i + epsilon_j   ->  pair (i, j)
* E6(1):    Levi D5, half-spin weight  ->  five signs, even number of minus
* E6(3):    Levi A1 x A4, e_a (x) f_i ^ f_j  ->  colour plus pair {i, j}

Mirror (Q-side) cases are named through the diagram automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .rootsys import Case, WeightVec, build_root_datum, transport_weight, weight_to_eps

KIND_A, KIND_D, KIND_E6_1, KIND_E6_3 = 0, 1, 2, 3
# the E6(3) rule without sign cancellation, kept for comparison
KIND_E6_3_UNSIGNED = 4
RED, BLUE = 1, 0

_H = Fraction(1, 2)
# fundamental weights of D5 and A4 in epsilon coordinates
_D5_FUND = (
    (1, 0, 0, 0, 0),
    (1, 1, 0, 0, 0),
    (1, 1, 1, 0, 0),
    (_H, _H, _H, _H, -_H),
    (_H,) * 5,
)
_A4_FUND = tuple(
    tuple(Fraction(int(i < k)) - Fraction(k, 5) for i in range(5)) for k in range(1, 5)
)
# Levi simple roots, listed so that their Bourbaki order matches the Levi's.
_LEVI_E6_1 = (6, 5, 4, 3, 2)
_LEVI_E6_3 = (6, 5, 4, 2)


@dataclass(frozen=True, order=True)
class CotangentLabel:
    kind: int
    value: tuple

    def __str__(self) -> str:
        if self.kind in (KIND_A, KIND_D):
            return f"({self.value[0]},{self.value[1]})"
        if self.kind == KIND_E6_1:
            return "(" + "".join("+" if s > 0 else "-" for s in self.value) + ")"
        color, i, j = self.value
        return f"{i}{j}" if color == RED else f"_{i}{j}"

    @property
    def code(self) -> tuple[int, int]:
        """Two-integer encoding consumed by the enumeration kernels."""
        if self.kind in (KIND_A, KIND_D):
            return self.value
        if self.kind == KIND_E6_1:
            return (sum(1 << q for q, s in enumerate(self.value) if s > 0), 0)
        color, i, j = self.value
        return (color, (1 << (i - 1)) | (1 << (j - 1)))


def kind_of(case: Case) -> int:
    if case.family == "A":
        return KIND_A
    if case.family == "D":
        return KIND_D
    return KIND_E6_1 if case.marked in (1, 6) else KIND_E6_3


def _levi_eps(datum, lam, nodes, fund):
    """Levi epsilon coordinates of a weight (from its Levi Dynkin labels)."""
    labels = datum.cartan @ np.asarray(lam)
    out = [Fraction(0)] * len(fund[0])
    for t, node in enumerate(nodes):
        a = Fraction(int(labels[node - 1]), datum.denom)
        for q in range(len(out)):
            out[q] += a * fund[t][q]
    return out


def _pair_positions(eps, value):
    return tuple(q + 1 for q, e in enumerate(eps) if e == value)


def _to_p_side(case: Case, v: WeightVec) -> tuple[Case, WeightVec]:
    if case.p_side:
        return case, tuple(v)
    return case.dual(), transport_weight(v, case.family, case.rank)


@lru_cache(maxsize=None)
def root_label(case: Case, gamma: WeightVec) -> CotangentLabel:
    """Label of a marked-coefficient-1 positive root at the base point."""
    case, gamma = _to_p_side(case, gamma)
    kind = kind_of(case)
    datum = build_root_datum(case)
    if kind in (KIND_A, KIND_D):
        eps = weight_to_eps(case, gamma)
        if kind == KIND_A:
            x = _pair_positions(eps, max(eps))
            y = _pair_positions(eps, min(eps))
            return CotangentLabel(kind, (x[0], y[0]))
        return CotangentLabel(kind, _pair_positions(eps, 1))
    if kind == KIND_E6_1:
        eps = _levi_eps(datum, gamma, _LEVI_E6_1, _D5_FUND)
        return CotangentLabel(kind, tuple(1 if e > 0 else -1 for e in eps))
    eps = _levi_eps(datum, gamma, _LEVI_E6_3, _A4_FUND)
    color = RED if datum.coeff(gamma, 1) == 1 else BLUE
    return CotangentLabel(kind, (color,) + _pair_positions(eps, Fraction(3, 5)))


@lru_cache(maxsize=None)
def target_code(case: Case, t: WeightVec) -> int:
    """Kernel code of a target weight in the W_P-orbit of the dual highest weight.

    A: bitmask of the y-indices; D: 0-based position of the flipped sign;
    E6(1): 2 * position + (1 if +epsilon else 0); E6(3): bitmask of the pair.
    """
    case, t = _to_p_side(case, t)
    kind = kind_of(case)
    datum = build_root_datum(case)
    if kind == KIND_A:
        eps = weight_to_eps(case, t)
        return sum(1 << q for q, e in enumerate(eps) if e < 0)
    if kind == KIND_D:
        eps = weight_to_eps(case, t)
        (q,) = [q for q, e in enumerate(eps) if e < 0]
        return q
    if kind == KIND_E6_1:
        eps = _levi_eps(datum, t, _LEVI_E6_1, _D5_FUND)
        (q,) = [q for q, e in enumerate(eps) if e != 0]
        return 2 * q + int(eps[q] > 0)
    eps = _levi_eps(datum, t, _LEVI_E6_3, _A4_FUND)
    return sum(1 << q for q, e in enumerate(eps) if e == Fraction(3, 5))


def code_count(case: Case) -> tuple[int, int]:
    """(number of target codes, bit width used by the kernel)."""
    kind = kind_of(case)
    if kind == KIND_A:
        return 1 << case.n, case.n
    if kind == KIND_D:
        return case.n, case.n
    if kind == KIND_E6_1:
        return 10, 5
    return 32, 5
