"""Duality engine: the brute-force dual oracle and the suitability tests around it.

The oracle applies the polarization rule of the case to every multiset of
``d`` conormal labels and keeps the reached targets.  An empty
target set means the Schubert variety is not suitable; otherwise the unique
lowest target (moved to the point's own frame) names the dual variety.

Two frames are available.  The *fixed* frame works at the torus-fixed point
of the cell itself (types A and D, labels written down from the index).  The
*base* frame works at the base point with labels read off the root system and
transports the lowest target by the coset representative; it handles every
case and is the only one for E6.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closedform import (
    single_flip_leq,
    flip,
    grassmann_codual,
    grassmann_dual,
    grassmann_suitable,
    spinor_admissible,
    spinor_codual,
    spinor_dual,
)
from .errors import InvalidParams, MultipleMinima, NotSuitable
from .labels import KIND_A, KIND_D, CotangentLabel
from .polarize import base_labels, compute_h0, reach, target_weights
from .quiver import build_hasse, subquiver_qw
from .rootsys import (
    Case,
    SchubertIndex,
    WeightVec,
    act,
    all_indices,
    build_root_datum,
    coset_element,
    extreme_weight_to_coset,
    index_weight,
    is_negative,
    transport_index,
    transport_weight,
    weight_leq,
)


@dataclass(frozen=True)
class DualityOutcome:
    suitable: bool
    dual: SchubertIndex | None = None
    lowest_weight: WeightVec | None = None
    witness: tuple[CotangentLabel, ...] | None = None

    def __post_init__(self):
        if self.suitable != (self.dual is not None):
            raise ValueError("dual must be present exactly when suitable")


UNSUITABLE = DualityOutcome(False)


def _unique_min(items, leq):
    mins = [a for a in items if all(leq(a, b) for b in items)]
    if len(mins) != 1:
        raise MultipleMinima(f"no unique lowest target among {len(items)} candidates")
    return mins[0]


# ---------------------------------------------------------------- labels


def _fixed_labels(idx: SchubertIndex) -> list[CotangentLabel]:
    c = idx.case
    if c.family == "A":
        l = set(idx.data)
        return [
            CotangentLabel(KIND_A, (x, y))
            for x in sorted(l)
            for y in range(x + 1, c.n + 1)
            if y not in l
        ]
    eta = idx.data
    return [
        CotangentLabel(KIND_D, (i, j))
        for i in range(1, c.n + 1)
        for j in range(i + 1, c.n + 1)
        if eta[i - 1] == 1
    ]


def _base_conormal(idx: SchubertIndex):
    w = coset_element(idx)
    return [(g, lab) for g, lab, _ in base_labels(idx.case) if not is_negative(act(w, g))], w


def conormal_labels(case: Case, idx: SchubertIndex, frame: str = "auto") -> tuple[CotangentLabel, ...]:
    """Labels of the conormal weights of the Schubert cell at its frame point.

    Mirror-side indices are first moved by the diagram automorphism.
    """
    _check(case, idx)
    if not case.p_side:
        return conormal_labels(case.dual(), transport_index(idx), frame)
    frame = _frame(case, frame)
    if frame == "fixed":
        return tuple(sorted(_fixed_labels(idx)))
    return tuple(sorted(lab for _, lab in _base_conormal(idx)[0]))


def _frame(case: Case, frame: str) -> str:
    if frame == "auto":
        return "base" if case.family == "E6" else "fixed"
    if frame == "fixed" and case.family == "E6":
        raise InvalidParams("the fixed frame is only implemented for types A and D")
    if frame not in ("fixed", "base"):
        raise InvalidParams(f"unknown frame {frame!r}")
    return frame


def _check(case: Case, idx: SchubertIndex):
    if idx.case != case:
        from .errors import CaseMismatch

        raise CaseMismatch(f"index belongs to {idx.case}, not {case}")


# ---------------------------------------------------------------- oracle


def dual_schubert_oracle(
    case: Case, idx: SchubertIndex, frame: str = "auto", backend=None, exact: bool = True
) -> DualityOutcome:
    """Dual Schubert variety by enumeration of polarizations.

    ``exact=False`` switches E6(3) to the cancellation-free rule; it exists to
    exhibit the cosets where that rule gives a wrong dual.
    """
    _check(case, idx)
    if not case.p_side:
        out = dual_schubert_oracle(case.dual(), transport_index(idx), frame, backend, exact)
        if not out.suitable:
            return out
        return DualityOutcome(
            True,
            transport_index(out.dual),
            transport_weight(out.lowest_weight, case.family, case.rank),
            out.witness,
        )
    if _frame(case, frame) == "fixed":
        return _oracle_fixed(idx, backend)
    return _oracle_base(idx, backend, exact)


def _oracle_base(idx: SchubertIndex, backend, exact=True) -> DualityOutcome:
    case = idx.case
    rows, w = _base_conormal(idx)
    labels = [lab for _, lab in rows]
    codes, wit = reach(case, labels, backend, exact)
    if len(codes) == 0:
        return UNSUITABLE
    tw = target_weights(case)
    by_weight = {tw[int(c)]: k for k, c in enumerate(codes)}
    mu1 = _unique_min(list(by_weight), weight_leq)
    final = act(w, mu1)
    dual = extreme_weight_to_coset(case.dual(), final)
    witness = tuple(labels[i] for i in wit[by_weight[mu1]])
    return DualityOutcome(True, dual, final, witness)


def _oracle_fixed(idx: SchubertIndex, backend) -> DualityOutcome:
    case = idx.case
    labels = _fixed_labels(idx)
    codes, wit = reach(case, labels, backend)
    if len(codes) == 0:
        return UNSUITABLE
    if case.family == "A":
        lists = {tuple(q + 1 for q in range(case.n) if c >> q & 1): k for k, c in enumerate(codes)}
        best = _unique_min(list(lists), lambda a, b: all(x <= y for x, y in zip(a, b)))
        dual = SchubertIndex(case.dual(), best)
        k = lists[best]
    else:
        eta = idx.data
        pos = {int(c) + 1: k for k, c in enumerate(codes)}
        j = _unique_min(list(pos), lambda i, j: single_flip_leq(eta, i, j))
        dual = SchubertIndex(case.dual(), flip(eta, j))
        k = pos[j]
    witness = tuple(labels[i] for i in wit[k])
    return DualityOutcome(True, dual, index_weight(dual), witness)


# ---------------------------------------------------------------- closed forms and heights


def closed_form_suitable(case: Case, idx: SchubertIndex) -> bool:
    _check(case, idx)
    c, data = (case, idx.data) if case.p_side else (case.dual(), transport_index(idx).data)
    if c.family == "A":
        return grassmann_suitable(data, c.r, c.n)
    if c.family == "D":
        return spinor_admissible(data)
    raise InvalidParams("no closed form for E6; use the oracle")


def closed_form_outcome(case: Case, idx: SchubertIndex) -> DualityOutcome:
    if not closed_form_suitable(case, idx):
        return UNSUITABLE
    if case.family == "A":
        fn = grassmann_dual if case.p_side else grassmann_codual
        data = fn(idx.data, case.r, case.n)
    else:
        data = (spinor_dual if case.p_side else spinor_codual)(idx.data)
    dual = SchubertIndex(case.dual(), data)
    return DualityOutcome(True, dual, index_weight(dual), None)


def is_suitable_heights(case: Case, idx: SchubertIndex) -> bool:
    _check(case, idx)
    q = build_hasse(build_root_datum(case))
    qw = subquiver_qw(q, idx)
    return max((q.heights[v] for v in qw), default=0) <= compute_h0(case) - 1


METHODS = ("oracle", "closed-form")


def dual_of(
    case: Case, idx: SchubertIndex, method: str = "oracle", backend=None, exact: bool = True
) -> DualityOutcome:
    if method == "oracle":
        return dual_schubert_oracle(case, idx, backend=backend, exact=exact)
    if method == "closed-form":
        return closed_form_outcome(case, idx)
    raise InvalidParams(f"unknown method {method!r}")


def enumerate_suitable(
    case: Case, method: str = "oracle", backend=None, exact: bool = True
) -> list[tuple[SchubertIndex, DualityOutcome]]:
    """Outcome for every coset of the case, in (length, index) order.

    Raises TooLarge beyond ``rootsys.MAX_COSETS`` cosets.
    """
    return [(idx, dual_of(case, idx, method, backend, exact)) for idx in all_indices(case)]


def require_dual(case: Case, idx: SchubertIndex, method: str = "oracle") -> SchubertIndex:
    out = dual_of(case, idx, method)
    if not out.suitable:
        raise NotSuitable(f"{idx} is not suitable in {case}")
    return out.dual
