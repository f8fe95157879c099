"""Polarization non-vanishing rules and the threshold height h0.

The ``rule_*`` functions are the readable reference versions of the rules;
bulk enumeration goes through :mod:`schubdual._kernels`, which the test-suite
checks against these.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from . import _kernels
from .errors import WrongArity
from .labels import (
    BLUE,
    KIND_A,
    KIND_D,
    KIND_E6_1,
    KIND_E6_3,
    KIND_E6_3_UNSIGNED,
    RED,
    CotangentLabel,
    code_count,
    kind_of,
    root_label,
    target_code,
)
from .rootsys import Case, WeightVec, build_root_datum

__all__ = [
    "CotangentLabel",
    "rule_a",
    "rule_d",
    "rule_e6p1",
    "rule_e6p3",
    "polarization_e6p3",
    "apply_rule",
    "base_labels",
    "target_weights",
    "compute_h0",
    "expected_h0",
    "reach",
]


def _pairs(taus):
    return [t.value if isinstance(t, CotangentLabel) else tuple(t) for t in taus]


def rule_a(taus, r: int):
    """Sorted y-list if the 2r indices of the labels are pairwise distinct."""
    pairs = _pairs(taus)
    if len(pairs) != r:
        raise WrongArity(f"expected {r} labels, got {len(pairs)}")
    flat = [i for pr in pairs for i in pr]
    if len(set(flat)) != len(flat):
        return None
    return tuple(sorted(y for _, y in pairs))


def rule_d(taus, p: int):
    """The one index of 1..2p+1 missed by p pairwise disjoint pairs."""
    pairs = _pairs(taus)
    if len(pairs) != p:
        raise WrongArity(f"expected {p} labels, got {len(pairs)}")
    flat = [i for pr in pairs for i in pr]
    if len(set(flat)) != len(flat):
        return None
    (m,) = set(range(1, 2 * p + 2)) - set(flat)
    return m


def rule_e6p1(eta, eta2):
    """eta + eta' (in Levi epsilon units) when the signs agree in one place."""
    a = eta.value if isinstance(eta, CotangentLabel) else tuple(eta)
    b = eta2.value if isinstance(eta2, CotangentLabel) else tuple(eta2)
    if len(a) != 5 or len(b) != 5:
        raise WrongArity("E6(1) labels have five signs")
    if sum(x == y for x, y in zip(a, b)) != 1:
        return None
    return tuple((x + y) // 2 for x, y in zip(a, b))


def rule_e6p3(taus) -> frozenset:
    """All pairs {u', v'} reachable by some arrangement of the red/blue triples.

    Arrangements are counted without sign, so a pair can be reported although
    its coefficient cancels; :func:`polarization_e6p3` is the exact version.
    """
    taus = list(taus)
    if len(taus) != 6:
        raise WrongArity(f"expected 6 labels, got {len(taus)}")
    vals = [t.value for t in taus]
    red = [frozenset(v[1:]) for v in vals if v[0] == RED]
    blue = [frozenset(v[1:]) for v in vals if v[0] == BLUE]
    if len(red) != 3:
        return frozenset()
    full = frozenset(range(1, 6))
    found = set()
    for r1, r2, r3 in permutations(red):
        if r1 & r2:
            continue
        (u,) = full - r1 - r2
        for b1, b2, b3 in permutations(blue):
            if b1 & b2:
                continue
            (v,) = full - b1 - b2
            if u not in b3 or v not in r3:
                continue
            (u2,) = b3 - {u}
            (v2,) = r3 - {v}
            if u2 != v2:
                found.add(tuple(sorted((u2, v2))))
    return frozenset(found)


def _matching_sign(p1, p2) -> int:
    # sign of the term p1 * p2 in the Pfaffian of the 4x4 minor on p1 | p2
    (a1, b1), (a2, b2) = sorted([tuple(sorted(p1)), tuple(sorted(p2))])
    return -1 if a1 < a2 < b1 < b2 else 1


def polarization_e6p3(taus) -> dict:
    """Exact coefficients of the degree-6 polarization, keyed by target pair.

    Write a point of the 20-dimensional space as two alternating forms
    (A, B) on a 5-space.  Its image is spanned by B(ker A, -) and A(ker B, -),
    whose Plucker coordinates are sextic polynomials.  The kernel of a rank-4
    form is the vector of signed 4x4 Pfaffians, so each monomial coefficient
    is a signed count of the arrangements accepted by :func:`rule_e6p3`.
    Arrangements may cancel; only non-zero coefficients are returned.
    """
    taus = list(taus)
    if len(taus) != 6:
        raise WrongArity(f"expected 6 labels, got {len(taus)}")
    vals = [t.value for t in taus]
    red = [frozenset(v[1:]) for v in vals if v[0] == RED]
    blue = [frozenset(v[1:]) for v in vals if v[0] == BLUE]
    if len(red) != 3:
        return {}
    full = frozenset(range(1, 6))

    def halves(triple):
        # (pfaffian pair, third label), one per distinct choice of the third
        for third in set(triple):
            rest = list(triple)
            rest.remove(third)
            if not rest[0] & rest[1]:
                yield rest, third

    coef = {}
    for (r1, r2), r3 in halves(red):
        (u,) = full - r1 - r2
        for (b1, b2), b3 in halves(blue):
            (v,) = full - b1 - b2
            if u not in b3 or v not in r3:
                continue
            (u2,) = b3 - {u}
            (v2,) = r3 - {v}
            if u2 == v2:
                continue
            su = (-1) ** (u - 1) * _matching_sign(r1, r2) * (1 if u < u2 else -1)
            sv = (-1) ** (v - 1) * _matching_sign(b1, b2) * (1 if v < v2 else -1)
            key = tuple(sorted((u2, v2)))
            coef[key] = coef.get(key, 0) + (su * sv if u2 < v2 else -su * sv)
    return {k: c for k, c in coef.items() if c}


def apply_rule(case: Case, taus) -> list:
    """Dispatch to the rule of the case; returns the list of reached targets."""
    kind = kind_of(case)
    if kind == KIND_A:
        t = rule_a(taus, case.r)
    elif kind == KIND_D:
        t = rule_d(taus, case.p)
    elif kind == KIND_E6_1:
        if len(taus) != 2:
            raise WrongArity("E6(1) polarizations take two labels")
        t = rule_e6p1(*taus)
    else:
        return sorted(polarization_e6p3(taus))
    return [] if t is None else [t]


# ---------------------------------------------------------------- base frame


@lru_cache(maxsize=None)
def base_labels(case: Case) -> tuple[tuple[WeightVec, CotangentLabel, int], ...]:
    """(root, label, height) for every cotangent weight at the base point."""
    datum = build_root_datum(case)
    k = case.marked
    return tuple(
        (g, root_label(case, g), datum.height(g))
        for g in datum.positive_roots
        if datum.coeff(g, k) == 1
    )


@lru_cache(maxsize=None)
def target_weights(case: Case) -> dict:
    """code -> weight for the W_P-orbit of the dual highest weight."""
    datum = build_root_datum(case)
    mu0 = datum.fundamental_weights[case.dual().marked - 1]
    k = case.marked - 1
    C = datum.cartan
    seen = {mu0}
    frontier = [mu0]
    while frontier:
        nxt = []
        for lam in frontier:
            v = np.asarray(lam)
            pr = C @ v
            for i in range(case.rank):
                if i == k or pr[i] == 0:
                    continue
                w = v.copy()
                w[i] -= pr[i]
                t = tuple(int(x) for x in w)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    out = {}
    for t in seen:
        c = target_code(case, t)
        if c in out:
            raise AssertionError(f"target code {c} is not injective on the orbit")
        out[c] = t
    return out


def _label_codes(labels) -> np.ndarray:
    return np.array([lab.code for lab in labels], dtype=np.int64).reshape(-1, 2)


def reach(case: Case, labels, backend=None, exact: bool = True):
    """Kernel enumeration over d-multisets of the labels: (codes, witnesses).

    ``exact=False`` runs the E6(3) rule without sign cancellation.
    """
    ncodes, nbits = code_count(case)
    kind = kind_of(case)
    if kind == KIND_E6_3 and not exact:
        kind = KIND_E6_3_UNSIGNED
    return _kernels.enumerate_targets(kind, _label_codes(labels), case.degree, ncodes, nbits, backend)


@lru_cache(maxsize=None)
def compute_h0(case: Case) -> int:
    """Largest h such that labels of height >= h alone admit a non-vanishing rule."""
    if not case.p_side:
        return compute_h0(case.dual())
    rows = base_labels(case)
    for h in range(max(ht for _, _, ht in rows), 0, -1):
        labels = [lab for _, lab, ht in rows if ht >= h]
        codes, _ = reach(case, labels)
        if len(codes):
            return h
    return 0


def expected_h0(case: Case) -> int:
    """Tabulated threshold, used only for cross-checks."""
    c = case if case.p_side else case.dual()
    if c.family == "A":
        return max(c.r, c.n - c.r)
    if c.family == "D":
        return 2 * c.p + 1
    return 8 if c.marked == 1 else 5
