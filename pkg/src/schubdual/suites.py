"""Verification suites behind ``schubdual check``.

Each suite returns a list of :class:`PropertyResult`; a property fails with
up to ``MAX_EXAMPLES`` counterexamples attached.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .dualcore import (
    closed_form_outcome,
    dual_of,
    is_suitable_heights,
)
from .errors import MultipleMinima
from .octonion import (
    Octonion,
    left_mult_rank,
    oct_mul,
    oct_norm,
    quadric_point,
    random_null,
    random_octonion,
)
from .polarize import compute_h0, expected_h0
from .rootsys import A, E6, Case, Dspin, all_indices, bruhat_leq

MAX_EXAMPLES = 5
SUITES = ("biduality", "equivalence", "h0", "octonion")

# the thresholds checked when no space is given
H0_CASES = (A(2, 5), A(3, 7), A(3, 8), Dspin(1), Dspin(2), Dspin(3), E6(1), E6(3))


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, example: str):
        self.failures.append(example)

    def render(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'}  {self.name}  ({self.checked} checked"
        if self.ok:
            return head + ")"
        lines = [head + f", {len(self.failures)} failed)"]
        lines += [f"      {ex}" for ex in self.failures[:MAX_EXAMPLES]]
        if len(self.failures) > MAX_EXAMPLES:
            lines.append(f"      ... {len(self.failures) - MAX_EXAMPLES} more")
        return "\n".join(lines)


def _outcomes(case: Case, backend, exact):
    res = PropertyResult(f"{case}: unique lowest target")
    out = {}
    for idx in all_indices(case):
        res.checked += 1
        try:
            out[idx] = dual_of(case, idx, "oracle", backend, exact)
        except MultipleMinima as exc:
            res.fail(f"{idx}: {exc}")
    return out, res


def biduality(case: Case, backend=None, exact: bool = True) -> list[PropertyResult]:
    outs, minima = _outcomes(case, backend, exact)
    res = PropertyResult(f"{case}: oracle(oracle(w)) = w")
    seen = {}
    for idx, o in outs.items():
        if not o.suitable:
            continue
        res.checked += 1
        seen.setdefault(o.dual, []).append(idx)
        back = dual_of(o.dual.case, o.dual, "oracle", backend, exact)
        if not back.suitable:
            res.fail(f"{idx} -> {o.dual} -> unsuitable")
        elif back.dual != idx:
            res.fail(f"{idx} -> {o.dual} -> {back.dual}")
    inj = PropertyResult(f"{case}: dual map is injective", checked=len(seen))
    for d, srcs in seen.items():
        if len(srcs) > 1:
            inj.fail(f"{d} <- " + " | ".join(map(str, srcs)))
    return [minima, res, inj]


def equivalence(case: Case, backend=None, exact: bool = True) -> list[PropertyResult]:
    outs, minima = _outcomes(case, backend, exact)
    heights = PropertyResult(f"{case}: height bound <=> oracle suitable")
    for idx, o in outs.items():
        heights.checked += 1
        h = is_suitable_heights(case, idx)
        if h != o.suitable:
            heights.fail(f"{idx}: heights say {h}, oracle says {o.suitable}")
    results = [minima, heights]
    if case.family in ("A", "D"):
        cf = PropertyResult(f"{case}: closed form = oracle")
        for idx, o in outs.items():
            cf.checked += 1
            c = closed_form_outcome(case, idx)
            if c.suitable != o.suitable or c.dual != o.dual:
                cf.fail(f"{idx}: closed form {c.dual}, oracle {o.dual}")
        results.append(cf)
    else:
        top = PropertyResult(f"{case}: unique Bruhat-maximal suitable coset")
        good = [idx for idx, o in outs.items() if o.suitable]
        top.checked = len(good)
        maxima = [a for a in good if not any(a != b and bruhat_leq(a, b) for b in good)]
        if len(maxima) != 1:
            top.fail("maximal elements: " + " | ".join(map(str, maxima)))
        results.append(top)
    return results


def h0(cases=H0_CASES) -> list[PropertyResult]:
    out = []
    for case in cases:
        res = PropertyResult(f"{case}: h0 = {expected_h0(case)}", checked=1)
        got = compute_h0(case)
        if got != expected_h0(case):
            res.fail(f"computed {got}")
        out.append(res)
    return out


def octonion(seed: int = 0, pairs: int = 1000, nulls: int = 100) -> list[PropertyResult]:
    rng = random.Random(seed)
    norm = PropertyResult("N(ab) = N(a) N(b)", checked=pairs)
    quad = PropertyResult("quadric point satisfies t u = N(z)", checked=pairs)
    for _ in range(pairs):
        a, b = random_octonion(rng), random_octonion(rng)
        if oct_norm(oct_mul(a, b)) != oct_norm(a) * oct_norm(b):
            norm.fail(f"a={a.coords} b={b.coords}")
        pt = quadric_point(a, b)
        t, z, u = pt[0], pt[1:9], pt[9]
        if t * u != oct_norm(Octonion(z)):
            quad.fail(f"a={a.coords} b={b.coords}")
    rank = PropertyResult("rank of left multiplication by a null octonion is 4", checked=nulls)
    for _ in range(nulls):
        z = random_null(rng)
        if oct_norm(z) != 0 or left_mult_rank(z) != 4:
            rank.fail(f"z={z.coords} norm={oct_norm(z)} rank={left_mult_rank(z)}")
    return [norm, quad, rank]


def run(suite: str, case: Case | None = None, backend=None, exact: bool = True, seed: int = 0):
    if suite == "h0":
        return h0((case,) if case else H0_CASES)
    if suite == "octonion":
        return octonion(seed)
    if case is None:
        raise ValueError(f"suite {suite!r} needs a space")
    if suite == "biduality":
        return biduality(case, backend, exact)
    if suite == "equivalence":
        return equivalence(case, backend, exact)
    raise ValueError(f"unknown suite {suite!r}")
