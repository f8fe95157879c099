import pytest

from conftest import CASES, case_id
from schubdual.closedform import grassmann_suitable, spinor_admissible
from schubdual.dualcore import (
    UNSUITABLE,
    DualityOutcome,
    closed_form_outcome,
    conormal_labels,
    dual_of,
    dual_schubert_oracle,
    enumerate_suitable,
    is_suitable_heights,
    require_dual,
)
from schubdual.errors import CaseMismatch, InvalidParams, NotSuitable
from schubdual.labels import KIND_D, CotangentLabel
from schubdual.rootsys import (
    A,
    E6,
    Dspin,
    SchubertIndex,
    all_indices,
    index_from_word,
    index_weight,
    transport_index,
)

P, M = 1, -1
CLASSICAL = [c for c, _ in CASES if c.family != "E6"]
ALL = [c for c, _ in CASES]


def test_example_e6_node1():
    c = E6(1)
    out = dual_schubert_oracle(c, index_from_word(c, (6, 5, 4, 3, 1)))
    assert out.suitable
    assert out.dual.case == E6(6)
    assert out.dual.data == (1, 3, 4, 5, 6)
    assert out.lowest_weight == index_weight(out.dual)
    assert sorted(str(t) for t in out.witness) == ["(++--+)", "(--+++)"]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_dual_of_a_point_is_a_hyperplane_class(n):
    c = A(1, n)
    out = dual_schubert_oracle(c, SchubertIndex(c, (1,)))
    assert out.dual == SchubertIndex(A(1, n, dual=True), (2,))


def test_worked_array_by_oracle():
    c = A(3, 8)
    out = dual_schubert_oracle(c, SchubertIndex(c, (2, 4, 5)))
    assert out.dual.data == (3, 6, 7)
    assert len(out.witness) == 3


def test_conormal_examples():
    c = A(3, 8)
    assert conormal_labels(c, SchubertIndex(c, (6, 7, 8))) == ()
    d = Dspin(2)
    labs = conormal_labels(d, SchubertIndex(d, (M, M, P, P, P)))
    assert labs == tuple(CotangentLabel(KIND_D, p) for p in [(3, 4), (3, 5), (4, 5)])
    assert len(conormal_labels(E6(1), SchubertIndex(E6(1), ()))) == 16


@pytest.mark.parametrize("case", CLASSICAL, ids=case_id)
def test_frames_agree(case):
    for idx in all_indices(case):
        a = dual_schubert_oracle(case, idx, "fixed")
        b = dual_schubert_oracle(case, idx, "base")
        assert (a.suitable, a.dual) == (b.suitable, b.dual)


@pytest.mark.parametrize("case", ALL, ids=case_id)
def test_height_extremes(case):
    idxs = all_indices(case)
    assert is_suitable_heights(case, idxs[0])
    assert not is_suitable_heights(case, idxs[-1])


def test_heights_worked_array():
    assert is_suitable_heights(A(3, 8), SchubertIndex(A(3, 8), (2, 4, 5)))


@pytest.mark.parametrize("case", ALL, ids=case_id)
def test_heights_iff_oracle(case):
    for idx, out in enumerate_suitable(case):
        assert is_suitable_heights(case, idx) == out.suitable, idx


@pytest.mark.parametrize("case", CLASSICAL, ids=case_id)
def test_closed_form_equals_oracle(case):
    for idx in all_indices(case):
        cf, orc = closed_form_outcome(case, idx), dual_schubert_oracle(case, idx)
        assert cf.suitable == orc.suitable
        assert cf.dual == orc.dual
        if case.family == "A":
            assert cf.suitable == grassmann_suitable(idx.data, case.r, case.n)
        else:
            assert cf.suitable == spinor_admissible(idx.data)


@pytest.mark.parametrize("case", CLASSICAL, ids=case_id)
def test_closed_form_on_mirror_side(case):
    mirror = case.dual()
    for idx in all_indices(mirror):
        cf, orc = closed_form_outcome(mirror, idx), dual_schubert_oracle(mirror, idx)
        assert (cf.suitable, cf.dual) == (orc.suitable, orc.dual)


@pytest.mark.parametrize("case", ALL, ids=case_id)
def test_biduality(case):
    duals = set()
    for idx, out in enumerate_suitable(case):
        if out.suitable:
            back = dual_schubert_oracle(out.dual.case, out.dual)
            assert back.suitable and back.dual == idx
            duals.add(out.dual)
    assert len(duals) == sum(o.suitable for _, o in enumerate_suitable(case))


@pytest.mark.parametrize("case", ALL, ids=case_id)
def test_mirror_side_is_the_transport(case):
    for idx in all_indices(case)[:40]:
        a = dual_schubert_oracle(case, idx)
        b = dual_schubert_oracle(case.dual(), transport_index(idx))
        assert a.suitable == b.suitable
        if a.suitable:
            assert transport_index(a.dual) == b.dual


def test_spinor_boundary_example():
    # (+,+,-,-,+): the flip position is read off the oracle
    c = Dspin(2)
    idx = SchubertIndex(c, (P, P, M, M, P))
    assert dual_schubert_oracle(c, idx).dual.data == (P, P, M, M, M)
    assert closed_form_outcome(c, idx).dual.data == (P, P, M, M, M)


def test_unsigned_e6_rule_breaks_biduality():
    """Ignoring sign cancellation gives a map that is not an involution."""
    c = E6(3)
    bad, duals = [], {}
    for idx in all_indices(c):
        out = dual_schubert_oracle(c, idx, exact=False)
        if not out.suitable:
            continue
        duals.setdefault(out.dual, []).append(idx)
        back = dual_schubert_oracle(out.dual.case, out.dual, exact=False)
        if back.dual != idx:
            bad.append(idx)
    assert len(bad) == 8
    assert any(len(v) > 1 for v in duals.values())
    assert index_from_word(c, (6, 5, 4, 3)) in bad
    # the suitable set itself is unchanged
    assert sum(len(v) for v in duals.values()) == 60


@pytest.mark.parametrize("case", CLASSICAL, ids=case_id)
def test_enumerate_methods_agree(case):
    a = enumerate_suitable(case, "oracle")
    b = enumerate_suitable(case, "closed-form")
    assert [(i, o.dual) for i, o in a] == [(i, o.dual) for i, o in b]


def test_errors():
    c = A(3, 8)
    with pytest.raises(CaseMismatch):
        dual_schubert_oracle(A(2, 5), SchubertIndex(c, (1, 2, 3)))
    with pytest.raises(InvalidParams):
        dual_schubert_oracle(E6(1), SchubertIndex(E6(1), ()), frame="fixed")
    with pytest.raises(InvalidParams):
        dual_of(c, SchubertIndex(c, (1, 2, 3)), method="guess")
    with pytest.raises(InvalidParams):
        closed_form_outcome(E6(1), SchubertIndex(E6(1), ()))
    with pytest.raises(NotSuitable):
        require_dual(c, SchubertIndex(c, (6, 7, 8)))
    with pytest.raises(ValueError):
        DualityOutcome(True)
    assert not UNSUITABLE.suitable
