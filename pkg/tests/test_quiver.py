import json
import re

import pytest

from conftest import CASES, case_id
from schubdual.errors import UnknownFormat
from schubdual.quiver import build_hasse, emit, is_order_ideal, subquiver_qw
from schubdual.rootsys import (
    A,
    E6,
    Dspin,
    SchubertIndex,
    all_indices,
    build_root_datum,
    coset_element,
    index_from_word,
    length,
)


def quiver(case):
    return build_hasse(build_root_datum(case))


COMINUSCULE = [c for c, _ in CASES if c != E6(3)]


def dim(case):
    """dim G/P from the classical formulas."""
    if case.family == "A":
        return case.r * (case.n - case.r)
    if case.family == "D":
        return case.n * (case.n - 1) // 2
    return 16


def coxeter_number(case):
    return {"A": case.rank + 1, "D": 2 * case.rank - 2, "E6": 12}[case.family]


@pytest.mark.parametrize("case", COMINUSCULE, ids=case_id)
def test_size_and_top_height(case):
    q = quiver(case)
    assert len(q) == dim(case)
    # the top vertex is the highest root, of height h - 1
    assert q.h_max == coxeter_number(case) - 1


def test_e6_node3_keeps_the_degree_one_part():
    # C^2 (x) wedge^2 C^5 under the Levi A1 x A4; the 5 roots of degree 2 are left out
    assert len(quiver(E6(3))) == 2 * 10


@pytest.mark.parametrize("case, top", [(A(3, 7), 6), (Dspin(2), 7), (E6(1), 11), (E6(3), 8)], ids=str)
def test_top_height_table(case, top):
    assert quiver(case).h_max == top


@pytest.mark.parametrize("n", [3, 5, 8])
def test_projective_space_is_a_chain(n):
    q = quiver(A(1, n))
    assert len(q) == n - 1
    assert sorted(q.heights) == list(range(1, n))
    assert len(q.arrows) == n - 2


@pytest.mark.parametrize("case", [c for c, _ in CASES], ids=case_id)
def test_graded(case):
    q = quiver(case)
    for u, v in q.arrows:
        assert q.heights[u] == q.heights[v] + 1
    targets = {u for u, _ in q.arrows}
    minimal = {i for i in range(len(q)) if i not in targets}
    assert minimal == {i for i in range(len(q)) if q.heights[i] == 1}


@pytest.mark.parametrize("case", [c for c, _ in CASES], ids=case_id)
def test_qw_is_an_order_ideal(case):
    q = quiver(case)
    d = build_root_datum(case)
    for idx in all_indices(case):
        qw = subquiver_qw(q, idx)
        assert is_order_ideal(q, qw)
        n = length(d, coset_element(idx))
        assert len(qw) == n if case in COMINUSCULE else len(qw) <= n


def test_extremes():
    c = A(3, 8)
    q = quiver(c)
    assert subquiver_qw(q, SchubertIndex(c, (1, 2, 3))) == frozenset()
    assert subquiver_qw(q, SchubertIndex(c, (6, 7, 8))) == frozenset(range(len(q)))


def test_example_ideal():
    c = E6(1)
    q = quiver(c)
    qw = subquiver_qw(q, index_from_word(c, (6, 5, 4, 3, 1)))
    assert len(qw) == 5
    assert is_order_ideal(q, qw)
    dot = emit(q, qw, "dot")
    assert len(re.findall(r"^\s+v\d+ \[label=", dot, re.M)) == 16
    assert dot.count("fillcolor") == 5


def test_ascii_chain():
    out = emit(quiver(A(1, 3)), None, "ascii")
    assert out.splitlines() == ["h2 |  (1,3)", "h1 |  (1,2)"]


@pytest.mark.parametrize("case", [A(3, 7), Dspin(2), E6(3)], ids=case_id)
def test_json_self_consistent(case):
    q = quiver(case)
    doc = json.loads(emit(q, None, "json"))
    assert len(doc["vertices"]) == len(q)
    assert [v["id"] for v in doc["vertices"]] == list(range(len(q)))
    assert doc["marked"] == []


def test_dot_is_well_formed():
    c = Dspin(2)
    q = quiver(c)
    idx = SchubertIndex(c, (1, -1, -1, 1, 1))
    dot = emit(q, subquiver_qw(q, idx), "dot")
    assert dot.startswith('digraph "Dspin(2)" {') and dot.rstrip().endswith("}")
    assert dot.count("{") == dot.count("}")
    assert dot.count("->") == len(q.arrows)


def test_unknown_format():
    with pytest.raises(UnknownFormat):
        emit(quiver(A(1, 3)), None, "svg")
