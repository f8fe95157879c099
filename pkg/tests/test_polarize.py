"""Polarization rules, including the exact E6(3) rule against its polynomials."""

from collections import defaultdict
from itertools import combinations, combinations_with_replacement

import pytest
import sympy

from conftest import case_id
from schubdual.errors import WrongArity
from schubdual.labels import BLUE, KIND_A, KIND_D, KIND_E6_1, KIND_E6_3, RED, CotangentLabel
from schubdual.polarize import (
    apply_rule,
    compute_h0,
    expected_h0,
    polarization_e6p3,
    rule_a,
    rule_d,
    rule_e6p1,
    rule_e6p3,
    base_labels,
)
from schubdual.rootsys import A, E6, Dspin

P, M = 1, -1


def la(*pairs):
    return [CotangentLabel(KIND_A, p) for p in pairs]


def red(ij):
    return CotangentLabel(KIND_E6_3, (RED, ij // 10, ij % 10))


def blue(ij):
    return CotangentLabel(KIND_E6_3, (BLUE, ij // 10, ij % 10))


@pytest.mark.parametrize(
    "pairs,out",
    [(((2, 3), (4, 6), (5, 7)), (3, 6, 7)), (((2, 3), (4, 3), (5, 7)), None), (((2, 3), (2, 6), (5, 7)), None)],
)
def test_rule_a(pairs, out):
    assert rule_a(la(*pairs), 3) == out


@pytest.mark.parametrize("pairs,out", [(((1, 2), (3, 4)), 5), (((1, 2), (2, 4)), None), (((1, 3), (2, 5)), 4)])
def test_rule_d(pairs, out):
    assert rule_d([CotangentLabel(KIND_D, p) for p in pairs], 2) == out


def test_rule_e6p1():
    eta, eta2 = (P, P, M, M, P), (P, M, P, P, M)
    assert rule_e6p1(eta, eta2) == (1, 0, 0, 0, 0)
    assert rule_e6p1(eta, eta) is None
    assert rule_e6p1((P, M, P, P, M), (M, P, M, M, P)) is None


def test_arity():
    with pytest.raises(WrongArity):
        rule_a(la((1, 2)), 2)
    with pytest.raises(WrongArity):
        rule_e6p3([red(12)] * 5)
    with pytest.raises(WrongArity):
        apply_rule(E6(1), [CotangentLabel(KIND_E6_1, (P,) * 5)])


def test_e6p3_examples():
    taus = [red(34), red(25), red(34), blue(15), blue(24), blue(15)]
    assert (4, 5) in rule_e6p3(taus)
    assert (4, 5) in polarization_e6p3(taus)
    assert rule_e6p3([red(12)] * 6) == frozenset()
    assert polarization_e6p3([red(12)] * 6) == {}
    assert rule_e6p3([red(12)] * 3 + [blue(12)] * 3) == frozenset()


def test_apply_rule_dispatch():
    assert apply_rule(A(3, 8), la((2, 3), (4, 6), (5, 7))) == [(3, 6, 7)]
    assert apply_rule(Dspin(2), [CotangentLabel(KIND_D, (1, 2)), CotangentLabel(KIND_D, (2, 4))]) == []


# -- the exact E6(3) rule against the polynomials themselves


def _polynomial_table():
    """Coefficient of every degree-6 monomial in every Plucker coordinate.

    A point is a pair (A, B) of alternating 5x5 matrices (red entries, blue
    entries).  For rank 4 forms, ker A is spanned by the signed 4x4
    Pfaffians; the image plane is spanned by B k(A) and A k(B).
    """
    pairs = list(combinations(range(5), 2))
    a = {p: sympy.Symbol(f"a{p[0]}{p[1]}") for p in pairs}
    b = {p: sympy.Symbol(f"b{p[0]}{p[1]}") for p in pairs}

    def skew(sym):
        Mx = sympy.zeros(5, 5)
        for (i, j), s in sym.items():
            Mx[i, j], Mx[j, i] = s, -s
        return Mx

    def pf4(Mx, ix):
        p, q, r, s = ix
        return Mx[p, q] * Mx[r, s] - Mx[p, r] * Mx[q, s] + Mx[p, s] * Mx[q, r]

    def kernel(Mx):
        return [(-1) ** i * pf4(Mx, [j for j in range(5) if j != i]) for i in range(5)]

    Am, Bm = skew(a), skew(b)
    kA, kB = kernel(Am), kernel(Bm)
    u = [sympy.expand(sum(kA[i] * Bm[i, j] for i in range(5))) for j in range(5)]
    v = [sympy.expand(sum(kB[i] * Am[i, j] for i in range(5))) for j in range(5)]
    gens = [a[p] for p in pairs] + [b[p] for p in pairs]
    labels = [red(10 * (i + 1) + j + 1) for i, j in pairs] + [blue(10 * (i + 1) + j + 1) for i, j in pairs]
    table = defaultdict(dict)
    for m, n in pairs:
        poly = sympy.Poly(sympy.expand(u[m] * v[n] - u[n] * v[m]), *gens)
        for mon, coef in poly.terms():
            ms = tuple(sorted(lab for lab, e in zip(labels, mon) for _ in range(e)))
            table[ms][(m + 1, n + 1)] = int(coef)
    return labels, table


@pytest.fixture(scope="module")
def polynomials():
    return _polynomial_table()


def test_exact_rule_is_the_polynomial(polynomials):
    labels, table = polynomials
    checked = 0
    for ms in combinations_with_replacement(sorted(labels), 6):
        assert polarization_e6p3(ms) == table.get(ms, {}), ms
        checked += 1
    assert checked == 177100  # C(25, 6)


def test_unsigned_rule_overcounts(polynomials):
    labels, table = polynomials
    extra = 0
    for ms in combinations_with_replacement(sorted(labels), 6):
        exact = set(table.get(ms, {}))
        loose = rule_e6p3(ms)
        assert exact <= loose
        extra += len(loose - exact)
    assert extra > 0
    # two arrangements reach 12* here, with opposite signs
    taus = [red(15), red(25), red(34), blue(12), blue(12), blue(34)]
    assert rule_e6p3(taus) == {(1, 2)}
    assert polarization_e6p3(taus) == {}
    assert tuple(sorted(taus)) not in table


@pytest.mark.parametrize(
    "case,h0",
    [(A(2, 5), 3), (A(3, 7), 4), (A(3, 8), 5), (Dspin(1), 3), (Dspin(2), 5), (Dspin(3), 7), (E6(1), 8), (E6(3), 5)],
    ids=case_id,
)
def test_h0_table(case, h0):
    assert compute_h0(case) == h0 == expected_h0(case)
    assert compute_h0(case.dual()) == h0


@pytest.mark.parametrize("case,size", [(A(3, 7), 12), (Dspin(2), 10), (E6(1), 16), (E6(3), 20)], ids=case_id)
def test_base_labels_are_a_bijection(case, size):
    labels = [lab for _, lab, _ in base_labels(case)]
    assert len(labels) == len(set(labels)) == size


def test_e6p1_labels_are_the_even_half_spin_weights():
    signs = {lab.value for _, lab, _ in base_labels(E6(1))}
    assert all(sum(s < 0 for s in v) % 2 == 0 for v in signs)
    assert len(signs) == 2**4
