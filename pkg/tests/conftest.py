from math import comb

import pytest

from schubdual.rootsys import A, E6, Dspin

# the desk-scale cases, with their coset counts computed independently
# (binomials, 2^(2p) sign vectors of odd parity, |W(E6)| / |W_P|)
W_E6 = 51840
CASES = [
    *[(A(r, n), comb(n, r)) for n in range(3, 9) for r in range(1, 4) if 2 * r < n],
    *[(Dspin(p), 2 ** (2 * p)) for p in (1, 2, 3)],
    (E6(1), W_E6 // 1920),  # Levi D5
    (E6(3), W_E6 // (2 * 120)),  # Levi A1 x A4
]

SMALL = [A(2, 5), A(3, 7), Dspin(2), E6(1)]


def case_id(c):
    return str(c)


@pytest.fixture(params=[c for c, _ in CASES], ids=case_id)
def case(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
