"""Closed-form duality maps for the classical cases.

Lists are 1-based strictly increasing tuples; sign sequences are tuples of
+1/-1.  Everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from .errors import BadParity, DegeneratePoint, InvalidParams, NotSuitable


def _check_list(l: Sequence[int], r: int, n: int) -> tuple[int, ...]:
    l = tuple(l)
    if not 1 <= r or 2 * r >= n:
        raise InvalidParams(f"need 1 <= r and 2r < n (got r={r}, n={n})")
    if len(l) != r or any(not 1 <= x <= n for x in l) or any(a >= b for a, b in zip(l, l[1:])):
        raise InvalidParams(f"{l} is not a strictly increasing {r}-list in 1..{n}")
    return l


def grassmann_suitable(l: Sequence[int], r: int, n: int) -> bool:
    l = _check_list(l, r, n)
    return all(li < n + 2 * i - 2 * r for i, li in enumerate(l, start=1))


def _grassmann_recursion(l: tuple[int, ...], n: int) -> list[int]:
    # l*_i = min{y : y > l*_{i-1}, y > l_i, y not in l}; may run past n
    taken = set(l)
    out, prev = [], 0
    for li in l:
        y = max(prev, li) + 1
        while y in taken:
            y += 1
        out.append(y)
        prev = y
    return out


def grassmann_dual(l: Sequence[int], r: int, n: int) -> tuple[int, ...]:
    l = _check_list(l, r, n)
    if not grassmann_suitable(l, r, n):
        raise NotSuitable(f"{l} is not suitable in G({r},{n})")
    return tuple(_grassmann_recursion(l, n))


def reverse_list(l: Sequence[int], n: int) -> tuple[int, ...]:
    """Image of a list under i -> n + 1 - i (the diagram automorphism)."""
    return tuple(sorted(n + 1 - x for x in l))


def grassmann_codual(lq: Sequence[int], r: int, n: int) -> tuple[int, ...]:
    """Dual of a Schubert variety of the dual Grassmannian, back on the original side."""
    return reverse_list(grassmann_dual(reverse_list(lq, n), r, n), n)


# ---------------------------------------------------------------- spinors


def _check_signs(eta: Sequence[int]) -> tuple[int, ...]:
    eta = tuple(eta)
    if len(eta) < 3 or len(eta) % 2 == 0 or any(x not in (1, -1) for x in eta):
        raise InvalidParams(f"expected 2p+1 signs (p >= 1), got {eta}")
    if sum(x == 1 for x in eta) % 2 == 0:
        raise BadParity(f"{eta} has an even number of + signs")
    return eta


def _plus(eta, upto):
    return sum(1 for x in eta[:upto] if x == 1)


def spinor_admissible(eta: Sequence[int]) -> bool:
    eta = _check_signs(eta)
    p = len(eta) // 2
    return all(_plus(eta, 2 * i) >= i for i in range(1, p + 1))


def flip(eta: Sequence[int], j: int) -> tuple[int, ...]:
    """phi(eta, j): change the sign at 1-based position j."""
    return tuple(-x if i == j else x for i, x in enumerate(eta, start=1))


def single_flip_leq(eta: Sequence[int], i: int, j: int) -> bool:
    """Bruhat comparison of the single flips phi(eta, i) <= phi(eta, j)."""
    a, b = eta[i - 1], eta[j - 1]
    if a == 1 and b == 1:
        return i <= j
    if a == 1 and b == -1:
        return True
    if a == -1 and b == -1:
        return i >= j
    return False


def spinor_dual_position(eta: Sequence[int]) -> int:
    """Position flipped by the spinor duality (1-based)."""
    eta = _check_signs(eta)
    if not spinor_admissible(eta):
        raise NotSuitable(f"{eta} is not admissible")
    p = len(eta) // 2
    for i in range(1, p + 2):
        if _plus(eta, 2 * i - 1) == i - 1:
            return 2 * i - 1
    m = len(eta)
    for i in range(1, m + 1):
        if all(_plus(eta, k) > k - _plus(eta, k) for k in range(i, m + 1)):
            return i
    raise AssertionError("no branch applies; admissibility check is inconsistent")


def spinor_dual(eta: Sequence[int]) -> tuple[int, ...]:
    return flip(eta, spinor_dual_position(eta))


def spinor_codual(eta_q: Sequence[int]) -> tuple[int, ...]:
    """Dual of a Schubert variety of the other spinor variety (flip the last sign around)."""
    eta_q = tuple(eta_q)
    return flip(spinor_dual(flip(eta_q, len(eta_q))), len(eta_q))


# ---------------------------------------------------------------- isotropic Grassmannians


def iso_suitable(eps: int, r: int, rank: int) -> bool:
    if eps not in (1, -1):
        raise InvalidParams("eps must be +1 or -1")
    if r < 1:
        raise InvalidParams("r must be positive")
    if eps == 1:
        return r <= rank
    return r % 2 == 0 and r <= rank


def _rat_matrix(rows) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows])


def _to_fractions(M: sympy.Matrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(int(x.p), int(x.q)) for x in M.row(i)) for i in range(M.rows))


@dataclass(frozen=True)
class BilinearFormSpec:
    epsilon: int
    matrix: tuple
    rank: int = field(init=False)

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise InvalidParams("epsilon must be +1 or -1")
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise InvalidParams("the form matrix must be square")
        for i in range(n):
            for j in range(n):
                if rows[j][i] != self.epsilon * rows[i][j]:
                    raise InvalidParams("matrix is not epsilon-symmetric")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "rank", _rat_matrix(rows).rank() if n else 0)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def sympy(self) -> sympy.Matrix:
        return _rat_matrix(self.matrix)


def coiso_dual(B: BilinearFormSpec, basis) -> tuple[tuple[Fraction, ...], ...]:
    """Basis of the B-orthogonal of the isotropic subspace spanned by ``basis``."""
    L = _rat_matrix(basis)  # rows span L
    r = L.rows
    if r == 0 or L.cols != B.dim:
        raise InvalidParams("basis vectors must be non-empty and of the form's dimension")
    if L.rank() != r:
        raise InvalidParams("basis vectors are linearly dependent")
    Bm = B.sympy()
    if not (L * Bm * L.T).is_zero_matrix:
        raise InvalidParams("subspace is not isotropic")
    if not iso_suitable(B.epsilon, r, B.rank):
        raise NotSuitable(f"r={r} is not suitable for eps={B.epsilon}, rank={B.rank}")
    forms = L * Bm  # row i is the functional B(l_i, -)
    if forms.rank() < r:
        raise DegeneratePoint("the subspace meets the kernel of the form")
    null = forms.nullspace()
    return _to_fractions(sympy.Matrix.hstack(*null).T) if null else ()
