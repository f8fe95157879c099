"""Split octonions over the rationals, by Cayley-Dickson doubling.

Doubling (a, b)(c, d) = (ac + g * conj(d) b, d a + b conj(c)) with
N(a, b) = N(a) - g N(b) applied three times with g = -1, -1, +1 gives
complex numbers, Hamilton quaternions, then split octonions (the last
doubling makes the norm indefinite, so null vectors exist over Q).
The products of basis vectors are tabulated once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import Undefined

_GAMMAS = (-1, -1, 1)


def _cd_mul(x, y, gammas):
    n = len(x)
    if n == 1:
        return [x[0] * y[0]]
    h = n // 2
    g = gammas[-1]
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    rest = gammas[:-1]
    ac = _cd_mul(a, c, rest)
    dbar_b = _cd_mul(_cd_conj(d), b, rest)
    da = _cd_mul(d, a, rest)
    b_cbar = _cd_mul(b, _cd_conj(c), rest)
    return [p + g * q for p, q in zip(ac, dbar_b)] + [p + q for p, q in zip(da, b_cbar)]


def _cd_conj(x):
    return [x[0]] + [-v for v in x[1:]]


def _build_table():
    table = []
    for i in range(8):
        row = []
        for j in range(8):
            ei = [int(k == i) for k in range(8)]
            ej = [int(k == j) for k in range(8)]
            prod = _cd_mul(ei, ej, _GAMMAS)
            (k,) = [k for k, v in enumerate(prod) if v]
            row.append((k, prod[k]))
        table.append(tuple(row))
    return tuple(table)


# MUL[i][j] = (k, s) means e_i e_j = s e_k
MUL = _build_table()
# N(e_i): 1 on the Hamilton quaternions, -1 on the doubled half
NORM_SIGNS = (1, 1, 1, 1, -1, -1, -1, -1)


@dataclass(frozen=True)
class Octonion:
    coords: tuple

    def __post_init__(self):
        c = tuple(Fraction(x) for x in self.coords)
        if len(c) != 8:
            raise ValueError("an octonion has 8 coordinates")
        object.__setattr__(self, "coords", c)

    @classmethod
    def unit(cls) -> "Octonion":
        return cls((1, 0, 0, 0, 0, 0, 0, 0))

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    @classmethod
    def basis(cls, i: int) -> "Octonion":
        return cls(tuple(int(k == i) for k in range(8)))

    def __add__(self, other):
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        return Octonion(tuple(a * other for a in self.coords))

    def __rmul__(self, s):
        return Octonion(tuple(a * s for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    out = [Fraction(0)] * 8
    for i, x in enumerate(a.coords):
        if not x:
            continue
        row = MUL[i]
        for j, y in enumerate(b.coords):
            if y:
                k, s = row[j]
                out[k] += s * x * y
    return Octonion(tuple(out))


def oct_conj(a: Octonion) -> Octonion:
    c = a.coords
    return Octonion((c[0],) + tuple(-x for x in c[1:]))


def oct_norm(a: Octonion) -> Fraction:
    return sum((s * x * x for s, x in zip(NORM_SIGNS, a.coords)), Fraction(0))


def quadric_point(z1: Octonion, z2: Octonion) -> tuple[Fraction, ...]:
    """(N(z1), z1 conj(z2), N(z2)) as a 10-vector; satisfies t u = N(z)."""
    t = oct_norm(z1)
    z = oct_mul(z1, oct_conj(z2))
    u = oct_norm(z2)
    if t == 0 and u == 0 and z.is_zero():
        raise Undefined("the quadric map is undefined at this point")
    return (t,) + z.coords + (u,)


def left_mult_matrix(z: Octonion) -> sympy.Matrix:
    """Matrix of x -> z x in the standard basis (columns are z e_j)."""
    cols = [oct_mul(z, Octonion.basis(j)).coords for j in range(8)]
    return sympy.Matrix(8, 8, lambda i, j: sympy.Rational(cols[j][i].numerator, cols[j][i].denominator))


def left_mult_rank(z: Octonion) -> int:
    return left_mult_matrix(z).rank()


def random_octonion(rng, bound: int = 9) -> Octonion:
    """Random rational octonion with small numerators and denominators."""
    return Octonion(tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(8)))


def random_null(rng, bound: int = 9) -> Octonion:
    """A random non-zero octonion of norm zero.

    Takes (a, a c) with a a non-zero quaternion and c = y^2 / N(y) of unit norm,
    so N = N(a) - N(a) N(c) = 0.
    """

    def quat():
        while True:
            q = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(4)]
            if any(q):
                return q

    a, y = quat(), quat()
    ny = sum(x * x for x in y)
    y2 = _cd_mul(y, y, _GAMMAS[:2])
    c = [x / ny for x in y2]
    ac = _cd_mul(a, c, _GAMMAS[:2]) if rng.random() < 0.5 else _cd_mul(c, a, _GAMMAS[:2])
    return Octonion(tuple(a) + tuple(ac))
