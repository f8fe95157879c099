"""Root data and the Weyl group action; cosets W/W_P with their Schubert indices.

Weights are integer tuples over the simple-root basis, scaled by a fixed
per-case denominator (``n`` for A_{n-1}, 4 for D, 3 for E6).  With that
scaling the root order ``mu <= nu`` is a coordinatewise integer check.

Three families are supported, each with a marked node:

* ``A(r, n)``      Grassmannian of r-planes, node r (the mirror uses n - r)
* ``Dspin(p)``     spinor variety of D_{2p+1}, node 2p+1 (mirror: 2p)
* ``E6(k)``        k in {1, 3} with mirrors 6 and 5
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np
import sympy

from .errors import InvalidParams, NotExtreme, ParseError, CaseMismatch, BadParity

WeightVec = tuple  # tuple[int, ...], scaled simple-root coordinates

# --------------------------------------------------------------------------
# cases


@dataclass(frozen=True)
class Case:
    family: str  # "A" | "D" | "E6"
    rank: int
    marked: int  # Bourbaki node number, 1-based

    def __post_init__(self):
        f, m, k = self.family, self.rank, self.marked
        if f == "A":
            n = m + 1
            if m < 2 or not 1 <= k <= m or 2 * k == n:
                raise InvalidParams(f"bad type A data: rank={m}, node={k}")
        elif f == "D":
            if m < 3 or m % 2 == 0 or k not in (m - 1, m):
                raise InvalidParams(f"bad spinor data: rank={m}, node={k}")
        elif f == "E6":
            if m != 6 or k not in (1, 3, 5, 6):
                raise InvalidParams(f"E6 node must be one of 1, 3, 5, 6 (got {k})")
        else:
            raise InvalidParams(f"unknown family {f!r}")

    # -- derived parameters
    @property
    def n(self) -> int:
        """Dimension of the defining representation (A, D only)."""
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def r(self) -> int:
        if self.family == "A":
            return min(self.marked, self.n - self.marked)
        if self.family == "D":
            return self.rank // 2
        raise InvalidParams("r is defined for type A and D only")

    @property
    def p(self) -> int:
        return self.r

    @property
    def p_side(self) -> bool:
        if self.family == "A":
            return 2 * self.marked < self.n
        if self.family == "D":
            return self.marked == self.rank
        return self.marked in (1, 3)

    def dual(self) -> "Case":
        perm = diagram_automorphism(self.family, self.rank)
        return Case(self.family, self.rank, perm[self.marked - 1] + 1)

    @property
    def degree(self) -> int:
        """Number of cotangent labels fed to one polarization."""
        if self.family in ("A", "D"):
            return self.r
        return 2 if self.marked in (1, 6) else 6

    @property
    def spec(self) -> str:
        """CLI spelling (always of the P-side member)."""
        c = self if self.p_side else self.dual()
        if c.family == "A":
            return f"a:{c.r},{c.n}"
        if c.family == "D":
            return f"d:{c.p}"
        return f"e6:{c.marked}"

    def __str__(self) -> str:
        star = "" if self.p_side else "*"
        if self.family == "A":
            return f"A{star}({self.r},{self.n})"
        if self.family == "D":
            return f"Dspin{star}({self.p})"
        return f"E6({self.marked})"


def A(r: int, n: int, dual: bool = False) -> Case:
    if r < 1 or 2 * r >= n:
        raise InvalidParams(f"need 1 <= r and 2r < n (got r={r}, n={n})")
    return Case("A", n - 1, n - r if dual else r)


def Dspin(p: int, dual: bool = False) -> Case:
    if p < 1:
        raise InvalidParams(f"need p >= 1 (got {p})")
    m = 2 * p + 1
    return Case("D", m, m - 1 if dual else m)


def E6(k: int) -> Case:
    return Case("E6", 6, k)


def diagram_automorphism(family: str, rank: int) -> tuple[int, ...]:
    """0-based node permutation exchanging the two marked nodes of each family."""
    if family == "A":
        return tuple(rank - 1 - i for i in range(rank))
    if family == "D":
        return tuple(range(rank - 2)) + (rank - 1, rank - 2)
    return (5, 1, 4, 3, 2, 0)


# --------------------------------------------------------------------------
# root data


def cartan_matrix(family: str, rank: int) -> np.ndarray:
    C = 2 * np.eye(rank, dtype=np.int64)
    if family == "E6":
        edges = [(1, 3), (3, 4), (2, 4), (4, 5), (5, 6)]
    elif family == "A":
        edges = [(i, i + 1) for i in range(1, rank)]
    else:
        edges = [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    for a, b in edges:
        C[a - 1, b - 1] = C[b - 1, a - 1] = -1
    return C


@dataclass(frozen=True, eq=False)
class RootDatum:
    case: Case
    cartan: np.ndarray
    denom: int
    simple_roots: tuple[WeightVec, ...]
    positive_roots: tuple[WeightVec, ...]  # sorted by (height, coords)
    fundamental_weights: tuple[WeightVec, ...]

    @property
    def rank(self) -> int:
        return self.case.rank

    @property
    def marked(self) -> int:
        return self.case.marked

    @property
    def highest_weight(self) -> WeightVec:
        return self.fundamental_weights[self.marked - 1]

    def height(self, v: Sequence[int]) -> int:
        """Height of a root (sum of its simple-root coefficients)."""
        return sum(v) // self.denom

    def coeff(self, v: Sequence[int], node: int) -> int:
        return v[node - 1] // self.denom

    def pair(self, lam: Sequence[int], beta: Sequence[int]) -> int:
        """<lam, beta^vee> times denom (beta must be a root)."""
        b = np.asarray(beta) // self.denom
        return int(np.asarray(lam) @ (self.cartan @ b))

    def reflect(self, beta: Sequence[int], lam: Sequence[int]) -> WeightVec:
        b = np.asarray(beta) // self.denom
        return tuple(int(x) for x in np.asarray(lam) - self.pair(lam, beta) * b)


_DENOM = {"D": 4, "E6": 3}


@lru_cache(maxsize=None)
def _root_tables(family: str, rank: int):
    C = cartan_matrix(family, rank)
    denom = rank + 1 if family == "A" else _DENOM[family]
    inv = sympy.Matrix(C.tolist()).inv() * denom
    if any(x.q != 1 for x in inv):
        raise AssertionError("denominator does not clear the inverse Cartan matrix")
    fund = tuple(tuple(int(x) for x in inv.row(i)) for i in range(rank))

    simple = [tuple(denom * int(i == j) for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            a = np.asarray(v)
            for i in range(rank):
                w = a.copy()
                w[i] -= (C[i] @ a)
                t = tuple(int(x) for x in w)
                if t not in roots:
                    roots.add(t)
                    nxt.append(t)
        frontier = nxt
    pos = sorted((v for v in roots if min(v) >= 0), key=lambda v: (sum(v), v))
    C.setflags(write=False)
    return C, denom, tuple(simple), tuple(pos), fund


@lru_cache(maxsize=None)
def build_root_datum(case: Case) -> RootDatum:
    C, denom, simple, pos, fund = _root_tables(case.family, case.rank)
    return RootDatum(case, C, denom, simple, pos, fund)


def is_negative(v: Sequence[int]) -> bool:
    return max(v) <= 0 and min(v) < 0


def weight_leq(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """Root order: nu - mu is a non-negative combination of simple roots."""
    return all(b >= a for a, b in zip(mu, nu))


def transport_weight(v: Sequence[int], family: str, rank: int) -> WeightVec:
    perm = diagram_automorphism(family, rank)
    out = [0] * rank
    for i, x in enumerate(v):
        out[perm[i]] = x
    return tuple(out)


# --------------------------------------------------------------------------
# Weyl group elements


@dataclass(frozen=True, eq=False)
class WeylElement:
    matrix: np.ndarray
    word: tuple[int, ...] | None = None

    def __eq__(self, other):
        return isinstance(other, WeylElement) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.matrix.tobytes())

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(self.matrix @ other.matrix, word)

    def inverse(self) -> "WeylElement":
        word = None if self.word is None else self.word[::-1]
        inv = np.rint(np.linalg.inv(self.matrix)).astype(np.int64)
        return WeylElement(inv, word)


def identity(datum: RootDatum) -> WeylElement:
    return WeylElement(np.eye(datum.rank, dtype=np.int64), ())


def simple_reflection(datum: RootDatum, i: int) -> WeylElement:
    M = np.eye(datum.rank, dtype=np.int64)
    M[i - 1, :] -= datum.cartan[i - 1]
    return WeylElement(M, (i,))


def from_word(datum: RootDatum, word: Iterable[int]) -> WeylElement:
    word = tuple(word)
    M = np.eye(datum.rank, dtype=np.int64)
    for i in word:
        if not 1 <= i <= datum.rank:
            raise InvalidParams(f"node {i} out of range 1..{datum.rank}")
        M = M @ simple_reflection(datum, i).matrix
    return WeylElement(M, word)


def act(w: WeylElement, v: Sequence[int]) -> WeightVec:
    return tuple(int(x) for x in w.matrix @ np.asarray(v, dtype=np.int64))


def inversion_roots(datum: RootDatum, w: WeylElement) -> frozenset:
    """Positive roots sent to negative roots by w."""
    return frozenset(g for g in datum.positive_roots if is_negative(act(w, g)))


def length(datum: RootDatum, w: WeylElement) -> int:
    return len(inversion_roots(datum, w))


def canonical_word(datum: RootDatum, lam: Sequence[int]) -> tuple[int, ...]:
    """Lex-smallest reduced word of the minimal rep sending omega to lam.

    Peels the smallest left descent at each step; for a minimal coset
    representative the left descents are the nodes where lam pairs negatively.
    """
    C = datum.cartan
    v = np.asarray(lam, dtype=np.int64).copy()
    target = np.asarray(datum.highest_weight)
    word = []
    while not np.array_equal(v, target):
        pr = C @ v
        neg = np.flatnonzero(pr < 0)
        if neg.size == 0:
            raise NotExtreme(f"{tuple(lam)} is not in the orbit of the highest weight")
        i = int(neg[0])
        v[i] -= pr[i]
        word.append(i + 1)
        if len(word) > len(datum.positive_roots):
            raise NotExtreme(f"{tuple(lam)} is not in the orbit of the highest weight")
    return tuple(word)


def min_coset_rep(datum: RootDatum, w: WeylElement) -> WeylElement:
    """Minimal-length representative of w W_P (P = parabolic of the marked node)."""
    return from_word(datum, canonical_word(datum, act(w, datum.highest_weight)))


# --------------------------------------------------------------------------
# coset tables

# Largest coset count the exhaustive tables will build.
MAX_COSETS = 20_000


def coset_count(case: Case) -> int:
    if case.family == "A":
        return comb(case.n, case.r)
    if case.family == "D":
        return 2 ** (2 * case.p)
    return 27 if case.marked in (1, 6) else 216


@dataclass(frozen=True, eq=False)
class CosetTable:
    datum: RootDatum
    weights: tuple[WeightVec, ...]  # deterministic order: (length, index)
    lengths: dict
    position: dict

    def __len__(self):
        return len(self.weights)


@lru_cache(maxsize=None)
def coset_table(case: Case) -> CosetTable:
    """All cosets W/W_P, found by BFS on the orbit of the marked weight."""
    from .errors import TooLarge

    if coset_count(case) > MAX_COSETS:
        raise TooLarge(f"{case} has {coset_count(case)} cosets (limit {MAX_COSETS})")
    datum = build_root_datum(case)
    C = datum.cartan
    start = datum.highest_weight
    lengths = {start: 0}
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        v = np.asarray(lam)
        pr = C @ v
        for i in np.flatnonzero(pr > 0):
            w = v.copy()
            w[i] -= pr[i]
            t = tuple(int(x) for x in w)
            if t not in lengths:
                lengths[t] = lengths[lam] + 1
                queue.append(t)
    keyed = sorted(lengths, key=lambda t: (lengths[t], weight_to_index(case, t).data))
    return CosetTable(datum, tuple(keyed), lengths, {t: i for i, t in enumerate(keyed)})


@lru_cache(maxsize=None)
def bruhat_upsets(case: Case) -> dict:
    """Map each coset weight to the set of coset weights above it in Bruhat order.

    Generated by lam -> s_beta(lam) whenever <lam, beta^vee> > 0.
    """
    table = coset_table(case)
    datum = table.datum
    succ = {}
    for lam in table.weights:
        succ[lam] = [datum.reflect(b, lam) for b in datum.positive_roots if datum.pair(lam, b) > 0]
    up = {}
    for lam in sorted(table.weights, key=lambda t: -table.lengths[t]):
        s = {lam}
        for mu in succ[lam]:
            s |= up[mu]
        up[lam] = frozenset(s)
    return up


def bruhat_leq(a: "SchubertIndex", b: "SchubertIndex") -> bool:
    if a.case != b.case:
        raise CaseMismatch("indices belong to different cases")
    return index_weight(b) in bruhat_upsets(a.case)[index_weight(a)]


# --------------------------------------------------------------------------
# epsilon coordinates (classical families)


def _simple_roots_eps(case: Case) -> list[list[int]]:
    m, n = case.rank, case.n
    rows = []
    for i in range(m):
        e = [0] * n
        if case.family == "D" and i == m - 1:
            e[m - 2] = e[m - 1] = 1
        else:
            e[i], e[i + 1] = 1, -1
        rows.append(e)
    return rows


@lru_cache(maxsize=None)
def _fund_eps(family: str, rank: int) -> tuple:
    """Fundamental weights in epsilon coordinates."""
    if family == "A":
        n = rank + 1
        return tuple(
            tuple(Fraction(int(i < k)) - Fraction(k, n) for i in range(n)) for k in range(1, n)
        )
    m = rank
    h = Fraction(1, 2)
    rows = [tuple(Fraction(int(i < k)) for i in range(m)) for k in range(1, m - 1)]
    rows.append(tuple([h] * (m - 1) + [-h]))
    rows.append(tuple([h] * m))
    return tuple(rows)


def eps_to_weight(case: Case, eps: Sequence) -> WeightVec:
    """Scaled simple-root coordinates of sum eps_i * epsilon_i."""
    datum = build_root_datum(case)
    out = []
    for w in _fund_eps(case.family, case.rank):
        c = datum.denom * sum(Fraction(a) * b for a, b in zip(eps, w))
        if c.denominator != 1:
            raise NotExtreme(f"{tuple(eps)} is not in the weight lattice")
        out.append(int(c))
    return tuple(out)


def weight_to_eps(case: Case, v: Sequence[int]) -> tuple[Fraction, ...]:
    datum = build_root_datum(case)
    out = [Fraction(0)] * case.n
    for c, row in zip(v, _simple_roots_eps(case)):
        for i, x in enumerate(row):
            out[i] += Fraction(c * x, datum.denom)
    return tuple(out)


# --------------------------------------------------------------------------
# Schubert indices


@dataclass(frozen=True)
class SchubertIndex:
    """A coset of W/W_P, spelled the classical way.

    ``data`` is an increasing tuple of integers (type A), a tuple of +1/-1
    signs (type D), or the lex-smallest reduced word of the minimal coset
    representative (E6).
    """

    case: Case
    data: tuple

    def __post_init__(self):
        c, d = self.case, tuple(self.data)
        object.__setattr__(self, "data", d)
        if c.family == "A":
            if len(d) != c.r:
                raise CaseMismatch(f"{c} needs {c.r} indices, got {len(d)}")
            if any(not 1 <= x <= c.n for x in d) or any(a >= b for a, b in zip(d, d[1:])):
                raise InvalidParams(f"indices must be strictly increasing in 1..{c.n}: {d}")
        elif c.family == "D":
            if len(d) != c.n:
                raise CaseMismatch(f"{c} needs {c.n} signs, got {len(d)}")
            if any(x not in (1, -1) for x in d):
                raise InvalidParams(f"signs must be +1/-1: {d}")
            plus = sum(x == 1 for x in d)
            odd = (plus if c.p_side else c.n - plus) % 2 == 1
            if not odd:
                side = "+" if c.p_side else "-"
                raise BadParity(f"{c} needs an odd number of {side!r} signs")
        else:
            if any(not 1 <= x <= 6 for x in d):
                raise InvalidParams(f"E6 nodes are 1..6: {d}")
            datum = build_root_datum(c)
            lam = act(from_word(datum, d), datum.highest_weight)
            if canonical_word(datum, lam) != d:
                raise InvalidParams(f"{d} is not the canonical reduced word of its coset")

    @property
    def kind(self) -> str:
        return {"A": "list", "D": "signs", "E6": "word"}[self.case.family]

    def __str__(self) -> str:
        if self.kind == "signs":
            return "".join("+" if x > 0 else "-" for x in self.data)
        return ",".join(str(x) for x in self.data)

    def to_json(self) -> list:
        if self.kind == "signs":
            return ["+" if x > 0 else "-" for x in self.data]
        return list(self.data)


def parse_signs(text: str) -> tuple[int, ...]:
    table = {"+": 1, "-": -1, "−": -1}
    s = text.strip().strip("()").replace(",", "").replace(" ", "")
    if not s or any(ch not in table for ch in s):
        raise ParseError(f"cannot read sign sequence {text!r}")
    return tuple(table[ch] for ch in s)


def parse_ints(text: str) -> tuple[int, ...]:
    s = text.strip().strip("()[]")
    try:
        return tuple(int(tok) for tok in s.replace(" ", ",").split(",") if tok)
    except ValueError:
        raise ParseError(f"cannot read integer list {text!r}") from None


def parse_index(case: Case, text: str) -> SchubertIndex:
    """Read ``"2,4,5"``, ``"+-++-"`` or an E6 word (any word of the coset)."""
    looks_signs = bool(text.strip()) and set(text.strip()) <= set("+-−(), ")
    if case.family == "D":
        if not looks_signs:
            raise CaseMismatch(f"{case} expects a sign sequence, got {text!r}")
        return SchubertIndex(case, parse_signs(text))
    if looks_signs:
        raise CaseMismatch(f"{case} expects integers, got {text!r}")
    ints = parse_ints(text)
    if case.family == "E6":
        return index_from_word(case, ints)
    return SchubertIndex(case, ints)


def index_from_word(case: Case, word: Sequence[int]) -> SchubertIndex:
    datum = build_root_datum(case)
    lam = act(from_word(datum, word), datum.highest_weight)
    return weight_to_index(case, lam)


def index_weight(idx: SchubertIndex) -> WeightVec:
    """Extreme weight w.omega attached to the index."""
    c = idx.case
    if c.family == "A":
        sign = 1 if c.p_side else -1
        eps = [sign * int(i + 1 in idx.data) for i in range(c.n)]
        return eps_to_weight(c, eps)
    if c.family == "D":
        return eps_to_weight(c, [Fraction(x, 2) for x in idx.data])
    datum = build_root_datum(c)
    return act(from_word(datum, idx.data), datum.highest_weight)


def coset_element(idx: SchubertIndex) -> WeylElement:
    """Minimal coset representative with its canonical word."""
    datum = build_root_datum(idx.case)
    return from_word(datum, canonical_word(datum, index_weight(idx)))


def weight_to_index(case: Case, t: Sequence[int]) -> SchubertIndex:
    """Decode an extreme weight without checking orbit membership."""
    if case.family == "E6":
        return SchubertIndex(case, canonical_word(build_root_datum(case), t))
    eps = weight_to_eps(case, t)
    if case.family == "A":
        pick = (lambda e: e > 0) if case.p_side else (lambda e: e < 0)
        data = tuple(i + 1 for i, e in enumerate(eps) if pick(e))
        if len(data) != case.r:
            raise NotExtreme(f"{tuple(t)} is not an extreme weight of {case}")
        return SchubertIndex(case, data)
    return SchubertIndex(case, tuple(1 if e > 0 else -1 for e in eps))


def extreme_weight_to_coset(case: Case, t: Sequence[int]) -> SchubertIndex:
    """Inverse of the orbit map x -> x.omega for the given (usually dual) case."""
    t = tuple(int(x) for x in t)
    if len(t) != case.rank:
        raise NotExtreme(f"weight {t} has wrong length for {case}")
    try:
        idx = weight_to_index(case, t)
    except (InvalidParams, CaseMismatch, BadParity) as exc:
        raise NotExtreme(str(exc)) from None
    if index_weight(idx) != t:
        raise NotExtreme(f"{t} is not in the orbit of the highest weight of {case}")
    return idx


def transport_index(idx: SchubertIndex) -> SchubertIndex:
    """Image of an index under the diagram automorphism (lands in the mirror case)."""
    c = idx.case
    t = transport_weight(index_weight(idx), c.family, c.rank)
    return extreme_weight_to_coset(c.dual(), t)


def all_indices(case: Case) -> list[SchubertIndex]:
    table = coset_table(case)
    return [weight_to_index(case, t) for t in table.weights]
