"""Tangent-space Hasse quiver at the base point and the subquivers Q_w."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import UnknownFormat
from .labels import root_label
from .rootsys import (
    Case,
    RootDatum,
    SchubertIndex,
    WeightVec,
    build_root_datum,
    coset_element,
    inversion_roots,
)


@dataclass(frozen=True, eq=False)
class Quiver:
    case: Case
    roots: tuple[WeightVec, ...]  # gamma per vertex; the vertex weight is omega - gamma
    vertices: tuple[WeightVec, ...]
    arrows: tuple[tuple[int, int], ...]  # (u, v): gamma_u - gamma_v is a simple root
    heights: tuple[int, ...]

    @property
    def h_max(self) -> int:
        return max(self.heights)

    def index_of(self, gamma: WeightVec) -> int:
        return self._pos[gamma]

    @property
    def _pos(self) -> dict:
        return {g: i for i, g in enumerate(self.roots)}

    def __len__(self) -> int:
        return len(self.vertices)


@lru_cache(maxsize=None)
def _build(case: Case) -> Quiver:
    datum = build_root_datum(case)
    k = case.marked
    roots = tuple(g for g in datum.positive_roots if datum.coeff(g, k) == 1)
    omega = datum.highest_weight
    vertices = tuple(tuple(a - b for a, b in zip(omega, g)) for g in roots)
    simple = set(datum.simple_roots)
    pos = {g: i for i, g in enumerate(roots)}
    arrows = []
    for i, g in enumerate(roots):
        for s in simple:
            h = tuple(a - b for a, b in zip(g, s))
            if h in pos:
                arrows.append((i, pos[h]))
    arrows.sort()
    # graded rank from the bottom; roots are sorted by height so targets come first
    heights = [0] * len(roots)
    out = {}
    for u, v in arrows:
        out.setdefault(u, []).append(v)
    for i in range(len(roots)):
        heights[i] = 1 + max((heights[v] for v in out.get(i, ())), default=0)
    return Quiver(case, roots, vertices, tuple(arrows), tuple(heights))


def build_hasse(datum: RootDatum) -> Quiver:
    return _build(datum.case)


def subquiver_qw(q: Quiver, idx: SchubertIndex) -> frozenset[int]:
    """Vertex ids of Q_w: roots of the quiver inverted by the minimal rep of idx."""
    if idx.case != q.case:
        from .errors import CaseMismatch

        raise CaseMismatch(f"index for {idx.case} used with quiver of {q.case}")
    datum = build_root_datum(q.case)
    inv = inversion_roots(datum, coset_element(idx))
    pos = q._pos
    return frozenset(pos[g] for g in inv if g in pos)


def is_order_ideal(q: Quiver, subset) -> bool:
    s = set(subset)
    return all(v in s for u, v in q.arrows if u in s)


def vertex_label(q: Quiver, i: int) -> str:
    return str(root_label(q.case, q.roots[i]))


FORMATS = ("ascii", "dot", "json")


def emit(q: Quiver, marked=None, fmt: str = "ascii") -> str:
    marked = frozenset(marked or ())
    if fmt == "json":
        doc = {
            "vertices": [
                {"id": i, "height": q.heights[i], "weight": list(q.vertices[i]), "label": vertex_label(q, i)}
                for i in range(len(q))
            ],
            "arrows": [list(a) for a in q.arrows],
            "marked": sorted(marked),
        }
        return json.dumps(doc, indent=2)
    if fmt == "dot":
        lines = [f'digraph "{q.case}" {{', "  rankdir=TB;", "  node [shape=box];"]
        for h in range(q.h_max, 0, -1):
            ids = [i for i in range(len(q)) if q.heights[i] == h]
            lines.append("  { rank=same; " + " ".join(f"v{i};" for i in ids) + " }")
        for i in range(len(q)):
            style = ', style=filled, fillcolor="gray80"' if i in marked else ""
            lines.append(f'  v{i} [label="{vertex_label(q, i)}"{style}];')
        for u, v in q.arrows:
            lines.append(f"  v{u} -> v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "ascii":
        rows = []
        width = len(str(q.h_max))
        for h in range(q.h_max, 0, -1):
            cells = []
            for i in range(len(q)):
                if q.heights[i] == h:
                    lab = vertex_label(q, i)
                    cells.append(f"[{lab}]" if i in marked else f" {lab} ")
            rows.append((f"h{h:<{width}} | " + "  ".join(cells)).rstrip())
        return "\n".join(rows) + "\n"
    raise UnknownFormat(f"unknown quiver format {fmt!r}; expected one of {FORMATS}")
