"""Helly circular-arc recognition via the circular-ones property of the
clique matrix, with certificate extraction: a Helly model on acceptance, and
a minimal non-Helly vertex set plus obstacle enumeration search on rejection."""

from __future__ import annotations

import dataclasses
from itertools import combinations, permutations
from typing import Optional

from .graphs import Graph, GraphError, bits, induced_subgraph, mask_of, maximal_cliques
from .models import ArcModel, helly_report, intersection_graph
from .obstacles import ObstacleEnumeration, validate_enumeration

MAX_CLIQUES = 4096


@dataclasses.dataclass(frozen=True)
class BinaryMatrix:
    rows: int
    cols: int
    bits: tuple[int, ...]  # one int per row, bit c set iff entry (r, c) is 1

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise GraphError("matrix dimensions must be positive")

    def entry(self, r: int, c: int) -> int:
        return (self.bits[r] >> c) & 1

    def column(self, c: int) -> frozenset[int]:
        return frozenset(r for r in range(self.rows) if self.entry(r, c))


@dataclasses.dataclass(frozen=True)
class HellyModelCert:
    model: ArcModel


@dataclasses.dataclass(frozen=True)
class NotHCA:
    pass


def clique_matrix(g: Graph) -> tuple[BinaryMatrix, list[frozenset[int]]]:
    """Maximal-cliques-versus-vertices incidence matrix."""
    cliques = maximal_cliques(g)
    if len(cliques) > MAX_CLIQUES:
        raise GraphError(f"more than {MAX_CLIQUES} maximal cliques")
    rows = tuple(mask_of(q) for q in cliques)
    return BinaryMatrix(len(cliques), g.n, rows), cliques


def _consecutive_ones_order(cols: list[int], r: int) -> Optional[list[int]]:
    """A linear row order making every column's 1-set an interval, or None.

    Backtracking over row placements: a partial order is kept only while each
    column's placed rows are consecutive and, if the column still has unplaced
    rows, touch the growing end.
    """
    cols = [c for c in set(cols) if c and c != (1 << r) - 1]
    if r == 0:
        return []

    def extend(order: list[int], placed: int) -> Optional[list[int]]:
        if len(order) == r:
            return order
        # open columns: started but unfinished; the next row must be in all
        open_mask = (1 << r) - 1 & ~placed
        for c in cols:
            got = c & placed
            if got and got != c:
                if not (c >> order[-1]) & 1:
                    return None  # lost touch with the end: dead branch
                open_mask &= c
        for v in bits(open_mask):
            got = extend(order + [v], placed | (1 << v))
            if got is not None:
                return got
        return None

    for first in range(r):
        got = extend([first], 1 << first)
        if got is not None:
            return got
    return None


def _column_ok_linear(col: int, order: list[int]) -> bool:
    hits = [i for i, row in enumerate(order) if (col >> row) & 1]
    return not hits or hits[-1] - hits[0] + 1 == len(hits)


def _column_ok_circular(col: int, order: list[int]) -> bool:
    r = len(order)
    full = (1 << r) - 1
    return _column_ok_linear(col, order) or _column_ok_linear(full & ~col, order)


def circular_ones_row_order(m: BinaryMatrix) -> Optional[list[int]]:
    """A circular row order making every column's 1-rows circularly
    consecutive, or None if no such order exists.

    Reduction to the linear consecutive-ones problem: fix row 0 and complement
    every column containing it; a column's 1-set is a circular run through a
    fixed row exactly when its complement is a linear run avoiding it.
    """
    if m.rows > MAX_CLIQUES:
        raise GraphError(f"more than {MAX_CLIQUES} rows")
    full = (1 << m.rows) - 1
    cols = []
    for c in range(m.cols):
        col = 0
        for row in range(m.rows):
            col |= m.entry(row, c) << row
        cols.append(full & ~col if col & 1 else col)
    order = _consecutive_ones_order(cols, m.rows)
    if order is None:
        return None
    for c in range(m.cols):
        col = sum(m.entry(row, c) << row for row in range(m.rows))
        assert _column_ok_circular(col, order)
    return order


def circular_ones_brute_force(m: BinaryMatrix) -> Optional[list[int]]:
    """All-permutations oracle; rows must be few."""
    if m.rows > 8:
        raise GraphError("brute-force oracle limited to 8 rows")
    cols = [sum(m.entry(row, c) << row for row in range(m.rows)) for c in range(m.cols)]
    for perm in permutations(range(m.rows)):
        if all(_column_ok_circular(col, list(perm)) for col in cols):
            return list(perm)
    return None


def recognize_hca(g: Graph):
    """HellyModelCert with a verified Helly model, or NotHCA.

    A graph is Helly circular-arc exactly when its clique matrix has the
    circular-ones property for columns; the model places one circle position
    per maximal clique and covers each vertex's block of cliques."""
    if g.n == 0:
        return HellyModelCert(ArcModel(1, ()))
    matrix, cliques = clique_matrix(g)
    order = circular_ones_row_order(matrix)
    if order is None:
        return NotHCA()
    r = len(cliques)
    pos = {row: i for i, row in enumerate(order)}
    arcs = []
    full = set()
    for v in range(g.n):
        ps = sorted(pos[row] for row in matrix.column(v))
        if len(ps) == r:
            arcs.append((0, 0))
            full.add(v)
            continue
        # find the circular block: the unique gap not covered
        if r == 1 or ps[-1] - ps[0] + 1 == len(ps):
            arcs.append((ps[0], ps[-1]))
        else:
            gap = next(i for i in range(len(ps) - 1) if ps[i + 1] > ps[i] + 1)
            arcs.append((ps[gap + 1], ps[gap]))
    model = ArcModel(r, tuple(arcs), frozenset(full))
    if intersection_graph(model) != g or not helly_report(model).is_helly:
        raise GraphError("constructed model failed verification (internal bug)")
    return HellyModelCert(model)


def is_hca(g: Graph) -> bool:
    return isinstance(recognize_hca(g), HellyModelCert)


def minimal_non_hca(g: Graph) -> frozenset[int]:
    """Shrink a non-Helly-circular-arc graph to an inclusion-minimal vertex
    set still inducing a non-HCA graph, by repeated single-vertex deletion in
    ascending id order."""
    if is_hca(g):
        raise GraphError("input graph is already Helly circular-arc")
    keep = sorted(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in list(keep):
            rest = [u for u in keep if u != v]
            if not is_hca(induced_subgraph(g, rest)[0]):
                keep = rest
                changed = True
                break
    return frozenset(keep)


def _slot_candidates(g: Graph, core: tuple[int, ...], i: int) -> list[tuple]:
    k = len(core)
    vi, vj = core[i], core[(i + 1) % k]
    core_mask = mask_of(core)
    singles, left, right = [], [], []
    for y in range(g.n):
        if (core_mask >> y) & 1:
            continue
        t = g.non_neighbors_mask(y) & core_mask
        if t == (1 << vi) | (1 << vj):
            singles.append(y)
        elif t == 1 << vi:
            left.append(y)
        elif t == 1 << vj:
            right.append(y)
    out = [("single", w) for w in singles]
    out += [
        ("pair", u, z) for u in left for z in right if u != z and g.has_edge(u, z)
    ]
    return out


def find_obstacle_enumeration(g: Graph) -> Optional[ObstacleEnumeration]:
    """Exhaustive search for an obstacle enumeration spanning all of g:
    a circular clique core of size >= 3 whose every edge has a witness
    enumeration, with the core and witnesses covering every vertex."""
    if g.n > 12:
        raise GraphError("obstacle search limited to 12 vertices")
    all_mask = g.vertex_mask()
    for k in range(3, g.n + 1):
        for clique in combinations(range(g.n), k):
            if any(
                not g.has_edge(a, b) for a, b in combinations(clique, 2)
            ):
                continue
            first, rest = clique[0], clique[1:]
            for perm in permutations(rest):
                if len(perm) > 1 and perm[0] > perm[-1]:
                    continue  # skip reflections
                core = (first,) + perm
                cands = [_slot_candidates(g, core, i) for i in range(k)]
                if any(not c for c in cands):
                    continue
                got = _assign_slots(g, core, cands, 0, [], mask_of(core), all_mask)
                if got is not None:
                    return got
    return None


def _assign_slots(g, core, cands, i, chosen, covered, all_mask):
    if i == len(core):
        if covered != all_mask:
            return None
        e = ObstacleEnumeration(core, tuple(chosen))
        assert validate_enumeration(g, e)
        return e
    for cand in cands[i]:
        got = _assign_slots(
            g, core, cands, i + 1, chosen + [cand], covered | mask_of(cand[1:]), all_mask
        )
        if got is not None:
            return got
    return None
