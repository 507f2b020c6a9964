"""Circular-arc models over a discrete circle: intersection graphs, Helly
certification, properness, extreme normalization."""

from __future__ import annotations

import dataclasses
from typing import Iterable, Optional

from .graphs import Graph, GraphError, bits, maximal_cliques


class ModelError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class ArcModel:
    """Arcs over circle positions 0..circle_size-1 (clockwise).

    arcs[i] = (start, end) is the closed clockwise arc start..end inclusive,
    wrapping allowed; ids in full_circle cover every position (their (start,
    end) entry is ignored).
    """

    circle_size: int
    arcs: tuple[tuple[int, int], ...]
    full_circle: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.circle_size < 1:
            raise ModelError("circle must have at least one position")
        for i, (s, e) in enumerate(self.arcs):
            if i in self.full_circle:
                continue
            if not (0 <= s < self.circle_size and 0 <= e < self.circle_size):
                raise ModelError(f"arc {i} endpoint outside circle")
        for i in self.full_circle:
            if not 0 <= i < len(self.arcs):
                raise ModelError(f"full-circle id {i} out of range")

    @property
    def n(self) -> int:
        return len(self.arcs)

    def positions_mask(self, i: int) -> int:
        full = (1 << self.circle_size) - 1
        if i in self.full_circle:
            return full
        s, e = self.arcs[i]
        if s <= e:
            return ((1 << (e - s + 1)) - 1) << s
        head = ((1 << (self.circle_size - s)) - 1) << s
        tail = (1 << (e + 1)) - 1
        return head | tail

    def positions(self, i: int) -> frozenset[int]:
        return frozenset(bits(self.positions_mask(i)))


@dataclasses.dataclass(frozen=True)
class HellyReport:
    is_helly: bool
    clique_points: tuple[Optional[int], ...]
    cliques: tuple[frozenset[int], ...]
    violator: Optional[frozenset[int]]


def intersection_graph(model: ArcModel) -> Graph:
    masks = [model.positions_mask(i) for i in range(model.n)]
    adj = [0] * model.n
    for i in range(model.n):
        for j in range(i + 1, model.n):
            if masks[i] & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(model.n, tuple(adj))


def helly_report(model: ArcModel) -> HellyReport:
    """Helly check via clique points of the maximal cliques (the clique-point
    equivalence of the Helly property for arc models)."""
    g = intersection_graph(model)
    cliques = maximal_cliques(g)
    masks = [model.positions_mask(i) for i in range(model.n)]
    points: list[Optional[int]] = []
    violator = None
    for q in cliques:
        common = (1 << model.circle_size) - 1
        for v in q:
            common &= masks[v]
        if common:
            points.append((common & -common).bit_length() - 1)
        else:
            points.append(None)
            if violator is None:
                violator = q
    return HellyReport(violator is None, tuple(points), tuple(cliques), violator)


def is_helly_brute_force(model: ArcModel) -> bool:
    """Raw Helly-property definition over all subfamilies; oracle for small n."""
    masks = [model.positions_mask(i) for i in range(model.n)]
    for sub in range(1, 1 << model.n):
        members = list(bits(sub))
        pairwise = all(
            masks[u] & masks[v] for a, u in enumerate(members) for v in members[a + 1 :]
        )
        if pairwise:
            common = (1 << model.circle_size) - 1
            for v in members:
                common &= masks[v]
            if not common:
                return False
    return True


def is_proper(model: ArcModel) -> bool:
    masks = [model.positions_mask(i) for i in range(model.n)]
    for i in range(model.n):
        for j in range(model.n):
            if i != j and masks[i] != masks[j] and masks[i] & masks[j] == masks[i]:
                return False
    return True


def normalize_extremes(model: ArcModel) -> ArcModel:
    """Equivalent model on exactly 2n positions with pairwise distinct extremes.

    Each shared position expands to a block (start slots, a middle slot, end
    slots); positions that end up as nobody's extreme are then deleted. Both
    steps preserve all total intersections of arc subfamilies, hence the
    intersection graph and the Helly status.
    """
    if model.full_circle:
        raise ModelError("full-circle arcs cannot be normalized")
    if model.n == 0:
        raise ModelError("empty model")
    starts: dict[int, list[int]] = {}
    ends: dict[int, list[int]] = {}
    for i, (s, e) in enumerate(model.arcs):
        starts.setdefault(s, []).append(i)
        ends.setdefault(e, []).append(i)
    # slot layout per original position: starts, middle, ends
    slot_of_start: dict[int, int] = {}
    slot_of_end: dict[int, int] = {}
    pos = 0
    for p in range(model.circle_size):
        for i in starts.get(p, []):
            slot_of_start[i] = pos
            pos += 1
        pos += 1  # middle slot
        for i in ends.get(p, []):
            slot_of_end[i] = pos
            pos += 1
    expanded = ArcModel(pos, tuple((slot_of_start[i], slot_of_end[i]) for i in range(model.n)))
    # drop every slot that is no arc's extreme
    keep = sorted({s for s, _ in expanded.arcs} | {e for _, e in expanded.arcs})
    newpos = {old: i for i, old in enumerate(keep)}
    arcs = tuple((newpos[s], newpos[e]) for s, e in expanded.arcs)
    out = ArcModel(len(keep), arcs)
    assert out.circle_size == 2 * model.n
    return out


def submodel(model: ArcModel, ids: Iterable[int]) -> ArcModel:
    """Restriction to the given arc ids, reindexed densely in ascending order."""
    keep = sorted(set(ids))
    for i in keep:
        if not 0 <= i < model.n:
            raise ModelError(f"arc id {i} out of range")
    remap = {old: new for new, old in enumerate(keep)}
    arcs = tuple(model.arcs[i] for i in keep)
    full = frozenset(remap[i] for i in model.full_circle if i in remap)
    return ArcModel(model.circle_size, arcs, full)


# -- text format ---------------------------------------------------------


def format_model(model: ArcModel) -> str:
    lines = [f"model {model.circle_size} {model.n}"]
    for i, (s, e) in enumerate(model.arcs):
        if i in model.full_circle:
            lines.append(f"full {i}")
        else:
            lines.append(f"arc {i} {s} {e}")
    return "\n".join(lines) + "\n"


def parse_model(text: str) -> ArcModel:
    header = None
    arcs: dict[int, tuple[int, int]] = {}
    full = set()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "model" or len(parts) != 3:
                raise ModelError(f"expected 'model <P> <n>', got {line!r}")
            header = (int(parts[1]), int(parts[2]))
        elif parts[0] == "arc" and len(parts) == 4:
            arcs[int(parts[1])] = (int(parts[2]), int(parts[3]))
        elif parts[0] == "full" and len(parts) == 2:
            i = int(parts[1])
            arcs[i] = (0, 0)
            full.add(i)
        else:
            raise ModelError(f"bad model line {line!r}")
    if header is None:
        raise ModelError("missing 'model' header")
    p, n = header
    if sorted(arcs) != list(range(n)):
        raise ModelError("arc ids must be dense 0..n-1")
    return ArcModel(p, tuple(arcs[i] for i in range(n)), frozenset(full))
