"""Arc models certifying that essential obstacles are minimally non-Helly:
a non-Helly model of the obstacle itself and, for each vertex, a Helly model
of the graph with that vertex deleted."""

from __future__ import annotations

from .graphs import Graph, induced_subgraph, isomorphic, maximal_cliques
from .models import ArcModel, helly_report, intersection_graph
from .obstacles import (
    ObstacleEnumeration,
    ObstacleError,
    is_essential,
    validate_enumeration,
)

# Each core slot i contributes a block of three named points in clockwise
# order (l_i, r_{i-1}, m_i), and each named point has three sub-slots so that
# open interval ends can stop one sub-slot short of the point.
_SUB = 3
_BLOCK = 3 * _SUB


def _pos(e: ObstacleEnumeration, name: str, i: int, off: int = 0) -> int:
    i %= e.k
    base = {"l": 0, "r": _SUB, "m": 2 * _SUB}[name]
    if name == "r":
        i = (i + 1) % e.k  # r_i lives in block i+1
    return _BLOCK * i + base + 1 + off


def _roles(e: ObstacleEnumeration) -> dict[int, dict]:
    """Role map vertex -> {"core": j, "single": i, "u": i, "z": i} entries."""
    roles: dict[int, dict] = {}
    for j, v in enumerate(e.core):
        roles.setdefault(v, {})["core"] = j
    for i, w in enumerate(e.witnesses):
        if w[0] == "single":
            roles.setdefault(w[1], {})["single"] = i
        else:
            roles.setdefault(w[1], {})["u"] = i
            roles.setdefault(w[2], {})["z"] = i
    return roles


def _merged_triple(g: Graph, e: ObstacleEnumeration) -> bool:
    """Whether some maximal clique avoids the core entirely; for an essential
    enumeration this happens only when k=3 and the three pair slots share all
    their members, making the graph the octahedron."""
    core = frozenset(e.core)
    return any(not (q & core) for q in maximal_cliques(g))


def _octahedron_model(g: Graph, e: ObstacleEnumeration) -> ArcModel:
    """Hand-built non-Helly model of the octahedron: six arcs on a 12-point
    circle, non-adjacent pairs occupying opposite gaps."""
    slots = [(0, 4), (6, 10), (4, 8), (10, 2), (8, 0), (2, 6)]
    arcs = [(0, 0)] * g.n
    for j, v in enumerate(e.core):
        x = g.non_neighbors_mask(v).bit_length() - 1  # v's unique non-neighbor
        arcs[v] = slots[2 * j]
        arcs[x] = slots[2 * j + 1]
    return ArcModel(12, tuple(arcs))


def _arc_for(g: Graph, e: ObstacleEnumeration, v: int, role: dict) -> tuple[int, int]:
    k = e.k
    if "core" in role:
        i = role["core"]
        return _pos(e, "r", i, +1), _pos(e, "l", i, -1)
    if "single" in role:
        i = role["single"]
        return _pos(e, "l", i + 1), _pos(e, "r", i)
    if "u" in role:
        i = role["u"]
        prev = e.witnesses[(i - 1) % k]
        if prev[0] == "single" and g.has_edge(prev[1], v):
            return _pos(e, "r", i - 1), _pos(e, "r", i)
        if prev[0] == "pair" and prev[2] == v:
            return _pos(e, "l", i), _pos(e, "r", i)
        if prev[0] == "pair" and g.has_edge(prev[2], v):
            return _pos(e, "m", i), _pos(e, "r", i)
        return _pos(e, "m", i, +1), _pos(e, "r", i)
    i = role["z"]
    nxt = e.witnesses[(i + 1) % k]
    if nxt[0] == "single" and g.has_edge(nxt[1], v):
        return _pos(e, "l", i + 1), _pos(e, "l", i + 2)
    if nxt[0] == "pair" and nxt[1] == v:
        return _pos(e, "l", i + 1), _pos(e, "r", i + 1)
    if nxt[0] == "pair" and g.has_edge(nxt[1], v):
        return _pos(e, "l", i + 1), _pos(e, "m", i + 1)
    return _pos(e, "l", i + 1), _pos(e, "m", i + 1, -1)


def build_essential_model(g: Graph, e: ObstacleEnumeration) -> ArcModel:
    """Non-Helly arc model of an essential obstacle, arc ids equal to vertex
    ids; the core is the clique without a common point."""
    check = validate_enumeration(g, e)
    if not check:
        raise ObstacleError(f"invalid enumeration: {check.violation}")
    if not is_essential(g, e):
        raise ObstacleError("enumeration is not essential")
    if e.vertex_set() != frozenset(range(g.n)):
        raise ObstacleError("graph must consist exactly of core and witnesses")
    if _merged_triple(g, e):
        model = _octahedron_model(g, e)
    else:
        roles = _roles(e)
        arcs = [(0, 0)] * g.n
        for v in range(g.n):
            arcs[v] = _arc_for(g, e, v, roles[v])
        model = ArcModel(_BLOCK * e.k, tuple(arcs))
    if intersection_graph(model) != g:
        raise ObstacleError("model does not realize the graph (internal bug)")
    if helly_report(model).is_helly:
        raise ObstacleError("model unexpectedly Helly (internal bug)")
    return model


def _deletion_candidates(g: Graph, e: ObstacleEnumeration, model: ArcModel, v: int):
    """Candidate arc replacements after dropping v's arc, most specific first.

    Core deletions need no replacement. Deleting the single witness of a slot
    widens both incident core arcs across the vacated gap; deleting a pair
    member widens one core arc up to the slot's middle point. A plain drop is
    kept as a verified fallback."""
    roles = _roles(e)[v]
    k = e.k
    out = []
    if model.circle_size != _BLOCK * k:
        # hand-built octahedron model: the deleted vertex's unique
        # non-neighbor becomes the hub of a 4-wheel, so give it a full circle
        partner = g.non_neighbors_mask(v).bit_length() - 1
        return [({}, {partner}), ({}, set())]
    if "single" in roles:
        i = roles["single"]
        out.append(
            (
                {
                    e.core[i]: (_pos(e, "l", i + 1, +1), _pos(e, "l", i, -1)),
                    e.core[(i + 1) % k]: (_pos(e, "r", i + 1, +1), _pos(e, "r", i, -1)),
                },
                set(),
            )
        )
    if "u" in roles:
        i = roles["u"]
        out.append(({e.core[i]: (_pos(e, "m", i, +1), _pos(e, "l", i, -1))}, set()))
    if "z" in roles:
        i = (roles["z"] + 1) % k
        out.append(({e.core[i]: (_pos(e, "r", i, +1), _pos(e, "m", i, -1))}, set()))
    out.append(({}, set()))
    return out


def build_deleted_model(g: Graph, e: ObstacleEnumeration, v: int) -> ArcModel:
    """Helly arc model of the obstacle minus one vertex; arc ids follow the
    ascending remaining vertex ids."""
    if not 0 <= v < g.n:
        raise ObstacleError(f"vertex {v} out of range")
    model = build_essential_model(g, e)
    target, idx = induced_subgraph(g, set(range(g.n)) - {v})
    for patch, full in _deletion_candidates(g, e, model, v):
        arcs = list(model.arcs)
        for u, arc in patch.items():
            arcs[u] = arc
        cand = ArcModel(
            model.circle_size,
            tuple(arcs[u] for u in idx),
            frozenset(i for i, u in enumerate(idx) if u in full),
        )
        if intersection_graph(cand) == target and helly_report(cand).is_helly:
            return cand
    raise ObstacleError(f"no verified Helly model for deletion of {v} (internal bug)")
