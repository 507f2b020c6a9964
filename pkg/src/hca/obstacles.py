"""Obstacle enumerations: circular clique cores with per-edge witness
enumerations, the edge trichotomy (shortcut / cover / valid), and the
essentialization procedure that shrinks any obstacle enumeration down to an
essential one or to one of six small forbidden graphs."""

from __future__ import annotations

import dataclasses
from typing import Optional

from .catalog import catalog_graph
from .graphs import Graph, GraphError, bits, induced_subgraph, isomorphic, mask_of

SMALL_FORBIDDEN = ("c4_star", "k23", "domino", "g3", "co_c6", "co_c5_plus_k2")


class ObstacleError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class ObstacleEnumeration:
    """Circular core v_1..v_k plus one witness enumeration per core edge.

    witnesses[i] describes the edge core[i]core[i+1] (indices mod k) and is
    either ("single", w) or ("pair", u, z). Consecutive pair entries may share
    a vertex (z of slot i-1 equal to u of slot i).
    """

    core: tuple[int, ...]
    witnesses: tuple[tuple, ...]

    @property
    def k(self) -> int:
        return len(self.core)

    def slot_vertices(self, i: int) -> tuple[int, ...]:
        return self.witnesses[i][1:]

    def witness_set(self) -> frozenset[int]:
        out = set()
        for w in self.witnesses:
            out.update(w[1:])
        return frozenset(out)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.core) | self.witness_set()

    def cooccur(self, y1: int, y2: int) -> bool:
        """Whether y1 and y2 appear together in some witness enumeration."""
        return any(y1 in w[1:] and y2 in w[1:] for w in self.witnesses)


@dataclasses.dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violation: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _trace(g: Graph, e: ObstacleEnumeration, y: int) -> frozenset[int]:
    """Non-neighbors of y inside the core."""
    return frozenset(bits(g.non_neighbors_mask(y) & mask_of(e.core)))


def validate_enumeration(g: Graph, e: ObstacleEnumeration) -> ValidationResult:
    k = e.k
    if k < 3:
        return ValidationResult(False, "core must have at least 3 vertices")
    if len(set(e.core)) != k:
        return ValidationResult(False, "core vertices not distinct")
    if len(e.witnesses) != k:
        return ValidationResult(False, "need one witness enumeration per core edge")
    for v in e.core:
        if not 0 <= v < g.n:
            return ValidationResult(False, f"core vertex {v} out of range")
    for a in range(k):
        for b in range(a + 1, k):
            if not g.has_edge(e.core[a], e.core[b]):
                return ValidationResult(False, "core not a clique")
    core = set(e.core)
    for i, w in enumerate(e.witnesses):
        vi, vj = e.core[i], e.core[(i + 1) % k]
        if w[0] == "single":
            (y,) = w[1:]
            if not 0 <= y < g.n:
                return ValidationResult(False, f"slot {i}: witness out of range")
            if y in core:
                return ValidationResult(False, f"slot {i}: witness is a core vertex")
            if _trace(g, e, y) != {vi, vj}:
                return ValidationResult(
                    False, f"slot {i}: single witness must miss exactly both endpoints"
                )
        elif w[0] == "pair":
            u, z = w[1:]
            if not (0 <= u < g.n and 0 <= z < g.n):
                return ValidationResult(False, f"slot {i}: witness out of range")
            if u == z:
                return ValidationResult(False, f"slot {i}: pair members must differ")
            if u in core or z in core:
                return ValidationResult(False, f"slot {i}: witness is a core vertex")
            if _trace(g, e, u) != {vi}:
                return ValidationResult(
                    False, f"slot {i}: first pair member must miss exactly {vi}"
                )
            if _trace(g, e, z) != {vj}:
                return ValidationResult(
                    False, f"slot {i}: second pair member must miss exactly {vj}"
                )
            if not g.has_edge(u, z):
                return ValidationResult(False, f"slot {i}: pair members must be adjacent")
        else:
            return ValidationResult(False, f"slot {i}: unknown witness kind {w[0]!r}")
    return ValidationResult(True)


def witness_bounds(g: Graph, e: ObstacleEnumeration, y: int) -> tuple[int, int]:
    """The one or two core non-neighbors of witness y, as (left, right): equal
    for a single non-neighbor, otherwise right immediately follows left on the
    circular core."""
    if y not in e.witness_set():
        raise ObstacleError(f"{y} is not a witness")
    t = _trace(g, e, y)
    if len(t) == 1:
        (v,) = t
        return v, v
    if len(t) == 2:
        k = e.k
        for i in range(k):
            if e.core[i] in t and e.core[(i + 1) % k] in t:
                return e.core[i], e.core[(i + 1) % k]
    raise ObstacleError(f"witness {y} misses {sorted(t)}: not 1 or 2 consecutive core vertices")


@dataclasses.dataclass(frozen=True)
class EdgeClass:
    kind: str  # "inner_shortcut" | "outer_shortcut" | "cover" | "valid"
    inner_pair: Optional[tuple[int, int]] = None


def _core_distance(e: ObstacleEnumeration, a: int, b: int) -> int:
    i, j = e.core.index(a), e.core.index(b)
    d = abs(i - j)
    return min(d, e.k - d)


def _is_inner_pair(g: Graph, e: ObstacleEnumeration, y1: int, y2: int) -> bool:
    l1, _ = witness_bounds(g, e, y1)
    _, r2 = witness_bounds(g, e, y2)
    if l1 in frozenset(bits(g.non_neighbors_mask(y2))):
        return False
    if r2 in frozenset(bits(g.non_neighbors_mask(y1))):
        return False
    return _core_distance(e, l1, r2) >= 2


def classify_edge(g: Graph, e: ObstacleEnumeration, y1: int, y2: int) -> EdgeClass:
    """Classify an edge joining two witnesses; exactly one class applies."""
    if not g.has_edge(y1, y2):
        raise ObstacleError("witnesses are not adjacent")
    ws = e.witness_set()
    if y1 not in ws or y2 not in ws:
        raise ObstacleError("both endpoints must be witnesses")
    t1, t2 = _trace(g, e, y1), _trace(g, e, y2)

    inner_pair = None
    if _is_inner_pair(g, e, y1, y2):
        inner_pair = (y1, y2)
    elif _is_inner_pair(g, e, y2, y1):
        inner_pair = (y2, y1)

    outer = (
        len(t1) == 1
        and len(t2) == 1
        and t1 != t2
        and _core_distance(e, next(iter(t1)), next(iter(t2))) == 1
        and not e.cooccur(y1, y2)
    )
    cover = (g.non_neighbors_mask(y1) | g.non_neighbors_mask(y2)) & mask_of(e.core) == mask_of(
        e.core
    )
    valid = t1 <= t2 or t2 <= t1 or e.cooccur(y1, y2)

    classes = []
    if inner_pair:
        classes.append(EdgeClass("inner_shortcut", inner_pair))
    if outer:
        classes.append(EdgeClass("outer_shortcut"))
    if cover:
        classes.append(EdgeClass("cover"))
    if valid:
        classes.append(EdgeClass("valid"))
    if len(classes) != 1:
        raise ObstacleError(
            f"edge {y1}{y2} matched {len(classes)} classes; trichotomy violated"
        )
    return classes[0]


def witness_edges(g: Graph, e: ObstacleEnumeration) -> list[tuple[int, int]]:
    ws = sorted(e.witness_set())
    return [(a, b) for i, a in enumerate(ws) for b in ws[i + 1 :] if g.has_edge(a, b)]


def is_essential(g: Graph, e: ObstacleEnumeration) -> bool:
    """Whether every edge joining two witnesses is valid."""
    check = validate_enumeration(g, e)
    if not check:
        raise ObstacleError(f"invalid enumeration: {check.violation}")
    return all(classify_edge(g, e, a, b).kind == "valid" for a, b in witness_edges(g, e))


# -- pseudo-domino classification -----------------------------------------

_PSEUDO_DOMINO_EDGES = [(0, 1), (2, 3), (4, 5), (0, 2), (1, 3), (2, 4), (3, 5)]
_PSEUDO_DOMINO_NONEDGES = [(0, 3), (1, 2), (2, 5), (3, 4)]
_HANDLES = [(0, 4), (1, 5)]
_DIAGONALS = [(0, 5), (1, 4)]


@dataclasses.dataclass(frozen=True)
class PseudoDominoOutcome:
    kind: str  # "k23" | "iso" | "handles_plus_diagonal"
    name: Optional[str] = None
    mapping: Optional[tuple[int, ...]] = None  # pattern vertex -> host vertex


def classify_pseudo_domino(g: Graph, labels: tuple[int, ...]) -> PseudoDominoOutcome:
    """Classify six vertices forming a pseudo-domino (two stacked squares with
    prescribed edges/non-edges): either they contain an induced K_{2,3}, or
    they induce domino/G3/co-C6, or both handles plus a diagonal are present."""
    if len(labels) != 6 or len(set(labels)) != 6:
        raise ObstacleError("need six distinct labels")
    for a, b in _PSEUDO_DOMINO_EDGES:
        if not g.has_edge(labels[a], labels[b]):
            raise ObstacleError(f"required edge {labels[a]}{labels[b]} missing")
    for a, b in _PSEUDO_DOMINO_NONEDGES:
        if g.has_edge(labels[a], labels[b]):
            raise ObstacleError(f"forbidden edge {labels[a]}{labels[b]} present")
    diagonals = [g.has_edge(labels[a], labels[b]) for a, b in _DIAGONALS]
    handles = [g.has_edge(labels[a], labels[b]) for a, b in _HANDLES]
    if not any(diagonals):
        name = ("domino", "g3", "co_c6")[sum(handles)]
        sub, idx = induced_subgraph(g, labels)
        m = isomorphic(sub, catalog_graph(name))
        assert m is not None
        return PseudoDominoOutcome("iso", name, tuple(idx[v] for v in m))
    if all(handles):
        return PseudoDominoOutcome("handles_plus_diagonal")
    m = _find_named_copy(g, frozenset(labels), "k23")
    assert m is not None, "pseudo-domino with a diagonal but one handle must contain K_{2,3}"
    return PseudoDominoOutcome("k23", "k23", m)


def _find_named_copy(
    g: Graph, vertices: frozenset[int], name: str
) -> Optional[tuple[int, ...]]:
    """Induced copy of a catalog graph inside the given vertex set of g;
    mapping sends pattern vertices to vertices of g."""
    from .graphs import find_induced_copy

    sub, idx = induced_subgraph(g, vertices)
    m = find_induced_copy(sub, catalog_graph(name))
    if m is None:
        return None
    return tuple(idx[v] for v in m)


# -- essentialization ------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class EssentializeOutcome:
    kind: str  # "essential" | "forbidden"
    enumeration: Optional[ObstacleEnumeration] = None
    vertices: frozenset[int] = frozenset()
    name: Optional[str] = None
    mapping: Optional[tuple[int, ...]] = None
    edges_classified: int = 0


def _forbidden(g: Graph, name: str, vertices) -> EssentializeOutcome:
    vs = frozenset(vertices)
    m = _find_named_copy(g, vs, name)
    if m is None:
        raise ObstacleError(f"expected {name} on {sorted(vs)}; not found (internal bug)")
    return EssentializeOutcome("forbidden", vertices=vs, name=name, mapping=m)


def _essential(g: Graph, e: ObstacleEnumeration) -> EssentializeOutcome:
    check = validate_enumeration(g, e)
    if not check:
        raise ObstacleError(f"constructed enumeration invalid: {check.violation}")
    if not is_essential(g, e):
        raise ObstacleError("constructed enumeration not essential (internal bug)")
    return EssentializeOutcome("essential", enumeration=e, vertices=e.vertex_set())


def rotate_enumeration(e: ObstacleEnumeration, s: int) -> ObstacleEnumeration:
    """Start the circular core at position s instead of 0."""
    k = e.k
    return ObstacleEnumeration(
        tuple(e.core[(i + s) % k] for i in range(k)),
        tuple(e.witnesses[(i + s) % k] for i in range(k)),
    )


def reflect_enumeration(e: ObstacleEnumeration) -> ObstacleEnumeration:
    """Traverse the core in the opposite direction (keeping core[0] first).

    Slot j of the result runs from core[k-j] back to core[k-1-j], so it
    describes the old slot k-1-j reversed; pair witnesses swap their members
    since the slot endpoints swap roles.
    """
    k = e.k
    core = (e.core[0],) + tuple(e.core[k - i] for i in range(1, k))
    wits = []
    for j in range(k):
        old = e.witnesses[k - 1 - j]
        if old[0] == "pair":
            wits.append(("pair", old[2], old[1]))
        else:
            wits.append(old)
    return ObstacleEnumeration(core, tuple(wits))


def _shrink_inner(
    g: Graph, e: ObstacleEnumeration, pair: tuple[int, int]
) -> ObstacleEnumeration:
    """Cut the core between the two non-neighbors of an inner-shortcut pair:
    keep the stretch from r(y2) to l(y1) and close it with the pair (y1, y2)."""
    y1, y2 = pair
    _, r2 = witness_bounds(g, e, y2)
    e = rotate_enumeration(e, e.core.index(r2))
    l1, _ = witness_bounds(g, e, y1)
    j = e.core.index(l1) + 1  # new core length
    assert 3 <= j < e.k
    return ObstacleEnumeration(
        e.core[:j], e.witnesses[: j - 1] + (("pair", y1, y2),)
    )


def _shrink_outer(g: Graph, e: ObstacleEnumeration, y1: int, y2: int) -> ObstacleEnumeration:
    """Replace the witness enumeration between the two missed core vertices by
    the pair (y1, y2); the displaced witness drops out of the enumeration."""
    t1, t2 = _trace(g, e, y1), _trace(g, e, y2)
    (q1,), (q2,) = t1, t2
    k = e.k
    for i in range(k):
        if e.core[i] == q1 and e.core[(i + 1) % k] == q2:
            wits = list(e.witnesses)
            wits[i] = ("pair", y1, y2)
            return ObstacleEnumeration(e.core, tuple(wits))
        if e.core[i] == q2 and e.core[(i + 1) % k] == q1:
            wits = list(e.witnesses)
            wits[i] = ("pair", y2, y1)
            return ObstacleEnumeration(e.core, tuple(wits))
    raise ObstacleError("outer shortcut endpoints not on consecutive core vertices")


def essentialize(g: Graph, e: ObstacleEnumeration) -> EssentializeOutcome:
    """Shrink an obstacle enumeration until every witness-witness edge is
    valid, or until a cover resolves into an essential enumeration or one of
    the six small forbidden graphs. Reports how many edges were classified."""
    check = validate_enumeration(g, e)
    if not check:
        raise ObstacleError(f"invalid enumeration: {check.violation}")
    counter = 0
    visited: set[frozenset[int]] = set()
    found_valid: set[frozenset[int]] = set()
    while True:
        pending = [
            (a, b) for a, b in witness_edges(g, e) if frozenset((a, b)) not in visited
        ]
        if not pending:
            out = _essential(g, e)
            return dataclasses.replace(out, edges_classified=counter)
        a, b = pending[0]
        cls = classify_edge(g, e, a, b)
        counter += 1
        visited.add(frozenset((a, b)))
        if cls.kind == "valid":
            found_valid.add(frozenset((a, b)))
            continue
        if cls.kind == "cover":
            out = resolve_cover(g, e, a, b)
            return dataclasses.replace(out, edges_classified=counter)
        before = len(e.vertex_set())
        if cls.kind == "inner_shortcut":
            e = _shrink_inner(g, e, cls.inner_pair)
        else:
            e = _shrink_outer(g, e, a, b)
        check = validate_enumeration(g, e)
        if not check:
            raise ObstacleError(f"shrink produced invalid enumeration: {check.violation}")
        if len(e.vertex_set()) >= before:
            raise ObstacleError("shrink did not reduce the vertex count (internal bug)")
        ws = e.witness_set()
        for pair in found_valid:
            x, y = tuple(pair)
            if x in ws and y in ws and classify_edge(g, e, x, y).kind != "valid":
                raise ObstacleError("previously valid edge reclassified (internal bug)")


# -- cover resolution ------------------------------------------------------


def resolve_cover(
    g: Graph, e: ObstacleEnumeration, y1: int, y2: int
) -> EssentializeOutcome:
    """Resolve a cover edge terminally: a cover confines the enumeration to at
    most ten vertices, and a finite case analysis yields either an essential
    enumeration of an induced subgraph or one of the six small forbidden
    graphs. The result is re-validated before being returned."""
    if classify_edge(g, e, y1, y2).kind != "cover":
        raise ObstacleError("edge is not a cover")
    for cand in _cover_frames(g, e, y1, y2):
        return cand
    raise ObstacleError("no canonical frame for cover edge (internal bug)")


def _cover_frames(g: Graph, e: ObstacleEnumeration, y1: int, y2: int):
    """Bring the cover into one of three canonical shapes and dispatch."""
    for enum in (e, reflect_enumeration(e)):
        for s in range(enum.k):
            r = rotate_enumeration(enum, s)
            for a, b in ((y1, y2), (y2, y1)):
                ta, tb = _trace(g, r, a), _trace(g, r, b)
                if ta != {r.core[1], r.core[2]}:
                    continue
                if r.k == 3 and tb == {r.core[2], r.core[0]}:
                    yield _cover_k3_two_traces(g, r, a, b)
                elif r.k == 3 and tb == {r.core[0]}:
                    got = _cover_k3_single_trace(g, r, a, b)
                    if got is not None:
                        yield got
                elif r.k == 4 and tb == {r.core[3], r.core[0]}:
                    yield _cover_k4(g, r, a, b)


def _cover_k3_two_traces(
    g: Graph, e: ObstacleEnumeration, w2: int, w3: int
) -> EssentializeOutcome:
    """k=3 cover where both endpoints miss two core vertices: w2 misses
    {v2,v3}, w3 misses {v3,v1}."""
    v1, v2, v3 = e.core
    w = e.witnesses[0]
    if w[0] == "single":
        w1 = w[1]
        inner_edges = g.has_edge(w1, w2) + g.has_edge(w1, w3) + 1  # w2w3 is an edge
        if inner_edges == 1:
            return _forbidden(g, "c4_star", (v1, w2, w3, v2, w1))
        name = "g3" if inner_edges == 2 else "co_c6"
        return _forbidden(g, name, (v1, v2, v3, w1, w2, w3))
    _, u1, z1 = w
    pd = classify_pseudo_domino(g, (u1, z1, v2, v1, w3, w2))
    if pd.kind != "handles_plus_diagonal":
        return EssentializeOutcome(
            "forbidden", vertices=frozenset(pd.mapping), name=pd.name, mapping=pd.mapping
        )
    if g.has_edge(u1, w2):
        return _rebuild_triangle(g, v1, v2, v3, u1, z1, w2, w3)
    return _rebuild_triangle(g, v2, v1, v3, z1, u1, w3, w2)


def _rebuild_triangle(g, v1, v2, v3, u1, z1, w2, w3) -> EssentializeOutcome:
    """Essential enumeration on the triangle v3,u1,z1 once the pseudo-domino
    forces the edges u1w3, z1w2, u1w2."""
    slot3 = ("pair", v2, w3) if g.has_edge(w3, z1) else ("single", w3)
    enum = ObstacleEnumeration(
        (v3, u1, z1), (("pair", w2, v1), ("pair", v1, v2), slot3)
    )
    return _essential(g, enum)


def _cover_k3_single_trace(
    g: Graph, e: ObstacleEnumeration, w2: int, y2: int
) -> Optional[EssentializeOutcome]:
    """k=3 cover where w2 misses {v2,v3} and y2 misses only v1; y2 must then
    be the first member of the pair on edge v1v2 (returns None on the frame
    where it is not, so the reflected frame gets used instead)."""
    v1, v2, v3 = e.core
    w = e.witnesses[0]
    if w[0] != "pair" or w[1] != y2:
        return None
    _, u1, z1 = w
    if not g.has_edge(w2, z1):
        return _forbidden(g, "k23", (u1, z1, v1, v2, w2))
    back = e.witnesses[2]
    if back[0] == "single":
        w3 = back[1]
        if g.has_edge(w2, w3):
            return _cover_k3_two_traces(g, e, w2, w3)
        if not g.has_edge(u1, w3):
            return _forbidden(g, "c4_star", (v1, v3, u1, w2, w3))
        return _rebuild_triangle(g, v1, v2, v3, u1, z1, w2, w3)
    _, u3, z3 = back
    if not g.has_edge(u3, u1) and u3 != u1:
        slot3 = ("pair", u3, v2) if g.has_edge(u3, z1) else ("single", u3)
        enum = ObstacleEnumeration(
            (z1, v1, v3), (("pair", v2, u1), ("pair", u1, w2), slot3)
        )
        return _essential(g, enum)
    if not g.has_edge(u3, w2):
        return _forbidden(g, "k23", (v1, v3, u1, w2, u3))
    if not g.has_edge(u3, z1):
        return _forbidden(g, "co_c5_plus_k2", (w2, u3, v2, v3, z1, v1, u1))
    enum = ObstacleEnumeration(
        (v1, v2, v3), (("pair", u1, z1), ("pair", z1, u3), ("pair", u3, u1))
    )
    return _essential(g, enum)


def _cover_k4(g: Graph, e: ObstacleEnumeration, w2: int, w4: int) -> EssentializeOutcome:
    """k=4 cover: w2 misses {v2,v3} and w4 misses {v4,v1}."""
    v1, v2, v3, v4 = e.core
    w = e.witnesses[0]
    if w[0] == "pair":
        _, u1, z1 = w
        pd = classify_pseudo_domino(g, (u1, z1, v2, v1, w4, w2))
        if pd.kind != "handles_plus_diagonal":
            return EssentializeOutcome(
                "forbidden", vertices=frozenset(pd.mapping), name=pd.name, mapping=pd.mapping
            )
        if g.has_edge(u1, w2):
            return _rebuild_square(g, v1, v2, v3, v4, u1, z1, w2, w4)
        return _rebuild_square(g, v2, v1, v4, v3, z1, u1, w4, w2)
    w1 = w[1]
    adj2, adj4 = g.has_edge(w1, w2), g.has_edge(w1, w4)
    if not adj2 and not adj4:
        return _forbidden(g, "c4_star", (v1, v2, w2, w4, w1))
    if adj2 and not adj4:
        return _forbidden(g, "k23", (v1, v3, w1, w2, w4))
    if adj4 and not adj2:
        return _forbidden(g, "k23", (v2, v4, w1, w2, w4))
    enum = ObstacleEnumeration(
        (w1, v3, v4), (("pair", v1, w2), ("pair", w2, w4), ("pair", w4, v2))
    )
    return _essential(g, enum)


def _rebuild_square(g, v1, v2, v3, v4, u1, z1, w2, w4) -> EssentializeOutcome:
    """Essential enumeration once the k=4 pseudo-domino forces u1w4, z1w2,
    u1w2; core shape depends on whether w4 sees z1."""
    if not g.has_edge(w4, z1):
        enum = ObstacleEnumeration(
            (u1, z1, v3), (("pair", v1, v2), ("pair", w4, w2), ("pair", w2, v1))
        )
    else:
        enum = ObstacleEnumeration(
            (u1, v3, v4, z1),
            (("pair", v1, w2), ("pair", w2, w4), ("pair", w4, v2), ("pair", v2, v1)),
        )
    return _essential(g, enum)


# -- text format -----------------------------------------------------------


def format_enumeration(e: ObstacleEnumeration) -> str:
    lines = [f"obstacle {e.k}", "core " + " ".join(str(v) for v in e.core)]
    for i, w in enumerate(e.witnesses):
        if w[0] == "single":
            lines.append(f"wit {i + 1} single {w[1]}")
        else:
            lines.append(f"wit {i + 1} pair {w[1]} {w[2]}")
    return "\n".join(lines) + "\n"


def parse_enumeration(text: str) -> ObstacleEnumeration:
    k = None
    core: Optional[tuple[int, ...]] = None
    wits: dict[int, tuple] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if k is None:
            if parts[0] != "obstacle" or len(parts) != 2:
                raise ObstacleError(f"expected 'obstacle <k>', got {line!r}")
            k = int(parts[1])
        elif parts[0] == "core":
            core = tuple(int(x) for x in parts[1:])
        elif parts[0] == "wit" and len(parts) >= 4:
            i = int(parts[1])
            if parts[2] == "single" and len(parts) == 4:
                wits[i] = ("single", int(parts[3]))
            elif parts[2] == "pair" and len(parts) == 5:
                wits[i] = ("pair", int(parts[3]), int(parts[4]))
            else:
                raise ObstacleError(f"bad witness line {line!r}")
        else:
            raise ObstacleError(f"bad obstacle line {line!r}")
    if k is None or core is None:
        raise ObstacleError("missing obstacle header or core line")
    if len(core) != k:
        raise ObstacleError("core length disagrees with header")
    if sorted(wits) != list(range(1, k + 1)):
        raise ObstacleError("witness slots must be 1..k")
    return ObstacleEnumeration(core, tuple(wits[i] for i in range(1, k + 1)))
