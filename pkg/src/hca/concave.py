"""Concave-round recognition, extraction and classification of its minimal
forbidden subgraphs, the seven-class multiple-partition algorithm, and the
certifying pipeline for graphs that fail Helly circular-arc recognition."""

from __future__ import annotations

import dataclasses
import re
from typing import Optional

from .graphs import (
    Graph,
    GraphError,
    bits,
    build_graph,
    check_induced_copy,
    find_induced_copy,
    induced_subgraph,
    isomorphic,
)
from .catalog import UntranscribedFigureGraph, catalog_graph, complement, figure_graph
from .recognition import (
    BinaryMatrix,
    HellyModelCert,
    circular_ones_row_order,
    find_obstacle_enumeration,
    minimal_non_hca,
    recognize_hca,
)
from .obstacles import essentialize


# -- concave-round recognition ---------------------------------------------


def _circular_interval(positions: set[int], n: int) -> bool:
    if not positions or len(positions) == n:
        return True
    ps = sorted(positions)
    if ps[-1] - ps[0] + 1 == len(ps):
        return True
    qs = sorted(set(range(n)) - positions)
    return qs[-1] - qs[0] + 1 == len(qs)


def recognize_concave_round(g: Graph) -> Optional[tuple[int, ...]]:
    """A circular vertex order in which every closed neighborhood is a
    circular interval, or None if no such order exists.

    The order is a circular-ones row order of the vertex-versus-vertex
    closed-neighborhood matrix; the interval property of the returned order
    is re-checked directly."""
    if g.n == 0:
        return ()
    if g.n > 64:
        raise GraphError("concave-round recognition limited to 64 vertices")
    m = BinaryMatrix(g.n, g.n, tuple(g.closed_mask(v) for v in range(g.n)))
    order = circular_ones_row_order(m)
    if order is None:
        return None
    pos = {v: i for i, v in enumerate(order)}
    for v in range(g.n):
        hood = {pos[u] for u in bits(g.closed_mask(v))}
        if not _circular_interval(hood, g.n):
            raise GraphError("order fails the interval property (internal bug)")
    return tuple(order)


def is_concave_round(g: Graph) -> bool:
    return recognize_concave_round(g) is not None


def minimal_non_concave(g: Graph) -> frozenset[int]:
    """Shrink a non-concave-round graph to an inclusion-minimal vertex set
    still inducing a non-concave-round graph, by repeated single-vertex
    deletion in ascending id order."""
    if is_concave_round(g):
        raise GraphError("input graph is already concave-round")
    keep = sorted(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in list(keep):
            rest = [u for u in keep if u != v]
            if not is_concave_round(induced_subgraph(g, rest)[0]):
                keep = rest
                changed = True
                break
    return frozenset(keep)


# -- classification of minimal non-concave-round graphs --------------------


@dataclasses.dataclass(frozen=True)
class FamilyTag:
    """Family membership of a minimal non-concave-round graph. kind is one
    of net, tent_star, co_h3, ck_star, co_c2k, co_odd_c_star, co_b, or
    unknown; k carries the family parameter (for co_b, the type 2 or 3)."""

    kind: str
    k: Optional[int] = None


_CO_B_FIGURES = (("b2_1", 2), ("b2_2", 2), ("b3_1", 3), ("b3_2", 3), ("b3_3", 3))


def classify_concave_forbidden(h: Graph) -> FamilyTag:
    """Which minimal non-concave-round family h belongs to; every tag other
    than unknown is confirmed by an isomorphism test against the constructed
    member of matching size."""
    from .generator import obst8_catalog

    n = h.n

    def matches(pat: Graph) -> bool:
        return pat.n == n and isomorphic(h, pat) is not None

    if matches(catalog_graph("net")):
        return FamilyTag("net")
    if matches(catalog_graph("tent_star")):
        return FamilyTag("tent_star")
    for name, pat, _ in obst8_catalog():
        if name == "co_h3" and matches(pat):
            return FamilyTag("co_h3")
    if n >= 5 and matches(catalog_graph("ck_star", n - 1)):
        return FamilyTag("ck_star", n - 1)
    if n >= 6 and n % 2 == 0 and matches(catalog_graph("co_c2k", n // 2)):
        return FamilyTag("co_c2k", n // 2)
    if n >= 4 and n % 2 == 0 and matches(catalog_graph("co_odd_c_star", (n - 2) // 2)):
        return FamilyTag("co_odd_c_star", (n - 2) // 2)
    for fig_name, btype in _CO_B_FIGURES:
        try:
            pat = complement(figure_graph(fig_name))
        except UntranscribedFigureGraph:
            continue
        if matches(pat):
            return FamilyTag("co_b", btype)
    return FamilyTag("unknown")


# -- true-twin contraction -------------------------------------------------


def contract_true_twins(g: Graph) -> tuple[Graph, tuple[frozenset[int], ...]]:
    """Quotient by classes of equal closed neighborhoods. Class i of the
    returned map lists the original vertices merged into vertex i; classes
    are ordered by their smallest member, so g is a multiple of the quotient
    with those classes."""
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.closed_mask(v), []).append(v)
    classes = sorted(groups.values(), key=lambda c: c[0])
    edges = [
        (a, b)
        for a in range(len(classes))
        for b in range(a + 1, len(classes))
        if g.has_edge(classes[a][0], classes[b][0])
    ]
    return build_graph(len(classes), edges), tuple(frozenset(c) for c in classes)


# -- multiples of the 7-class circular structure ---------------------------


@dataclasses.dataclass(frozen=True)
class MultiplePartition:
    """Partition into seven circular classes, a hub class, and an optional
    side class. Classes at circular distance 1 and 2 are complete to each
    other and anticomplete at distance 3; u is complete to every class; w,
    when nonempty, sits at slot w_slot: complete to the classes two and
    three steps away, anticomplete to the three nearest classes and to u."""

    classes: tuple[frozenset[int], ...]
    u: frozenset[int]
    w: frozenset[int]
    w_slot: Optional[int] = None


def _complete(g: Graph, xs, ys) -> bool:
    return all(g.has_edge(a, b) for a in xs for b in ys if a != b)


def _anticomplete(g: Graph, xs, ys) -> bool:
    return all(not g.has_edge(a, b) for a in xs for b in ys)


def validate_multiple_partition(g: Graph, p: MultiplePartition) -> bool:
    parts = list(p.classes) + [p.u, p.w]
    if len(p.classes) != 7 or any(not c for c in p.classes) or not p.u:
        return False
    seen: set[int] = set()
    for part in parts:
        if part & seen:
            return False
        seen |= part
    if seen != set(range(g.n)):
        return False
    if any(not _complete(g, part, part) for part in parts):
        return False
    for i in range(7):
        for d in (1, 2):
            if not _complete(g, p.classes[i], p.classes[(i + d) % 7]):
                return False
        if not _anticomplete(g, p.classes[i], p.classes[(i + 3) % 7]):
            return False
        if not _complete(g, p.u, p.classes[i]):
            return False
    if p.w:
        j = p.w_slot
        if j is None:
            return False
        for d in (2, 3):
            if not _complete(g, p.w, p.classes[(j + d) % 7]):
                return False
            if not _complete(g, p.w, p.classes[(j - d) % 7]):
                return False
        for d in (-1, 0, 1):
            if not _anticomplete(g, p.w, p.classes[(j + d) % 7]):
                return False
        if not _anticomplete(g, p.w, p.u):
            return False
    elif p.w_slot is not None:
        return False
    return True


@dataclasses.dataclass(frozen=True)
class CoC7Outcome:
    kind: str  # "partition" | "forbidden"
    partition: Optional[MultiplePartition] = None
    name: Optional[str] = None
    mapping: Optional[tuple[int, ...]] = None


_WHITELIST = ("claw", "5_wheel", "c4_star", "co_3k2", "co_p7")


def _copy_within(g: Graph, name: str, verts) -> Optional[tuple[int, ...]]:
    sub, idx = induced_subgraph(g, verts)
    m = find_induced_copy(sub, catalog_graph(name))
    return None if m is None else tuple(idx[v] for v in m)


def _found(g: Graph, name: str, cand, pool) -> tuple:
    """Forbidden-copy result: the expected pattern inside the small candidate
    set, falling back to a whitelist search over the wider pool."""
    m = _copy_within(g, name, set(cand))
    if m is not None:
        return ("forbidden", name, m)
    wide = set(cand) | set(pool)
    for nm in _WHITELIST:
        m = _copy_within(g, nm, wide)
        if m is not None:
            return ("forbidden", nm, m)
    raise GraphError("expected forbidden subgraph not found (internal bug)")


def _insert_vertex(g: Graph, V, U, W, wslot, x):
    """One inductive step: place x into the partition or report a forbidden
    subgraph. Returns ("ok", wslot) after mutating the class lists, or
    ("forbidden", name, mapping)."""

    def nn(i):
        for b in V[i % 7]:
            if not g.has_edge(x, b):
                return b
        return None

    def nb(i):
        for b in V[i % 7]:
            if g.has_edge(x, b):
                return b
        return None

    def rep(i):
        return V[i % 7][0]

    u0 = U[0]
    pool = [rep(i) for i in range(7)] + [u0, x] + W[:1]
    non_classes = {i for i in range(7) if nn(i) is not None}

    # nonneighbors three slots apart on each side
    for i in range(7):
        b1, b2 = nn(i - 2), nn(i + 2)
        if b1 is None or b2 is None:
            continue
        b = nb(i) or nb(i + 3)
        if b is not None:
            return _found(g, "claw", (b1, b2, x, b), pool + [b1, b2])
        return _found(g, "c4_star", (b1, rep(i), b2, rep(i + 3), x), pool + [b1, b2])

    # nonneighbors in both classes flanking slot i
    for i in range(7):
        bm, bp = nn(i - 1), nn(i + 1)
        if bm is None or bp is None:
            continue
        site = pool + [bm, bp]
        b = nb(i)
        if b is None:
            b = next((y for y in U if g.has_edge(x, y)), None)
        if b is not None:
            return _found(g, "5_wheel", (rep(i - 2), bm, bp, rep(i + 2), x, b), site + [b])
        b = nb(i + 1)
        if b is not None:
            cand = (u0, x, rep(i), rep(i - 3), b, rep(i - 2), rep(i + 2))
            return _found(g, "co_p7", cand, site + [b])
        b = nb(i - 1)
        if b is not None:
            cand = (u0, x, rep(i), rep(i + 3), b, rep(i + 2), rep(i - 2))
            return _found(g, "co_p7", cand, site + [b])
        # x sees nothing in the three nearest classes nor in u
        for w in W:
            j = wslot
            if not g.has_edge(x, w):
                c = j - 2 if (j - 2) % 7 not in non_classes else j + 2
                return _found(g, "claw", (x, w, u0, rep(c)), site + [w])
            if j % 7 != i:
                r = (i - j) % 7
                if r in (1, 2):
                    cand = (x, w, rep(j + 2), u0, rep(j - 1), rep(j - 3))
                elif r in (5, 6):
                    cand = (x, w, rep(j - 2), u0, rep(j + 1), rep(j + 3))
                elif r == 3:
                    cand = (x, w, rep(j - 3), u0, rep(j), rep(j - 2))
                else:
                    cand = (x, w, rep(j + 3), u0, rep(j), rep(j + 2))
                return _found(g, "5_wheel", cand, site + [w])
        W.append(x)
        return ("ok", i)

    # nonneighbors in the two adjacent classes opposite slot i
    for i in range(7):
        bm, bp = nn(i - 3), nn(i + 3)
        if bm is None or bp is None:
            continue
        site = pool + [bm, bp]
        b = nb(i + 3)
        if b is not None:
            cand = (x, bm, rep(i + 1), rep(i - 2), rep(i + 2), rep(i - 1), b)
            return _found(g, "co_p7", cand, site + [b])
        b = nb(i - 3)
        if b is not None:
            cand = (x, bp, rep(i - 1), rep(i + 2), rep(i - 2), rep(i + 1), b)
            return _found(g, "co_p7", cand, site + [b])
        b = next((y for y in U if not g.has_edge(x, y)), None)
        if b is not None:
            cand = (b, x, rep(i + 3), rep(i - 1), rep(i + 2), rep(i - 2), rep(i + 1))
            return _found(g, "co_p7", cand, site + [b])
        for w in W:
            j = wslot
            r = (i - j) % 7
            adj = g.has_edge(x, w)
            if r in (2, 3, 4, 5) and not adj:
                if r in (2, 3):
                    cand = (w, x, rep(j - 1), rep(j - 3))
                else:
                    cand = (w, x, rep(j + 1), rep(j + 3))
                return _found(g, "claw", cand, site + [w])
            if r == 1 and adj:
                cand = (rep(j + 2), rep(j - 2), x, rep(j - 3), rep(j), w, u0)
                return _found(g, "co_p7", cand, site + [w])
            if r == 6 and adj:
                cand = (rep(j - 2), rep(j + 2), x, rep(j + 3), rep(j), w, u0)
                return _found(g, "co_p7", cand, site + [w])
            if r == 0 and adj:
                cand = (rep(j + 1), rep(j + 2), rep(j - 2), rep(j - 1), w, x)
                return _found(g, "5_wheel", cand, site + [w])
        V[i].append(x)
        return ("ok", wslot)

    # nonneighbors in exactly one class
    if non_classes:
        i = min(non_classes)
        b = nn(i)
        cand = (x, b, rep(i + 3), rep(i - 1), rep(i + 2), rep(i - 2), rep(i + 1))
        return _found(g, "co_p7", cand, pool + [b])

    # x complete to every circular class
    b = next((y for y in U if not g.has_edge(x, y)), None)
    if b is not None:
        return _found(g, "co_3k2", (x, b, rep(5), rep(1), rep(0), rep(3)), pool + [b])
    for w in W:
        if g.has_edge(x, w):
            j = wslot
            cand = (w, rep(j - 2), rep(j - 1), rep(j + 1), rep(j + 2), x)
            return _found(g, "5_wheel", cand, pool + [w])
    U.append(x)
    return ("ok", wslot)


def multiple_partition_coC7(g: Graph, base: tuple[int, ...]) -> CoC7Outcome:
    """Given a verified induced copy of the 7-cycle-complement-plus-hub
    graph, either a validated MultiplePartition of all of g (g is then a
    multiple of that graph, or of its one-side-vertex extension when the
    side class is nonempty) or a verified forbidden copy with name among
    claw, 5-wheel, c4_star, co_3k2, co_p7.

    The base circular labeling comes from the non-adjacency 7-cycle of the
    copy; remaining vertices are inserted in ascending id order."""
    pat = catalog_graph("co_c7_star")
    if len(base) != pat.n or not check_induced_copy(g, pat, base):
        raise GraphError("base mapping is not an induced copy")
    V: list[list[int]] = [[] for _ in range(7)]
    for t in range(7):
        # pattern vertex t is nonadjacent to t+-1; stepping by three converts
        # that cycle into nonadjacency at circular distance 3
        V[(3 * t) % 7].append(base[t])
    U = [base[7]]
    W: list[int] = []
    wslot: Optional[int] = None
    for x in sorted(set(range(g.n)) - set(base)):
        res = _insert_vertex(g, V, U, W, wslot, x)
        if res[0] == "forbidden":
            _, name, mapping = res
            assert check_induced_copy(g, catalog_graph(name), mapping)
            return CoC7Outcome("forbidden", name=name, mapping=mapping)
        wslot = res[1]
    p = MultiplePartition(
        tuple(frozenset(c) for c in V), frozenset(U), frozenset(W), wslot
    )
    if not validate_multiple_partition(g, p):
        raise GraphError("constructed partition invalid (internal bug)")
    rep, _ = contract_true_twins(g)
    target = "co_z" if W else "co_c7_star"
    if isomorphic(rep, catalog_graph(target)) is None:
        raise GraphError("partition does not contract to the base graph (internal bug)")
    return CoC7Outcome("partition", partition=p)


# -- the certifying pipeline -----------------------------------------------


@dataclasses.dataclass(frozen=True)
class Forbidden:
    """A named forbidden induced subgraph: vertices[p] is the host vertex
    playing pattern vertex p of pattern_graph(name)."""

    name: str
    vertices: tuple[int, ...]


def pattern_graph(name: str) -> Graph:
    """The graph a forbidden-certificate name denotes."""
    m = re.fullmatch(r"c(\d+)_star", name)
    if m:
        return catalog_graph("ck_star", int(m.group(1)))
    try:
        return catalog_graph(name)
    except GraphError:
        pass
    from .generator import obst8_catalog

    for nm, g, _ in obst8_catalog():
        if nm == name:
            return g
    raise GraphError(f"unknown forbidden-subgraph name {name!r}")


def _verified(g: Graph, name: str, mapping: tuple[int, ...]) -> Forbidden:
    if not check_induced_copy(g, pattern_graph(name), mapping):
        raise GraphError(f"claimed {name} copy failed verification (internal bug)")
    return Forbidden(name, mapping)


def _search(g: Graph, names, verts) -> Optional[Forbidden]:
    for name in names:
        m = _copy_within(g, name, verts)
        if m is not None:
            return _verified(g, name, m)
    return None


def _pipeline_concave(g: Graph) -> Forbidden:
    keep = minimal_non_hca(g)
    h, idx = induced_subgraph(g, keep)
    e = find_obstacle_enumeration(h)
    if e is None:
        raise GraphError("minimal non-HCA subgraph has no obstacle enumeration")
    out = essentialize(h, e)
    if out.kind == "forbidden":
        if out.name in ("c4_star", "co_c6"):
            return _verified(g, out.name, tuple(idx[v] for v in out.mapping))
        # the other small graphs contain a claw or a 5-wheel
        got = _search(g, ("claw", "5_wheel"), keep)
        if got is not None:
            return got
        raise GraphError("unclassifiable minimal non-HCA subgraph (internal bug)")
    from .generator import obst8_catalog

    for name, _, _ in obst8_catalog():
        mm = isomorphic(h, pattern_graph(name))
        if mm is not None:
            return _verified(g, name, tuple(idx[v] for v in mm))
    got = _search(g, ("claw", "5_wheel"), keep)
    if got is not None:
        return got
    raise GraphError("essential obstacle outside the known classes (internal bug)")


def _pipeline_non_concave(g: Graph) -> Forbidden:
    keep = minimal_non_concave(g)
    j, idx = induced_subgraph(g, keep)
    tag = classify_concave_forbidden(j)

    def direct(name: str) -> Forbidden:
        mm = isomorphic(j, pattern_graph(name))
        if mm is None:
            raise GraphError(f"classification mismatch for {name} (internal bug)")
        return _verified(g, name, tuple(idx[v] for v in mm))

    if tag.kind in ("net", "tent_star", "co_h3"):
        return direct(tag.kind)
    if tag.kind == "ck_star":
        return direct(f"c{tag.k}_star")
    if tag.kind == "co_c2k" and tag.k == 3:
        return direct("co_c6")
    if tag.kind == "co_odd_c_star":
        if tag.k == 1:
            return direct("claw")
        if tag.k == 2:
            return direct("5_wheel")
        if tag.k == 3:
            mm = isomorphic(j, catalog_graph("co_c7_star"))
            base = tuple(idx[v] for v in mm)
            out = multiple_partition_coC7(g, base)
            if out.kind == "partition":
                raise GraphError(
                    "graph is a multiple of the 7-class structure, hence "
                    "Helly circular-arc (internal bug)"
                )
            return _verified(g, out.name, out.mapping)
    # all remaining families contain co_p7 or co_3k2
    order = ("co_3k2", "co_p7") if tag == FamilyTag("co_b", 3) else ("co_p7", "co_3k2")
    got = _search(g, order, keep)
    if got is not None:
        return got
    raise GraphError("unclassifiable non-concave-round subgraph (internal bug)")


def quasi_line_pipeline(g: Graph) -> Forbidden:
    """A verified forbidden induced subgraph of a non-Helly-circular-arc
    graph, with name among claw, 5_wheel, the eight claw-free 5-wheel-free
    essential obstacle classes, co_c6, tent_star, c<k>_star, co_p7, co_3k2.

    Concave-round inputs go through minimization to an essential obstacle;
    the rest through a minimal non-concave-round subgraph and its family."""
    if isinstance(recognize_hca(g), HellyModelCert):
        raise GraphError("graph is Helly circular-arc; nothing to certify")
    if recognize_concave_round(g) is not None:
        return _pipeline_concave(g)
    return _pipeline_non_concave(g)


# -- forbidden-subgraph profiles -------------------------------------------

PROFILES = ("quasi_line_hca", "proper_and_helly")


def forbidden_profile_check(
    g: Graph, profile: str
) -> tuple[bool, Optional[str], Optional[tuple[int, ...]]]:
    """Whether g avoids every forbidden subgraph of the profile; on failure
    the witness name and induced-copy mapping are returned.

    quasi_line_hca characterizes the graphs that are simultaneously
    concave-round (equivalently quasi-line) and Helly circular-arc;
    proper_and_helly additionally excludes the complements of two
    figure-only graphs and characterizes proper-and-Helly circular-arc."""
    from .generator import obst8_catalog

    if profile not in PROFILES:
        raise GraphError(f"unknown profile {profile!r}")
    pats: list[tuple[str, Graph]] = [
        ("claw", catalog_graph("claw")),
        ("5_wheel", catalog_graph("5_wheel")),
        ("co_c7_star", catalog_graph("co_c7_star")),
        ("co_c6", catalog_graph("co_c6")),
        ("tent_star", catalog_graph("tent_star")),
    ]
    pats += [(name, pattern_graph(name)) for name, _, _ in obst8_catalog()]
    if profile == "proper_and_helly":
        pats += [
            ("co_h2", complement(figure_graph("h2"))),
            ("co_h4", complement(figure_graph("h4"))),
        ]
    for k in range(4, g.n):
        pats.append((f"c{k}_star", catalog_graph("ck_star", k)))
    for name, pat in pats:
        if pat.n > g.n:
            continue
        m = find_induced_copy(g, pat)
        if m is not None:
            return (False, name, m)
    return (True, None, None)
