"""Core graph type: bitset adjacency, cliques, induced-subgraph and isomorphism machinery."""

from __future__ import annotations

import dataclasses
from functools import lru_cache
from typing import Iterable, Optional

MAX_VERTICES = 64


class GraphError(ValueError):
    pass


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int):
    """Iterate set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclasses.dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or self.n > MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length mismatch")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"neighbor of {v} out of range")
            if row & (1 << v):
                raise GraphError(f"self-loop at {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] & (1 << v):
                    raise GraphError(f"asymmetric edge {v},{u}")

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def non_neighbors_mask(self, v: int) -> int:
        """Vertices different from v and nonadjacent to v (co-neighborhood)."""
        full = (1 << self.n) - 1
        return full & ~self.closed_mask(v)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, v + u + 1))
        return out

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range: ({u},{v})")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~(g.adj[v] | (1 << v)) for v in range(g.n)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by the given vertex set.

    Returns (subgraph, index_map) where index_map[new_id] = old_id; new ids
    follow ascending old-id order.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for i, v in enumerate(vs):
        for u in bits(g.adj[v]):
            if u in pos:
                adj[i] |= 1 << pos[u]
    return Graph(len(vs), tuple(adj)), tuple(vs)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def with_isolated_vertex(g: Graph) -> Graph:
    """The graph G* = G + K1."""
    return Graph(g.n + 1, g.adj + (0,))


# -- maximal cliques -----------------------------------------------------


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques, sorted by their sorted vertex tuples."""
    if g.n > MAX_VERTICES:
        raise GraphError("graph too large")
    out: list[int] = []
    adj = g.adj

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        # pivot: vertex of p|x with most neighbors in p
        pivot, best = -1, -1
        for u in bits(p | x):
            c = popcount(adj[u] & p)
            if c > best:
                pivot, best = u, c
        for v in bits(p & ~adj[pivot]):
            expand(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return sorted((frozenset(bits(m)) for m in out), key=sorted)


# -- induced subgraph isomorphism ----------------------------------------


def _search_order(pattern: Graph) -> list[int]:
    """Connectivity-first vertex order for backtracking."""
    if pattern.n == 0:
        return []
    order = [max(range(pattern.n), key=lambda v: (pattern.degree(v), -v))]
    placed = set(order)
    while len(order) < pattern.n:
        nxt = max(
            (v for v in range(pattern.n) if v not in placed),
            key=lambda v: (len(placed & pattern.neighbors(v)), pattern.degree(v), -v),
        )
        order.append(nxt)
        placed.add(nxt)
    return order


def find_induced_copy(host: Graph, pattern: Graph) -> Optional[tuple[int, ...]]:
    """An induced copy of pattern in host, as a tuple m with m[p] = host vertex.

    Exhaustive backtracking with degree and adjacency-profile pruning.
    """
    if pattern.n > host.n:
        return None
    order = _search_order(pattern)
    mapping = [-1] * pattern.n

    def rec(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        p = order[idx]
        pdeg = pattern.degree(p)
        for gv in range(host.n):
            if used & (1 << gv) or popcount(host.adj[gv]) < pdeg:
                continue
            ok = True
            for q in order[:idx]:
                if pattern.has_edge(p, q) != host.has_edge(gv, mapping[q]):
                    ok = False
                    break
            if ok:
                mapping[p] = gv
                if rec(idx + 1, used | (1 << gv)):
                    return True
                mapping[p] = -1
        return False

    if rec(0, 0):
        return tuple(mapping)
    return None


def check_induced_copy(host: Graph, pattern: Graph, mapping: tuple[int, ...]) -> bool:
    """Independent check of the induced-copy invariant."""
    if len(mapping) != pattern.n or len(set(mapping)) != pattern.n:
        return False
    for u in range(pattern.n):
        for v in range(u + 1, pattern.n):
            if pattern.has_edge(u, v) != host.has_edge(mapping[u], mapping[v]):
                return False
    return True


# -- canonical form and isomorphism --------------------------------------


def _refine(adj: tuple[int, ...], partition: list[list[int]]) -> list[list[int]]:
    partition = [list(c) for c in partition]
    changed = True
    while changed:
        changed = False
        masks = [mask_of(c) for c in partition]
        for ci, cell in enumerate(partition):
            if len(cell) == 1:
                continue
            sigs: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(popcount(adj[v] & m) for m in masks)
                sigs.setdefault(sig, []).append(v)
            if len(sigs) > 1:
                parts = [sigs[s] for s in sorted(sigs)]
                partition[ci : ci + 1] = parts
                changed = True
                break
    return partition


def _is_free_module(adj: tuple[int, ...], cell: list[int]) -> bool:
    """Cell whose internal order never matters: a module inducing a clique or
    an independent set (all internal orders are related by automorphisms)."""
    cmask = mask_of(cell)
    outside = {adj[v] & ~cmask for v in cell}
    if len(outside) != 1:
        return False
    inner = [popcount(adj[v] & cmask) for v in cell]
    k = len(cell)
    return all(x == 0 for x in inner) or all(x == k - 1 for x in inner)


def canonical_labeling(g: Graph) -> tuple[bytes, tuple[int, ...]]:
    """Canonical form of g and a relabeling realizing it.

    Returns (key, perm) with perm[new_label] = original vertex; two graphs
    have equal keys iff they are isomorphic. Individualization-refinement
    taking the minimum key over all leaves.
    """
    n, adj = g.n, g.adj
    if n == 0:
        return b"", ()
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(popcount(adj[v]), []).append(v)
    initial = [by_deg[d] for d in sorted(by_deg)]
    best: list[Optional[tuple[bytes, tuple[int, ...]]]] = [None]

    def leaf_key(order: list[int]) -> bytes:
        pos = {v: i for i, v in enumerate(order)}
        rows = bytearray()
        for v in order:
            row = 0
            for u in bits(adj[v]):
                row |= 1 << pos[u]
            rows += row.to_bytes(8, "big")
        return bytes(rows)

    def rec(partition: list[list[int]]):
        partition = _refine(adj, partition)
        ti = next((i for i, c in enumerate(partition) if len(c) > 1), None)
        if ti is None:
            order = [c[0] for c in partition]
            key = leaf_key(order)
            if best[0] is None or key < best[0][0]:
                best[0] = (key, tuple(order))
            return
        cell = partition[ti]
        if _is_free_module(adj, cell):
            rec(partition[:ti] + [[v] for v in cell] + partition[ti + 1 :])
            return
        for v in cell:
            rest = [u for u in cell if u != v]
            rec(partition[:ti] + [[v], rest] + partition[ti + 1 :])

    rec(initial)
    assert best[0] is not None
    return best[0]


def canonical_form(g: Graph) -> bytes:
    return canonical_labeling(g)[0]


def isomorphic(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """Isomorphism from h onto g as a tuple m with m[h_vertex] = g_vertex."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    gkey, gperm = canonical_labeling(g)
    hkey, hperm = canonical_labeling(h)
    if gkey != hkey:
        return None
    mapping = [-1] * h.n
    for i in range(h.n):
        mapping[hperm[i]] = gperm[i]
    return tuple(mapping)


# -- exhaustive small-graph enumeration ----------------------------------

_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


@lru_cache(maxsize=None)
def enumerate_all_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on n vertices, n <= 7."""
    if not 1 <= n <= 7:
        raise GraphError("enumeration supported for 1 <= n <= 7")
    reps = [Graph(1, (0,))]
    for size in range(2, n + 1):
        seen: dict[bytes, Graph] = {}
        for g in reps:
            for mask in range(1 << (size - 1)):
                adj = [g.adj[v] | ((mask >> v & 1) << (size - 1)) for v in range(size - 1)]
                adj.append(mask)
                h = Graph(size, tuple(adj))
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = h
        reps = [seen[k] for k in sorted(seen, key=lambda k: (seen[k].edge_count(), k))]
    assert len(reps) == _CLASS_COUNTS[n]
    return tuple(reps)


# -- text format ---------------------------------------------------------


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "graph" or len(parts) != 2:
                raise GraphError(f"expected 'graph <n>', got {line!r}")
            n = int(parts[1])
        else:
            if len(parts) != 2:
                raise GraphError(f"expected 'u v', got {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise GraphError("missing 'graph <n>' header")
    return build_graph(n, edges)
