"""Catalog of named small graphs and graph families.

Text-definable entries are constructed directly; a handful of graphs are
only known from figures and load from an optional catalog/figures.txt
transcription file.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .graphs import Graph, GraphError, build_graph, complement, disjoint_union, with_isolated_vertex


class UntranscribedFigureGraph(GraphError):
    """Raised for figure-only catalog entries with no transcription file."""


def complete(k: int) -> Graph:
    return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def path(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycle needs k >= 3")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(p: int, q: int) -> Graph:
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def claw() -> Graph:
    return complete_bipartite(1, 3)


def wheel(k: int) -> Graph:
    """C_k plus a hub adjacent to every cycle vertex."""
    g = cycle(k)
    return build_graph(k + 1, g.edges() + [(i, k) for i in range(k)])


def complete_sun(k: int) -> Graph:
    """S_k: clique w_0..w_{k-1} (ids 0..k-1); v_i (id k+i) sees w_{i-1}, w_i."""
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for i in range(k):
        edges += [(k + i, (i - 1) % k), (k + i, i)]
    return build_graph(2 * k, edges)


def net() -> Graph:
    """Triangle 0,1,2 with pendants 3,4,5."""
    return build_graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)])


def tent() -> Graph:
    return complete_sun(3)


def tent_star() -> Graph:
    return with_isolated_vertex(tent())


def _pseudo_domino(handles: int) -> Graph:
    # labels a1,a2,b1,b2,c1,c2 = 0..5; base edges of the pseudo-domino
    edges = [(0, 1), (2, 3), (4, 5), (0, 2), (1, 3), (2, 4), (3, 5)]
    if handles >= 1:
        edges.append((0, 4))  # a1c1
    if handles >= 2:
        edges.append((1, 5))  # a2c2
    return build_graph(6, edges)


def domino() -> Graph:
    return _pseudo_domino(0)


def g3() -> Graph:
    return _pseudo_domino(1)


def co_c6() -> Graph:
    return _pseudo_domino(2)


def co_c5_plus_k2() -> Graph:
    return complement(disjoint_union(cycle(5), complete(2)))


def ck_star(k: int) -> Graph:
    """C_k plus an isolated vertex."""
    return with_isolated_vertex(cycle(k))


def co_c2k(k: int) -> Graph:
    """Complement of the even cycle C_{2k}."""
    return complement(cycle(2 * k))


def co_odd_c_star(k: int) -> Graph:
    """Complement of C_{2k+1} + K1; k=1 is the claw, k=2 the 5-wheel."""
    return complement(ck_star(2 * k + 1))


def co_c7_star() -> Graph:
    """Vertices 0..6 are the cycle part, 7 the universal vertex."""
    return co_odd_c_star(3)


def co_z() -> Graph:
    """The complement of Z, built from its clique partition.

    Vertices 0..6 are cyclic classes adjacent at circular distance 1 and 2,
    7 is adjacent to all of them, and 8 is adjacent to classes 0+-2, 0+-3.
    """
    edges = [(i, (i + d) % 7) for i in range(7) for d in (1, 2)]
    edges += [(7, i) for i in range(7)]
    edges += [(8, 2), (8, 3), (8, 4), (8, 5)]
    return build_graph(9, edges)


def co_n_k2(k: int) -> Graph:
    """Complement of k disjoint edges; co-3K2 is the octahedron."""
    g = complete(2)
    for _ in range(k - 1):
        g = disjoint_union(g, complete(2))
    return complement(g)


def co_path(k: int) -> Graph:
    return complement(path(k))


def co_2p4() -> Graph:
    return complement(disjoint_union(path(4), path(4)))


# -- figure-only entries -------------------------------------------------

_FIGURE_ONLY = {"h2", "h3", "h4", "pyramid1", "pyramid2", "u4"}


def _figure_paths() -> list[str]:
    here = os.path.dirname(__file__)
    return [
        os.path.join(os.getcwd(), "catalog", "figures.txt"),
        os.path.join(here, "catalog", "figures.txt"),
    ]


@lru_cache(maxsize=1)
def _load_figures() -> dict[str, Graph]:
    for p in _figure_paths():
        if os.path.exists(p):
            return _parse_figures(open(p).read())
    return {}


def _parse_figures(text: str) -> dict[str, Graph]:
    out: dict[str, Graph] = {}
    name, n, edges = None, 0, []

    def flush():
        if name is not None:
            out[name] = build_graph(n, edges)

    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "graph":
            flush()
            name, n, edges = parts[1], int(parts[2]), []
        else:
            edges.append((int(parts[0]), int(parts[1])))
    flush()
    return out


def figure_graph(name: str) -> Graph:
    figs = _load_figures()
    if name not in figs:
        raise UntranscribedFigureGraph(
            f"graph {name!r} is only defined by a figure; provide catalog/figures.txt"
        )
    return figs[name]


# -- dispatch ------------------------------------------------------------

_PLAIN = {
    "claw": claw,
    "net": net,
    "tent": tent,
    "tent_star": tent_star,
    "domino": domino,
    "g3": g3,
    "co_c6": co_c6,
    "co_c5_plus_k2": co_c5_plus_k2,
    "co_c7_star": co_c7_star,
    "co_z": co_z,
    "co_2p4": co_2p4,
    "co_3k2": lambda: co_n_k2(3),
    "k23": lambda: complete_bipartite(2, 3),
    "c4_star": lambda: ck_star(4),
    "co_p7": lambda: co_path(7),
    "5_wheel": lambda: wheel(5),
}

_PARAM = {
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "complete_bipartite": complete_bipartite,
    "wheel": wheel,
    "complete_sun": complete_sun,
    "ck_star": ck_star,
    "co_c2k": co_c2k,
    "co_odd_c_star": co_odd_c_star,
    "co_n_k2": co_n_k2,
    "co_path": co_path,
}


def catalog_graph(name: str, *params: int) -> Graph:
    if name in _PLAIN:
        if params:
            raise GraphError(f"{name} takes no parameters")
        return _PLAIN[name]()
    if name in _PARAM:
        return _PARAM[name](*params)
    if name in _FIGURE_ONLY or name.startswith("b"):
        return figure_graph(name)
    raise GraphError(f"unknown catalog graph {name!r}")


def figure_graphs_available(*names: str) -> bool:
    figs = _load_figures()
    return all(n in figs for n in names)
