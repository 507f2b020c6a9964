"""Systematic generation of essential obstacles from slot/boundary choices,
ternary bracelet counting, and the catalog of the eight claw-free,
5-wheel-free obstruction classes."""

from __future__ import annotations

import dataclasses
from functools import lru_cache
from itertools import product
from math import gcd

from .graphs import Graph, GraphError, build_graph, canonical_form, find_induced_copy, isomorphic
from .catalog import catalog_graph
from .obstacles import ObstacleEnumeration, is_essential, validate_enumeration

SLOT_TYPES = ("single", "pair")
BOUNDARIES = ("merge", "nonadjacent", "adjacent")


@dataclasses.dataclass(frozen=True)
class ObstacleSpec:
    """Blueprint for an essential obstacle: per-slot witness type and, for
    each boundary between consecutive slots, how the neighboring witnesses
    relate. Boundary i sits at core vertex i, between slot i-1 and slot i;
    merging (sharing the boundary witness) needs pairs on both sides, and two
    single witnesses can only be nonadjacent."""

    k: int
    slot_types: tuple[str, ...]
    boundaries: tuple[str, ...]

    def __post_init__(self):
        if self.k < 3 or len(self.slot_types) != self.k or len(self.boundaries) != self.k:
            raise GraphError("need k >= 3 slot types and boundaries")
        for t in self.slot_types:
            if t not in SLOT_TYPES:
                raise GraphError(f"bad slot type {t!r}")
        for i, b in enumerate(self.boundaries):
            if b not in BOUNDARIES:
                raise GraphError(f"bad boundary {b!r}")
            prev = self.slot_types[(i - 1) % self.k]
            here = self.slot_types[i]
            if b == "merge" and not (prev == "pair" and here == "pair"):
                raise GraphError("merge boundary requires pair slots on both sides")
            if b == "adjacent" and prev == "single" and here == "single":
                raise GraphError("two single witnesses cannot be adjacent")


def gen_obstacle(spec: ObstacleSpec) -> tuple[Graph, ObstacleEnumeration]:
    """The labeled graph and enumeration a spec describes: core 0..k-1, then
    witness ids in slot order; witnesses see the whole core except their one
    or two designated non-neighbors, and witness-witness edges are exactly the
    in-pair edges plus the adjacent boundaries."""
    k = spec.k
    nxt = k
    slots: list[tuple] = []
    for i in range(k):
        if spec.slot_types[i] == "single":
            slots.append(("single", nxt))
            nxt += 1
        elif spec.boundaries[i] == "merge":
            # share the first pair member with the previous slot's second
            slots.append(("pair", None, nxt))
            nxt += 1
        else:
            slots.append(("pair", nxt, nxt + 1))
            nxt += 2
    for i in range(k):
        if slots[i][0] == "pair" and slots[i][1] is None:
            slots[i] = ("pair", slots[(i - 1) % k][2], slots[i][2])
    n = nxt
    edges = [(a, b) for a in range(k) for b in range(a + 1, k)]
    non_nbrs: dict[int, set[int]] = {}
    for i, s in enumerate(slots):
        if s[0] == "single":
            non_nbrs.setdefault(s[1], set()).update({i, (i + 1) % k})
        else:
            non_nbrs.setdefault(s[1], set()).add(i)
            non_nbrs.setdefault(s[2], set()).add((i + 1) % k)
    for y in range(k, n):
        for v in range(k):
            if v not in non_nbrs[y]:
                edges.append((v, y))
    for i, s in enumerate(slots):
        if s[0] == "pair":
            edges.append((s[1], s[2]))
    for i in range(k):
        if spec.boundaries[i] == "adjacent":
            prev = slots[(i - 1) % k]
            last = prev[1] if prev[0] == "single" else prev[2]
            here = slots[i]
            first = here[1]
            edges.append((last, first))
    g = build_graph(n, edges)
    e = ObstacleEnumeration(tuple(range(k)), tuple(slots))
    check = validate_enumeration(g, e)
    if not check:
        raise GraphError(f"generated enumeration invalid: {check.violation}")
    if not is_essential(g, e):
        raise GraphError("generated enumeration not essential (internal bug)")
    return g, e


# -- ternary bracelets -----------------------------------------------------


def bracelet_canonical(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least representative under rotation and reversal."""
    k = len(seq)
    best = None
    for s in (seq, seq[::-1]):
        for r in range(k):
            cand = s[r:] + s[:r]
            if best is None or cand < best:
                best = cand
    return best


def _totient(d: int) -> int:
    out = 0
    for x in range(1, d + 1):
        if gcd(x, d) == 1:
            out += 1
    return out


def bracelet_count(k: int) -> int:
    """Number of length-k sequences over three symbols up to rotation and
    reversal: the cycle-index average over rotations plus the reflection
    term, halved."""
    if k < 3:
        raise GraphError("bracelets counted for k >= 3")
    rot = sum(_totient(d) * 3 ** (k // d) for d in range(1, k + 1) if k % d == 0) // k
    if k % 2:
        refl = 3 ** ((k + 1) // 2)
    else:
        refl = (3 ** (k // 2) + 3 ** (k // 2 + 1)) // 2
    return (rot + refl) // 2


# -- enumeration of classes ------------------------------------------------


def _legal_specs(k: int):
    for types in product(SLOT_TYPES, repeat=k):
        for bounds in product(BOUNDARIES, repeat=k):
            ok = True
            for i in range(k):
                prev, here = types[(i - 1) % k], types[i]
                if bounds[i] == "merge" and not (prev == "pair" and here == "pair"):
                    ok = False
                    break
                if bounds[i] == "adjacent" and prev == "single" and here == "single":
                    ok = False
                    break
            if ok:
                yield ObstacleSpec(k, types, bounds)


def enumerate_essential(
    k: int, claw_free_only: bool = False
) -> list[tuple[Graph, ObstacleEnumeration]]:
    """One representative per isomorphism class of essential obstacles with
    core length k, in deterministic (size, edges, canonical-form) order."""
    if not 3 <= k <= 6:
        raise GraphError("core length must be between 3 and 6")
    claw = catalog_graph("claw")
    seen: dict[bytes, tuple[Graph, ObstacleEnumeration]] = {}
    for spec in _legal_specs(k):
        g, e = gen_obstacle(spec)
        if claw_free_only and find_induced_copy(g, claw) is not None:
            continue
        key = canonical_form(g)
        if key not in seen:
            seen[key] = (g, e)
    return [
        seen[key]
        for key in sorted(seen, key=lambda c: (seen[c][0].n, seen[c][0].edge_count(), c))
    ]


_OBST8_NAMED = ("co_3k2", "co_p7", "net", "co_2p4")


@lru_cache(maxsize=1)
def obst8_catalog() -> tuple[tuple[str, Graph, ObstacleEnumeration], ...]:
    """The eight claw-free, 5-wheel-free essential obstacle classes.

    Four have direct constructions and are bound by isomorphism testing.
    Among the other four, co_h3 is the unique one that is not concave-round
    (it is a minimal forbidden subgraph for that class); the rest get the
    names co_f1, co_f2, co_f8 in ascending (vertex count, edge count,
    canonical form) order. co_f8 is the largest: ten vertices, all pair
    slots merged around a 5-core."""
    wheel5 = catalog_graph("5_wheel")
    classes: dict[bytes, tuple[Graph, ObstacleEnumeration]] = {}
    for k in (3, 4, 5):
        for g, e in enumerate_essential(k, claw_free_only=True):
            if find_induced_copy(g, wheel5) is not None:
                continue
            classes.setdefault(canonical_form(g), (g, e))
    ordered = [
        classes[key]
        for key in sorted(
            classes, key=lambda c: (classes[c][0].n, classes[c][0].edge_count(), c)
        )
    ]
    named: list[tuple[str, Graph, ObstacleEnumeration]] = []
    rest = []
    for g, e in ordered:
        for name in _OBST8_NAMED:
            if g.n == catalog_graph(name).n and isomorphic(g, catalog_graph(name)):
                named.append((name, g, e))
                break
        else:
            rest.append((g, e))
    from .concave import is_concave_round

    non_cr = [t for t in rest if not is_concave_round(t[0])]
    if len(non_cr) != 1:
        raise GraphError("expected exactly one non-concave-round unnamed class")
    named.append(("co_h3", *non_cr[0]))
    fallback = ["co_f1", "co_f2", "co_f8"]
    for i, (g, e) in enumerate(t for t in rest if t is not non_cr[0]):
        named.append((fallback[i], g, e))
    if len(named) != 8:
        raise GraphError(f"expected 8 classes, got {len(named)}")
    return tuple(named)
