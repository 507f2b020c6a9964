from itertools import product

import pytest

from hca.catalog import catalog_graph
from hca.concave import is_concave_round
from hca.generator import (
    ObstacleSpec,
    bracelet_canonical,
    bracelet_count,
    enumerate_essential,
    gen_obstacle,
    obst8_catalog,
)
from hca.graphs import GraphError, canonical_form, find_induced_copy, isomorphic
from hca.obstacles import is_essential, validate_enumeration


def test_spec_validation():
    with pytest.raises(GraphError):
        ObstacleSpec(2, ("single",) * 2, ("nonadjacent",) * 2)
    with pytest.raises(GraphError):
        # merge requires pair slots on both sides
        ObstacleSpec(3, ("single", "pair", "pair"), ("merge", "merge", "nonadjacent"))
    with pytest.raises(GraphError):
        # two single witnesses cannot be adjacent
        ObstacleSpec(3, ("single",) * 3, ("adjacent",) * 3)


def test_gen_obstacle_is_valid_and_essential():
    for types in product(("single", "pair"), repeat=3):
        bounds = tuple(
            "nonadjacent" for _ in range(3)
        )
        g, e = gen_obstacle(ObstacleSpec(3, types, bounds))
        assert validate_enumeration(g, e)
        assert is_essential(g, e)
        assert e.vertex_set() == frozenset(range(g.n))


def test_gen_obstacle_merge_shares_members():
    g, e = gen_obstacle(ObstacleSpec(3, ("pair",) * 3, ("merge",) * 3))
    # all boundaries merged: each witness is shared by two slots (octahedron)
    assert g.n == 6
    assert isomorphic(g, catalog_graph("co_3k2")) is not None


def brute_bracelet_count(k: int) -> int:
    return len({bracelet_canonical(s) for s in product((0, 1, 2), repeat=k)})


@pytest.mark.parametrize("k", range(3, 9))
def test_bracelet_count_matches_enumeration(k):
    assert bracelet_count(k) == brute_bracelet_count(k)


def test_bracelet_canonical_invariance():
    seq = (0, 1, 2, 2, 1)
    forms = {
        bracelet_canonical(seq[r:] + seq[:r]) for r in range(len(seq))
    } | {bracelet_canonical(tuple(reversed(seq)))}
    assert forms == {bracelet_canonical(seq)}


def test_enumerate_essential_k3():
    classes = enumerate_essential(3)
    assert len(classes) == 23
    forms = set()
    for g, e in classes:
        assert validate_enumeration(g, e)
        assert is_essential(g, e)
        forms.add(canonical_form(g))
    assert len(forms) == 23


def test_enumerate_essential_all_pair_k3():
    all_pair = [
        (g, e)
        for g, e in enumerate_essential(3)
        if all(w[0] == "pair" for w in e.witnesses)
    ]
    assert len(all_pair) == bracelet_count(3) == 10


def test_enumerate_essential_rejects_bad_k():
    with pytest.raises(GraphError):
        enumerate_essential(2)
    with pytest.raises(GraphError):
        enumerate_essential(7)


def test_obst8_catalog_names_and_bindings():
    cat = obst8_catalog()
    assert len(cat) == 8
    names = [name for name, _, _ in cat]
    assert sorted(names) == sorted(
        ["co_3k2", "co_p7", "net", "co_2p4", "co_h3", "co_f1", "co_f2", "co_f8"]
    )
    by_name = {name: (g, e) for name, g, e in cat}
    assert isomorphic(by_name["co_3k2"][0], catalog_graph("co_3k2")) is not None
    assert isomorphic(by_name["co_p7"][0], catalog_graph("co_p7")) is not None
    assert isomorphic(by_name["co_2p4"][0], catalog_graph("co_2p4")) is not None
    assert isomorphic(by_name["net"][0], catalog_graph("net")) is not None


def test_obst8_catalog_co_h3_is_the_non_concave_round_one():
    unnamed = {"co_h3", "co_f1", "co_f2", "co_f8"}
    for name, g, _ in obst8_catalog():
        if name in unnamed:
            assert is_concave_round(g) == (name != "co_h3")
    h3 = next(g for name, g, _ in obst8_catalog() if name == "co_h3")
    assert (h3.n, h3.edge_count()) == (7, 12)


def test_obst8_catalog_co_f8_is_the_all_merge_five_core():
    g, e = next((g, e) for name, g, e in obst8_catalog() if name == "co_f8")
    assert (g.n, g.edge_count(), e.k) == (10, 35, 5)
    assert all(w[0] == "pair" for w in e.witnesses)


def test_obst8_members_are_claw_and_5_wheel_free():
    claw = catalog_graph("claw")
    w5 = catalog_graph("5_wheel")
    for _, g, e in obst8_catalog():
        assert find_induced_copy(g, claw) is None
        assert find_induced_copy(g, w5) is None
        assert validate_enumeration(g, e)
        assert is_essential(g, e)
