import pytest

from hca.catalog import (
    UntranscribedFigureGraph,
    catalog_graph,
    figure_graphs_available,
)
from hca.concave import (
    FamilyTag,
    classify_concave_forbidden,
    contract_true_twins,
    forbidden_profile_check,
    is_concave_round,
    minimal_non_concave,
    multiple_partition_coC7,
    pattern_graph,
    quasi_line_pipeline,
    recognize_concave_round,
    validate_multiple_partition,
)
from hca.graphs import (
    GraphError,
    build_graph,
    check_induced_copy,
    disjoint_union,
    induced_subgraph,
    isomorphic,
)
from hca.recognition import is_hca

PIPELINE_NAMES = {
    "claw",
    "5_wheel",
    "co_3k2",
    "co_p7",
    "net",
    "co_2p4",
    "co_h3",
    "co_f1",
    "co_f2",
    "co_f8",
    "co_c6",
    "c4_star",
    "tent_star",
}


def blow_up(h, sizes):
    """Multiple of h with sizes[v] copies of vertex v; returns the graph,
    the classes, and one representative per pattern vertex."""
    classes = []
    nxt = 0
    for v in range(h.n):
        classes.append(list(range(nxt, nxt + sizes[v])))
        nxt += sizes[v]
    edges = []
    for v in range(h.n):
        c = classes[v]
        edges += [(a, b) for i, a in enumerate(c) for b in c[i + 1 :]]
        for u in range(v + 1, h.n):
            if h.has_edge(v, u):
                edges += [(a, b) for a in c for b in classes[u]]
    g = build_graph(nxt, edges)
    return g, classes, tuple(c[0] for c in classes)


def test_recognize_concave_round_positive():
    for g in (catalog_graph("cycle", 7), catalog_graph("complete", 5), catalog_graph("path", 4)):
        order = recognize_concave_round(g)
        assert order is not None
        assert sorted(order) == list(range(g.n))


def test_recognize_concave_round_negative():
    for name in ("net", "tent_star", "claw"):
        assert recognize_concave_round(catalog_graph(name)) is None


def test_recognize_concave_round_empty():
    assert recognize_concave_round(build_graph(0, [])) == ()


def test_minimal_non_concave_is_minimal():
    g = disjoint_union(catalog_graph("net"), catalog_graph("path", 2))
    keep = minimal_non_concave(g)
    h, _ = induced_subgraph(g, keep)
    assert not is_concave_round(h)
    for v in range(h.n):
        sub, _ = induced_subgraph(h, set(range(h.n)) - {v})
        assert is_concave_round(sub)


def test_minimal_non_concave_rejects_concave_input():
    with pytest.raises(GraphError):
        minimal_non_concave(catalog_graph("cycle", 5))


@pytest.mark.parametrize(
    "name,params,tag",
    [
        ("net", (), FamilyTag("net")),
        ("tent_star", (), FamilyTag("tent_star")),
        ("ck_star", (6,), FamilyTag("ck_star", 6)),
        ("co_c2k", (4,), FamilyTag("co_c2k", 4)),
        ("co_c7_star", (), FamilyTag("co_odd_c_star", 3)),
        ("co_odd_c_star", (4,), FamilyTag("co_odd_c_star", 4)),
    ],
)
def test_classify_concave_forbidden(name, params, tag):
    assert classify_concave_forbidden(catalog_graph(name, *params)) == tag


def test_classify_concave_forbidden_co_h3():
    from hca.generator import obst8_catalog

    h3 = next(g for nm, g, _ in obst8_catalog() if nm == "co_h3")
    assert classify_concave_forbidden(h3) == FamilyTag("co_h3")


def test_classify_concave_forbidden_unknown():
    assert classify_concave_forbidden(catalog_graph("path", 3)).kind == "unknown"


def test_contract_true_twins():
    h = catalog_graph("cycle", 5)
    g, classes, _ = blow_up(h, [2, 1, 3, 1, 2])
    rep, got_classes = contract_true_twins(g)
    assert isomorphic(rep, h) is not None
    assert sorted(map(sorted, got_classes)) == sorted(map(sorted, classes))


def test_contract_true_twins_twin_free_graph():
    g = catalog_graph("path", 4)
    rep, classes = contract_true_twins(g)
    assert rep == g
    assert all(len(c) == 1 for c in classes)


def test_multiple_partition_base_co_c7_star():
    g = catalog_graph("co_c7_star")
    out = multiple_partition_coC7(g, tuple(range(8)))
    assert out.kind == "partition"
    assert not out.partition.w
    assert validate_multiple_partition(g, out.partition)


def test_multiple_partition_base_co_z():
    g = catalog_graph("co_z")
    base = tuple((3 * t) % 7 for t in range(7)) + (7,)
    out = multiple_partition_coC7(g, base)
    assert out.kind == "partition"
    assert out.partition.w == frozenset({8})
    assert validate_multiple_partition(g, out.partition)


def test_multiple_partition_of_blow_up(rng):
    for target in ("co_c7_star", "co_z"):
        h = catalog_graph(target)
        sizes = [rng.randint(1, 3) for _ in range(h.n)]
        g, _, reps = blow_up(h, sizes)
        if target == "co_z":
            base = tuple(reps[(3 * t) % 7] for t in range(7)) + (reps[7],)
        else:
            base = reps
        out = multiple_partition_coC7(g, base)
        assert out.kind == "partition"
        assert validate_multiple_partition(g, out.partition)


def test_multiple_partition_perturbation_yields_forbidden():
    h = catalog_graph("co_c7_star")
    g, _, reps = blow_up(h, [2] + [1] * 7)
    # remove the in-class edge: the two copies of vertex 0 stop being twins
    edges = [e for e in g.edges() if set(e) != {0, 1}]
    g2 = build_graph(g.n, edges)
    out = multiple_partition_coC7(g2, tuple(reps))
    assert out.kind == "forbidden"
    assert out.name in ("claw", "5_wheel", "c4_star", "co_3k2", "co_p7")
    assert check_induced_copy(g2, pattern_graph(out.name), out.mapping)


def test_multiple_partition_rejects_bad_base():
    g = catalog_graph("co_c7_star")
    with pytest.raises(GraphError):
        multiple_partition_coC7(g, (0, 1, 2, 3, 4, 5, 6, 0))


def test_forbidden_profile_check_positive():
    ok, name, mapping = forbidden_profile_check(catalog_graph("cycle", 6), "quasi_line_hca")
    assert ok and name is None and mapping is None


def test_forbidden_profile_check_negative_verifies_witness():
    for gname in ("co_c6", "claw", "net"):
        g = catalog_graph(gname)
        ok, name, mapping = forbidden_profile_check(g, "quasi_line_hca")
        assert not ok
        assert check_induced_copy(g, pattern_graph(name), mapping)


def test_forbidden_profile_check_unknown_profile():
    with pytest.raises(GraphError):
        forbidden_profile_check(catalog_graph("claw"), "bogus")


def test_forbidden_profile_proper_and_helly():
    g = catalog_graph("cycle", 6)
    if figure_graphs_available("h2", "h4"):
        ok, _, _ = forbidden_profile_check(g, "proper_and_helly")
        assert ok
    else:
        with pytest.raises(UntranscribedFigureGraph):
            forbidden_profile_check(g, "proper_and_helly")


def test_pattern_graph_names():
    assert isomorphic(pattern_graph("c5_star"), catalog_graph("ck_star", 5)) is not None
    assert isomorphic(pattern_graph("claw"), catalog_graph("claw")) is not None
    assert pattern_graph("co_f8").n == 10
    with pytest.raises(GraphError):
        pattern_graph("no_such_graph")


def test_pipeline_rejects_hca_input():
    with pytest.raises(GraphError):
        quasi_line_pipeline(catalog_graph("path", 4))


@pytest.mark.parametrize(
    "gname,params",
    [
        ("co_c6", ()),
        ("c4_star", ()),
        ("net", ()),
        ("tent_star", ()),
        ("co_c2k", (4,)),
        ("co_odd_c_star", (4,)),
        ("ck_star", (6,)),
        ("co_2p4", ()),
    ],
)
def test_pipeline_on_known_non_hca_graphs(gname, params):
    g = catalog_graph(gname, *params)
    assert not is_hca(g)
    out = quasi_line_pipeline(g)
    assert out.name in PIPELINE_NAMES or out.name.endswith("_star")
    assert check_induced_copy(g, pattern_graph(out.name), out.vertices)


def test_pipeline_emits_named_obstacle_for_its_own_class():
    out = quasi_line_pipeline(catalog_graph("net"))
    assert out.name == "net"
