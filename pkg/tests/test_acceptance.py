"""End-to-end acceptance suite.

Nine numbered criteria covering minimality of the six small forbidden
graphs, the generated obstacle classes and their certifying models,
bracelet counting, the claw-free census, essentialization fuzzing, the
profile equivalence, the multiple-partition algorithm, pipeline totality,
and oracle agreement. Each criterion prints a single pass/fail line.
"""

from itertools import permutations, product

from hca.catalog import catalog_graph
from hca.concave import (
    forbidden_profile_check,
    is_concave_round,
    pattern_graph,
    quasi_line_pipeline,
    validate_multiple_partition,
)
from hca.generator import (
    bracelet_canonical,
    bracelet_count,
    enumerate_essential,
    gen_obstacle,
    obst8_catalog,
)
from hca.graphs import (
    build_graph,
    canonical_form,
    check_induced_copy,
    enumerate_all_graphs,
    find_induced_copy,
    induced_subgraph,
    isomorphic,
)
from hca.models import ArcModel, helly_report, intersection_graph, is_helly_brute_force
from hca.obstacle_models import build_deleted_model, build_essential_model
from hca.obstacles import essentialize, is_essential, validate_enumeration
from hca.recognition import (
    BinaryMatrix,
    circular_ones_brute_force,
    circular_ones_row_order,
    clique_matrix,
    is_hca,
)
from test_concave import blow_up
from test_obstacles import mutate, random_spec

SMALL_MINIMAL = ("c4_star", "k23", "domino", "g3", "co_c6", "co_c5_plus_k2")
PARTITION_WHITELIST = ("claw", "5_wheel", "c4_star", "co_3k2", "co_p7")
CLASS_NAMES = (
    "co_3k2",
    "co_p7",
    "net",
    "co_2p4",
    "co_h3",
    "co_f1",
    "co_f2",
    "co_f8",
)


def _report(num, label, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"criterion {num} ({label}): {status}")
    assert not failures, f"criterion {num} ({label}): {failures[:5]}"


def test_criterion_1_small_graphs_are_minimally_non_helly():
    failures = []
    for name in SMALL_MINIMAL:
        g = catalog_graph(name)
        if is_hca(g):
            failures.append(f"{name} accepted")
        for v in range(g.n):
            sub, _ = induced_subgraph(g, set(range(g.n)) - {v})
            if not is_hca(sub):
                failures.append(f"{name} minus {v} rejected")
    _report(1, "six small graphs minimally non-Helly", failures)


def test_criterion_2_generated_classes_with_certifying_models():
    failures = []
    total = 0
    for k in range(3, 7):
        for g, e in enumerate_essential(k):
            total += 1
            tag = f"k={k} n={g.n} m={g.edge_count()}"
            if not validate_enumeration(g, e) or not is_essential(g, e):
                failures.append(f"{tag}: bad enumeration")
                continue
            model = build_essential_model(g, e)
            if intersection_graph(model) != g or helly_report(model).is_helly:
                failures.append(f"{tag}: bad obstacle model")
            for v in range(g.n):
                deleted = build_deleted_model(g, e, v)
                target, _ = induced_subgraph(g, set(range(g.n)) - {v})
                if (
                    intersection_graph(deleted) != target
                    or not helly_report(deleted).is_helly
                ):
                    failures.append(f"{tag}: bad deleted model at {v}")
                if not is_hca(target):
                    failures.append(f"{tag}: deletion of {v} rejected")
    if total != 831:
        failures.append(f"expected 831 classes, saw {total}")
    _report(2, "obstacle classes and their certifying models", failures)


def test_criterion_3_bracelet_counts():
    failures = []
    for k in range(3, 11):
        brute = len({bracelet_canonical(s) for s in product((0, 1, 2), repeat=k)})
        if bracelet_count(k) != brute:
            failures.append(f"count formula wrong at k={k}")
    for k, expect in ((3, 10), (4, 21), (5, 39), (6, 92)):
        all_pair = sum(
            1
            for _, e in enumerate_essential(k)
            if all(w[0] == "pair" for w in e.witnesses)
        )
        if all_pair != expect or bracelet_count(k) != expect:
            failures.append(f"all-pair classes at k={k}: {all_pair} != {expect}")
    _report(3, "bracelet counts", failures)


def test_criterion_4_claw_free_census():
    failures = []
    claw = catalog_graph("claw")
    w5 = catalog_graph("5_wheel")
    forms = {}
    for k in range(3, 7):
        for g, _ in enumerate_essential(k, claw_free_only=True):
            forms.setdefault(canonical_form(g), g)
    if len(forms) != 13:
        failures.append(f"claw-free classes: {len(forms)} != 13")
    wheel_free = [g for g in forms.values() if find_induced_copy(g, w5) is None]
    if len(wheel_free) != 8:
        failures.append(f"5-wheel-free classes: {len(wheel_free)} != 8")
    for name in ("co_3k2", "co_p7", "net", "co_2p4"):
        pat = catalog_graph(name)
        if not any(isomorphic(g, pat) for g in wheel_free):
            failures.append(f"{name} missing from the 5-wheel-free classes")
    for g in forms.values():
        if find_induced_copy(g, claw) is not None:
            failures.append("claw inside a claw-free class")
    _report(4, "claw-free census", failures)


def test_criterion_5_essentialize_fuzz(rng):
    failures = []
    for trial in range(1100):
        g, e = gen_obstacle(random_spec(rng))
        g2 = mutate(rng, g, e, extra_edges=4)
        try:
            out = essentialize(g2, e)
        except Exception as exc:  # noqa: BLE001 - any crash is a failure
            failures.append(f"trial {trial}: {exc}")
            continue
        if not out.vertices <= frozenset(range(g2.n)):
            failures.append(f"trial {trial}: vertices escape the input")
        if out.edges_classified > g2.edge_count():
            failures.append(f"trial {trial}: classified more edges than exist")
        if out.kind == "essential":
            if not validate_enumeration(g2, out.enumeration) or not is_essential(
                g2, out.enumeration
            ):
                failures.append(f"trial {trial}: non-essential outcome")
        elif out.kind == "forbidden":
            if not check_induced_copy(g2, catalog_graph(out.name), out.mapping):
                failures.append(f"trial {trial}: bad forbidden copy")
        else:
            failures.append(f"trial {trial}: unknown outcome {out.kind}")
    _report(5, "essentialization fuzz", failures)


def test_criterion_6_profile_equivalence_exhaustive():
    failures = []
    for n in range(1, 8):
        for g in enumerate_all_graphs(n):
            lhs = is_concave_round(g) and is_hca(g)
            ok, name, mapping = forbidden_profile_check(g, "quasi_line_hca")
            if lhs != ok:
                failures.append(f"n={n} adj={g.adj}: {lhs} vs {ok} ({name})")
            if not ok and not check_induced_copy(g, pattern_graph(name), mapping):
                failures.append(f"n={n} adj={g.adj}: unverified witness {name}")
    _report(6, "profile equivalence over all small graphs", failures)


def _random_multiple(rng, target):
    from hca.concave import multiple_partition_coC7

    h = catalog_graph(target)
    while True:
        sizes = [rng.randint(1, 4) for _ in range(h.n)]
        if sum(sizes) <= 30:
            break
    g, classes, reps = blow_up(h, sizes)
    if target == "co_z":
        base = tuple(reps[(3 * t) % 7] for t in range(7)) + (reps[7],)
    else:
        base = reps
    return h, g, classes, base


def test_criterion_7_multiple_partition(rng):
    from hca.concave import contract_true_twins, multiple_partition_coC7

    failures = []
    targets = ("co_c7_star", "co_z")
    for trial in range(200):
        target = targets[trial % 2]
        h, g, _, base = _random_multiple(rng, target)
        out = multiple_partition_coC7(g, base)
        if out.kind != "partition" or not validate_multiple_partition(g, out.partition):
            failures.append(f"multiple trial {trial}: no valid partition")
            continue
        rep, _ = contract_true_twins(g)
        if isomorphic(rep, h) is None:
            failures.append(f"multiple trial {trial}: contraction disagrees")
    done = 0
    attempts = 0
    while done < 200 and attempts < 4000:
        attempts += 1
        target = targets[done % 2]
        h, g, _, base = _random_multiple(rng, target)
        outside = sorted(set(range(g.n)) - set(base))
        if not outside:
            continue
        a = rng.choice(outside)
        b = rng.choice([v for v in range(g.n) if v != a])
        pair = tuple(sorted((a, b)))
        edges = set(map(tuple, map(sorted, g.edges())))
        edges.symmetric_difference_update({pair})
        g2 = build_graph(g.n, sorted(edges))
        rep, _ = contract_true_twins(g2)
        if any(
            isomorphic(rep, catalog_graph(t)) is not None for t in targets
        ):
            continue  # the flip left a multiple; not a destruction
        out = multiple_partition_coC7(g2, base)
        if out.kind != "forbidden" or out.name not in PARTITION_WHITELIST:
            failures.append(f"perturbation {done}: outcome {out.kind} {out.name}")
        elif not check_induced_copy(g2, pattern_graph(out.name), out.mapping):
            failures.append(f"perturbation {done}: unverified {out.name}")
        done += 1
    if done < 200:
        failures.append(f"only {done} destructive perturbations found")
    _report(7, "multiple-partition algorithm", failures)


def test_criterion_8_pipeline_totality():
    failures = []
    claw = catalog_graph("claw")
    w5 = catalog_graph("5_wheel")
    quasi_line_list = set(CLASS_NAMES) | {"claw", "5_wheel", "co_c6", "tent_star"}
    inputs = [
        g for n in range(1, 8) for g in enumerate_all_graphs(n) if not is_hca(g)
    ]
    inputs += [g for _, g, _ in obst8_catalog()]
    inputs += [catalog_graph("co_c2k", k) for k in range(3, 8)]
    inputs += [
        catalog_graph("co_odd_c_star", k)
        for k in range(1, 7)
        if not is_hca(catalog_graph("co_odd_c_star", k))
    ]
    inputs += [catalog_graph("ck_star", k) for k in range(4, 14)]
    for i, g in enumerate(inputs):
        try:
            out = quasi_line_pipeline(g)
        except Exception as exc:  # noqa: BLE001 - any crash is a failure
            failures.append(f"input {i} (n={g.n}): {exc}")
            continue
        if not check_induced_copy(g, pattern_graph(out.name), out.vertices):
            failures.append(f"input {i} (n={g.n}): unverified {out.name}")
        known = out.name in quasi_line_list or (
            out.name.startswith("c") and out.name.endswith("_star")
        )
        if not known:
            failures.append(f"input {i} (n={g.n}): unexpected name {out.name}")
        if (
            find_induced_copy(g, claw) is None
            and find_induced_copy(g, w5) is None
            and out.name in ("claw", "5_wheel")
        ):
            failures.append(f"input {i} (n={g.n}): {out.name} in a {out.name}-free graph")
    _report(8, "pipeline totality", failures)


def _clique_order_oracle(g):
    """Whether some circular order of the maximal cliques makes every
    vertex's clique set circularly consecutive."""
    matrix, cliques = clique_matrix(g)
    m = len(cliques)
    if m <= 2:
        return True
    cols = [
        sum(matrix.entry(r, c) << r for r in range(m)) for c in range(matrix.cols)
    ]

    def consecutive(order):
        for col in cols:
            hits = [i for i, row in enumerate(order) if (col >> row) & 1]
            if not hits or len(hits) == m:
                continue
            runs = sum(1 for a, b in zip(hits, hits[1:]) if b > a + 1)
            if runs and not (runs == 1 and hits[0] == 0 and hits[-1] == m - 1):
                return False
        return True

    return any(consecutive((0,) + p) for p in permutations(range(1, m)))


def test_criterion_9_oracle_agreement(rng):
    failures = []
    for trial in range(300):
        r = rng.randint(1, 8)
        c = rng.randint(1, 8)
        m = BinaryMatrix(r, c, tuple(rng.randrange(1 << c) for _ in range(r)))
        got = circular_ones_row_order(m)
        brute = circular_ones_brute_force(m)
        if (got is None) != (brute is None):
            failures.append(f"circular-ones trial {trial}: {got} vs {brute}")
    for trial in range(300):
        p = rng.randint(1, 8)
        n = rng.randint(1, 6)
        model = ArcModel(
            p,
            tuple((rng.randrange(p), rng.randrange(p)) for _ in range(n)),
        )
        if helly_report(model).is_helly != is_helly_brute_force(model):
            failures.append(f"helly trial {trial} disagrees")
    for n in range(1, 7):
        for g in enumerate_all_graphs(n):
            if is_hca(g) != _clique_order_oracle(g):
                failures.append(f"recognition disagrees at n={n} adj={g.adj}")
    _report(9, "oracle agreement", failures)
