"""Command-line front end: recognition, essentialization, the certifying
pipeline, obstacle-class enumeration, and re-verification of emitted
certificates.

Exit codes: 0 = question answered (certificate on stdout), 2 = input error,
3 = size bound exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from .graphs import (
    Graph,
    GraphError,
    canonical_form,
    check_induced_copy,
    format_graph,
    induced_subgraph,
    parse_graph,
)
from .models import (
    ArcModel,
    ModelError,
    format_model,
    helly_report,
    intersection_graph,
)
from .recognition import (
    HellyModelCert,
    find_obstacle_enumeration,
    minimal_non_hca,
    recognize_hca,
)
from .obstacles import (
    ObstacleEnumeration,
    ObstacleError,
    format_enumeration,
    is_essential,
    parse_enumeration,
    validate_enumeration,
    essentialize,
)
from .concave import pattern_graph, quasi_line_pipeline
from .generator import bracelet_count, enumerate_essential, obst8_catalog

MAX_VERTICES = 64


class InputError(Exception):
    pass


class SizeError(Exception):
    pass


# -- JSON mirrors ----------------------------------------------------------


def model_to_json(model: ArcModel) -> dict:
    arcs = []
    for i, (s, e) in enumerate(model.arcs):
        if i in model.full_circle:
            arcs.append({"id": i, "full": True})
        else:
            arcs.append({"id": i, "start": s, "end": e})
    return {"circle_size": model.circle_size, "n": model.n, "arcs": arcs}


def model_from_json(data: dict) -> ArcModel:
    arcs = [(0, 0)] * data["n"]
    full = set()
    for a in data["arcs"]:
        if a.get("full"):
            full.add(a["id"])
        else:
            arcs[a["id"]] = (a["start"], a["end"])
    return ArcModel(data["circle_size"], tuple(arcs), frozenset(full))


def enumeration_to_json(e: ObstacleEnumeration) -> dict:
    wits = []
    for i, w in enumerate(e.witnesses):
        if w[0] == "single":
            wits.append({"slot": i + 1, "type": "single", "w": w[1]})
        else:
            wits.append({"slot": i + 1, "type": "pair", "u": w[1], "z": w[2]})
    return {"k": e.k, "core": list(e.core), "witnesses": wits}


def enumeration_from_json(data: dict) -> ObstacleEnumeration:
    wits: list[tuple] = [None] * data["k"]
    for w in data["witnesses"]:
        i = w["slot"] - 1
        if w["type"] == "single":
            wits[i] = ("single", w["w"])
        else:
            wits[i] = ("pair", w["u"], w["z"])
    return ObstacleEnumeration(tuple(data["core"]), tuple(wits))


# -- certificate construction and verification -----------------------------


def _helly_certificate(model: ArcModel) -> dict:
    return {"status": "helly", "checker": "helly_model", "model": model_to_json(model)}


def _forbidden_certificate(name: str, vertices) -> dict:
    return {
        "status": "not_hca",
        "checker": "forbidden_copy",
        "forbidden": {"name": name, "vertices": list(vertices)},
    }


def _obstacle_certificate(e: ObstacleEnumeration) -> dict:
    return {
        "status": "not_hca",
        "checker": "essential_enumeration",
        "obstacle": enumeration_to_json(e),
    }


def verify_certificate(g: Graph, cert: dict) -> bool:
    """Re-check a certificate against its graph using only the stated
    checker: a Helly model must realize the graph, a forbidden copy must be
    induced, an obstacle must be a valid essential enumeration; the claimed
    status is re-derived by recognition."""
    try:
        status = cert["status"]
        if status == "helly":
            model = model_from_json(cert["model"])
            return (
                intersection_graph(model) == g and helly_report(model).is_helly
            )
        if status != "not_hca":
            return False
        if isinstance(recognize_hca(g), HellyModelCert):
            return False
        if "forbidden" in cert:
            name = cert["forbidden"]["name"]
            mapping = tuple(cert["forbidden"]["vertices"])
            if not check_induced_copy(g, pattern_graph(name), mapping):
                return False
        if "obstacle" in cert:
            e = enumeration_from_json(cert["obstacle"])
            if not validate_enumeration(g, e) or not is_essential(g, e):
                return False
        return True
    except (GraphError, ModelError, ObstacleError, KeyError, IndexError, TypeError):
        return False


# -- commands --------------------------------------------------------------


def _load_graph(path: str) -> Graph:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    for line in text.splitlines():
        parts = line.split()
        if parts and parts[0] == "graph" and len(parts) == 2 and parts[1].isdigit():
            if int(parts[1]) > MAX_VERTICES:
                raise SizeError(
                    f"graph has {parts[1]} > {MAX_VERTICES} vertices"
                )
            break
    try:
        return parse_graph(text)
    except (GraphError, ValueError) as exc:
        raise InputError(f"bad graph file {path}: {exc}")


def _translate(e: ObstacleEnumeration, idx) -> ObstacleEnumeration:
    core = tuple(idx[v] for v in e.core)
    wits = []
    for w in e.witnesses:
        if w[0] == "single":
            wits.append(("single", idx[w[1]]))
        else:
            wits.append(("pair", idx[w[1]], idx[w[2]]))
    return ObstacleEnumeration(core, tuple(wits))


_SMALL_FORBIDDEN = ("c4_star", "k23", "domino", "g3", "co_c6", "co_c5_plus_k2")


def _extraction_certificate(h: Graph, idx) -> dict:
    """Negative certificate from a minimal non-HCA induced subgraph h (idx
    maps its vertices back to the host): an essential enumeration when h is
    an obstacle, a named forbidden copy when it is one of the six small
    minimal graphs, and a bare status otherwise."""
    from .graphs import isomorphic

    e = None
    if h.n <= 12:
        e = find_obstacle_enumeration(h)
    if e is not None:
        out = essentialize(h, e)
        if out.kind == "forbidden":
            return _forbidden_certificate(out.name, tuple(idx[v] for v in out.mapping))
        return _obstacle_certificate(_translate(out.enumeration, idx))
    for name in _SMALL_FORBIDDEN:
        mm = isomorphic(h, pattern_graph(name))
        if mm is not None:
            return _forbidden_certificate(name, tuple(idx[v] for v in mm))
    return {"status": "not_hca", "checker": "recognition"}


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    got = recognize_hca(g)
    if isinstance(got, HellyModelCert):
        cert = _helly_certificate(got.model)
    else:
        keep = minimal_non_hca(g)
        h, idx = induced_subgraph(g, keep)
        cert = _extraction_certificate(h, idx)
    if not verify_certificate(g, cert):
        raise InputError("certificate failed self-verification (internal bug)")
    print(json.dumps(cert, indent=2))
    return 0


def cmd_pipeline(args) -> int:
    g = _load_graph(args.graph)
    if isinstance(recognize_hca(g), HellyModelCert):
        raise InputError("graph is Helly circular-arc; nothing to certify")
    out = quasi_line_pipeline(g)
    cert = _forbidden_certificate(out.name, out.vertices)
    if not verify_certificate(g, cert):
        raise InputError("certificate failed self-verification (internal bug)")
    print(json.dumps(cert, indent=2))
    return 0


def cmd_essentialize(args) -> int:
    g = _load_graph(args.graph)
    try:
        with open(args.obstacle) as fh:
            e = parse_enumeration(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {args.obstacle}: {exc}")
    except (ObstacleError, GraphError, ValueError) as exc:
        raise InputError(f"bad obstacle file {args.obstacle}: {exc}")
    check = validate_enumeration(g, e)
    if not check:
        raise InputError(f"invalid enumeration: {check.violation}")
    out = essentialize(g, e)
    if out.kind == "forbidden":
        cert = _forbidden_certificate(out.name, out.mapping)
    else:
        cert = _obstacle_certificate(out.enumeration)
    if not verify_certificate(g, cert):
        raise InputError("certificate failed self-verification (internal bug)")
    print(json.dumps(cert, indent=2))
    return 0


def cmd_enumerate(args) -> int:
    if args.obst8:
        classes = [(name, g, e) for name, g, e in obst8_catalog()]
        summary = f"classes={len(classes)}"
        family = "obst8"
    else:
        if args.k is None:
            raise InputError("--k is required unless --obst8 is given")
        if not 3 <= args.k <= 6:
            raise SizeError("--k must be between 3 and 6")
        family = "clawfree" if args.claw_free else "essential"
        got = enumerate_essential(args.k, claw_free_only=args.claw_free)
        classes = [(family, g, e) for g, e in got]
        summary = f"classes={len(classes)} bracelets={bracelet_count(args.k)}"
    outdir = args.out
    os.makedirs(outdir, exist_ok=True)
    for name, g, e in classes:
        digest = hashlib.sha256(canonical_form(g)).hexdigest()[:12]
        stem = os.path.join(outdir, f"{name}_{e.k}_{digest}")
        with open(stem + ".graph", "w") as fh:
            fh.write(format_graph(g))
        with open(stem + ".obstacle", "w") as fh:
            fh.write(format_enumeration(e))
    print(summary)
    return 0


def cmd_selftest(args) -> int:
    directory = args.dir
    names = sorted(f for f in os.listdir(directory) if f.endswith(".json"))
    failures = 0
    for name in names:
        stem = name[: -len(".json")]
        gpath = os.path.join(directory, stem + ".graph")
        jpath = os.path.join(directory, name)
        try:
            with open(jpath) as fh:
                cert = json.load(fh)
            g = _load_graph(gpath)
            ok = verify_certificate(g, cert)
        except (InputError, SizeError, json.JSONDecodeError):
            ok = False
        print(f"{stem}: {'OK' if ok else 'FAIL'}")
        if not ok:
            failures += 1
    print(f"checked={len(names)} failures={failures}")
    return 0 if failures == 0 else 2


# -- entry point -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hca", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("recognize", help="Helly circular-arc recognition with certificate")
    r.add_argument("graph")
    r.set_defaults(func=cmd_recognize)

    q = sub.add_parser("pipeline", help="forbidden-subgraph certificate for a non-HCA graph")
    q.add_argument("graph")
    q.set_defaults(func=cmd_pipeline)

    s = sub.add_parser("essentialize", help="shrink an obstacle enumeration to essential form")
    s.add_argument("graph")
    s.add_argument("obstacle")
    s.set_defaults(func=cmd_essentialize)

    e = sub.add_parser("enumerate", help="enumerate essential obstacle classes")
    e.add_argument("--k", type=int, default=None)
    e.add_argument("--claw-free", action="store_true")
    e.add_argument("--obst8", action="store_true")
    e.add_argument("--out", default=".", help="directory for emitted class files")
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("selftest", help="re-verify a directory of certificates")
    t.add_argument("dir", nargs="?", default=".")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, GraphError, ModelError, ObstacleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
