"""Command-line front end with JSON input/output.

Exit codes: 0 for success or a true verdict, 1 for a false verdict (the
payload carries the witness), 2 for input errors.  Payloads go to stdout,
diagnostics to stderr, and all output is byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import diagram as diagram_mod
from . import subfield as subfield_mod
from .atoms import AtomSet, FCMI, NotAnFcmiImage, image_of_fcmi, image_of_graph, implies as _implies
from .atoms import recover_fcmi, recover_graph
from .graphs import Graph
from .measures import (
    Distribution,
    EntropyVector,
    check_mrf,
    entropy_vector,
    measure_from_distribution,
    mu_from_entropy,
    vanishing_atoms,
)
from .witnesses import FieldSpec, atom_concentrator, ring_field_witness, star_xor_witness


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ValueError(f"{path}: malformed JSON ({e})") from e


def _emit(payload) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _vset(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t != ""]
    except ValueError as e:
        raise ValueError(f"bad vertex list {text!r}: comma-separated integers expected") from e


def _mu_from_args(args) -> "tuple":
    if getattr(args, "dist", None) and getattr(args, "entropy", None):
        raise ValueError("supply --dist or --entropy, not both")
    if getattr(args, "dist", None):
        dist = Distribution.from_json(_load_json(args.dist))
        return measure_from_distribution(dist, args.base), dist
    if getattr(args, "entropy", None):
        h = EntropyVector.from_json(_load_json(args.entropy))
        return mu_from_entropy(h), None
    raise ValueError("supply --dist or --entropy")


# -- subcommands -------------------------------------------------------------


def cmd_entropy(args) -> int:
    dist = Distribution.from_json(_load_json(args.dist))
    _emit(entropy_vector(dist, args.base).to_json())
    return 0


def cmd_mu(args) -> int:
    mu, _ = _mu_from_args(args)
    if args.format == "text":
        lines = [f"{a.to_text()}\t{v:.12g}" for a, v in mu.atoms()]
        _emit("\n".join(lines))
    else:
        _emit(mu.to_json())
    return 0


def cmd_check_mrf(args) -> int:
    mu, _ = _mu_from_args(args)
    g = Graph.from_json(_load_json(args.graph))
    res = check_mrf(mu, g, args.tol)
    _emit(
        {
            "ok": res.ok,
            "violations": [{"atom": a.to_text(), "value": v} for a, v in res.violations],
        }
    )
    return 0 if res.ok else 1


def cmd_image(args) -> int:
    if args.graph and args.fcmi:
        raise ValueError("supply --graph or --fcmi, not both")
    if args.graph:
        img = image_of_graph(Graph.from_json(_load_json(args.graph)))
    elif args.fcmi:
        img = image_of_fcmi(FCMI.from_json(_load_json(args.fcmi)))
    else:
        raise ValueError("supply --graph or --fcmi")
    _emit(img.to_json())
    return 0


def cmd_recover(args) -> int:
    img = AtomSet.from_json(_load_json(args.atoms))
    if args.target == "graph":
        _emit(recover_graph(img).to_json())
        return 0
    try:
        k = recover_fcmi(img)
    except NotAnFcmiImage as e:
        _emit({"recovered": False, "reason": str(e)})
        return 1
    _emit(k.to_json())
    return 0


def cmd_subfield(args) -> int:
    if args.input:
        d = _load_json(args.input)
        for key in ("graph", "V_prime"):
            if key not in d:
                raise ValueError(f"subfield JSON missing field {key!r}")
        g = Graph.from_json(d["graph"])
        keep = [int(v) for v in d["V_prime"]]
    else:
        if not args.graph or args.vp is None:
            raise ValueError("supply --graph and --vp, or --input")
        g = Graph.from_json(_load_json(args.graph))
        keep = _vset(args.vp)
    res = subfield_mod.subfield_graph(g, keep)
    if args.format == "dot":
        _emit(res.g_star.to_dot(name="g_star"))
        return 0
    _emit(
        {
            "g_star": res.g_star.to_json(),
            "equals_induced": subfield_mod.equals_induced(g, keep),
            "rho": sorted(res.rho),
        }
    )
    return 0


def cmd_smallest(args) -> int:
    if args.atoms:
        van = AtomSet.from_json(_load_json(args.atoms))
    elif args.dist:
        dist = Distribution.from_json(_load_json(args.dist))
        van = vanishing_atoms(measure_from_distribution(dist, args.base), args.tol)
    else:
        raise ValueError("supply --atoms or --dist")
    res = subfield_mod.smallest_graph(van)
    _emit(res.to_json())
    return 0 if res.exists else 1


def cmd_subtree(args) -> int:
    g = Graph.from_json(_load_json(args.graph))
    res = subfield_mod.subtree_condition(g, _vset(args.vp))
    payload = {"is_subtree": res.is_subtree}
    if not res.is_subtree:
        payload["witness"] = {
            "dropped_vertex": res.witness_vertex,
            "targets": list(res.witness_targets),
        }
    _emit(payload)
    return 0 if res.is_subtree else 1


def cmd_diagram(args) -> int:
    if args.action != "plan":
        raise ValueError(f"unknown diagram action {args.action!r}")
    g = Graph.from_json(_load_json(args.graph))
    plan = diagram_mod.build_plan(g)
    _emit(diagram_mod.export_plan(plan, args.format))
    return 0


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise ValueError(f"witness {args.kind} needs --{name}")


def cmd_witness(args) -> int:
    if args.kind == "star":
        _need(args, "graph", "hub", "leaves")
        g = Graph.from_json(_load_json(args.graph))
        dist = star_xor_witness(g, args.hub, _vset(args.leaves))
    elif args.kind == "ring":
        _need(args, "n", "field", "alphas")
        dist = ring_field_witness(args.n, FieldSpec(args.field), _vset(args.alphas))
    elif args.kind == "atom":
        _need(args, "n", "support")
        dist = atom_concentrator(args.n, _vset(args.support))
    else:
        raise ValueError(f"unknown witness kind {args.kind!r}")
    _emit(dist.to_json())
    return 0


def cmd_implies(args) -> int:
    pi1 = [FCMI.from_json(d) for d in _load_json(args.pi1)]
    pi2 = [FCMI.from_json(d) for d in _load_json(args.pi2)]
    verdict = _implies(pi1, pi2)
    _emit({"implies": verdict})
    return 0 if verdict else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="imeasure",
        description="Atom measures, Markov random fields, subfield graphs, diagram plans",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(func=fn)
        return sp

    sp = add("entropy", cmd_entropy, help="entropy vector of a distribution")
    sp.add_argument("--dist", required=True, help="distribution JSON file")
    sp.add_argument("--base", type=float, default=2.0)

    sp = add("mu", cmd_mu, help="atom measure from a distribution or entropy vector")
    sp.add_argument("--dist", help="distribution JSON file")
    sp.add_argument("--entropy", help="entropy vector JSON file")
    sp.add_argument("--base", type=float, default=2.0)
    sp.add_argument("--format", choices=["json", "text"], default="json")

    sp = add("check-mrf", cmd_check_mrf, help="does the measure respect a graph")
    sp.add_argument("--dist", help="distribution JSON file")
    sp.add_argument("--entropy", help="entropy vector JSON file")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--base", type=float, default=2.0)
    sp.add_argument("--tol", type=float, default=1e-9)

    sp = add("image", cmd_image, help="atom image of a graph or independency")
    sp.add_argument("--graph")
    sp.add_argument("--fcmi")

    sp = add("recover", cmd_recover, help="invert an atom image")
    sp.add_argument("--atoms", required=True, help="atom set JSON file")
    sp.add_argument("--target", choices=["fcmi", "graph"], required=True)

    sp = add("subfield", cmd_subfield, help="boundary graph of a kept vertex set")
    sp.add_argument("--graph")
    sp.add_argument("--vp", help="kept vertices, comma-separated")
    sp.add_argument("--input", help="single JSON file with fields graph and V_prime")
    sp.add_argument("--format", choices=["json", "dot"], default="json")

    sp = add("smallest", cmd_smallest, help="smallest-graph candidate from vanishing atoms")
    sp.add_argument("--atoms", help="vanishing atom set JSON file")
    sp.add_argument("--dist", help="distribution JSON file")
    sp.add_argument("--base", type=float, default=2.0)
    sp.add_argument("--tol", type=float, default=1e-9)

    sp = add("subtree", cmd_subtree, help="does a kept set of a tree stay a tree")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--vp", required=True)

    sp = add("diagram", cmd_diagram, help="information-diagram construction plan")
    sp.add_argument("action", nargs="?", default="plan")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--format", choices=["json", "dot", "text"], default="json")

    sp = add("witness", cmd_witness, help="emit a named witness distribution")
    sp.add_argument("kind", choices=["star", "ring", "atom"])
    sp.add_argument("--graph", help="star: host graph JSON")
    sp.add_argument("--hub", type=int, help="star: the high-degree vertex")
    sp.add_argument("--leaves", help="star: three neighbors, comma-separated")
    sp.add_argument("--n", type=int, help="ring/atom: variable count")
    sp.add_argument("--field", type=int, help="ring: prime field size")
    sp.add_argument("--alphas", help="ring: distinct nonzero multipliers")
    sp.add_argument("--support", help="atom: plain variables of the loaded atom")

    sp = add("implies", cmd_implies, help="does one independency collection imply another")
    sp.add_argument("--pi1", required=True, help="JSON list of independencies")
    sp.add_argument("--pi2", required=True, help="JSON list of independencies")

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
