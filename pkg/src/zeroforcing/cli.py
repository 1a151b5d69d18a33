"""The ``zf`` command line tool.

Exit codes: 0 on success, 1 when a verification or expectation fails,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .blocks import block_decomposition, classify_family
from .exact import (
    SolveResult,
    connected_forcing_number_exact,
    spread_zc,
    zero_forcing_number,
)
from .families import (
    block_graph_zc,
    cactus_zc,
    connected_forcing_number,
    greedy_zc,
    tree_zc,
    unicyclic_zc,
)
from .forcing import derive
from .generators import GeneratorSpec, generate
from .graph_io import parse_graph, to_dot, write_edge_list
from .setsystems import (
    check_axioms,
    czf_reduction,
    equality_report,
    forcing_complement_family,
    verify_reduction,
)
from .structure import lower_bounds, structural_sets
from .validation import CorpusConfig, validate_corpus


def _load_graph(path: str, fmt: str) -> "Graph":
    if path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text()
    return parse_graph(text, fmt=fmt)


def _add_graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="edge-list or DIMACS file, or '-' for stdin")
    p.add_argument("--format", choices=["auto", "edgelist", "dimacs"], default="auto")


def _parse_vertex_set(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"bad vertex list {text!r}; expected like 0,3,5") from None


def _solve_payload(res: SolveResult, include_witness: bool) -> dict:
    payload = {
        "value": res.value,
        "sets_examined": res.sets_examined,
        "elapsed": round(res.elapsed, 6),
        "method": res.method,
    }
    if include_witness:
        payload["witness"] = list(res.witness)
    return payload


def _emit_solve(res: SolveResult, args) -> None:
    if args.json:
        print(json.dumps(_solve_payload(res, True)))
        return
    print(res.value)
    if getattr(args, "witness", False):
        print("witness:", " ".join(map(str, res.witness)))


def _cmd_gen(args) -> int:
    spec = GeneratorSpec(
        family=args.family,
        n=args.n,
        k=args.k,
        legs=args.legs,
        leg_len=args.leg_len,
        seed=args.seed,
    )
    g = generate(spec)
    sys.stdout.write(write_edge_list(g))
    return 0


def _cmd_trace(args) -> int:
    g = _load_graph(args.graph, args.format)
    initial = _parse_vertex_set(args.set)
    if args.seed is not None:
        trace = derive(g, initial, policy="random", seed=args.seed)
    else:
        trace = derive(g, initial)
    if args.json:
        print(
            json.dumps(
                {
                    "initial": sorted(trace.initial_set),
                    "derived": sorted(trace.derived_set),
                    "forcing": len(trace.derived_set) == g.n,
                    "forces": [list(f) for f in trace.forces],
                    "chains": [list(c) for c in trace.chains],
                }
            )
        )
    else:
        print("derived set:", " ".join(map(str, sorted(trace.derived_set))))
        print("forcing set" if len(trace.derived_set) == g.n else "not a forcing set")
        for u, v in trace.forces:
            print(f"{u} -> {v}")
        for chain in trace.chains:
            print("chain:", " ".join(map(str, chain)))
    if args.dot:
        colors = {}
        for v in range(g.n):
            if v in trace.initial_set:
                colors[v] = "gray30"
            elif v in trace.derived_set:
                colors[v] = "gray70"
            else:
                colors[v] = "white"
        Path(args.dot).write_text(to_dot(g, colors))
    return 0


def _cmd_exact(args) -> int:
    g = _load_graph(args.graph, args.format)
    if args.connected:
        res = connected_forcing_number_exact(g, jobs=args.jobs)
    else:
        res = zero_forcing_number(g, jobs=args.jobs)
    _emit_solve(res, args)
    return 0


def _cmd_family(args) -> int:
    g = _load_graph(args.graph, args.format)
    info = classify_family(g)
    solvers = {
        "tree": tree_zc,
        "unicyclic": unicyclic_zc,
        "cactus": cactus_zc,
        "block": block_graph_zc,
    }
    if args.expect:
        applicable = {
            "tree": info.is_tree,
            "unicyclic": info.is_unicyclic,
            "cactus": info.is_cactus and info.pendant_free and not info.is_path,
            "block": info.is_block_graph and info.pendant_free and not info.is_path,
        }
        if not applicable[args.expect]:
            print(
                f"expected family {args.expect!r} but graph is {info.tag}"
                + ("" if info.pendant_free else " with pendant paths"),
                file=sys.stderr,
            )
            return 1
        res = solvers[args.expect](g)
    else:
        res = connected_forcing_number(g, jobs=args.jobs)
        if res.method.startswith("exact"):
            print(
                f"note: no family formula applies to this {info.tag} graph; "
                "used the exact solver",
                file=sys.stderr,
            )
    _emit_solve(res, args)
    return 0


def _cmd_greedy(args) -> int:
    g = _load_graph(args.graph, args.format)
    _emit_solve(greedy_zc(g), args)
    return 0


def _cmd_structure(args) -> int:
    g = _load_graph(args.graph, args.format)
    ss = structural_sets(g)
    dec = block_decomposition(g)
    bound_m, bound_blocks = lower_bounds(g, dec, ss)
    if args.json:
        print(
            json.dumps(
                {
                    "r1": sorted(ss.r1),
                    "r2": sorted(ss.r2),
                    "r3": sorted(ss.r3),
                    "l_set": sorted(ss.l_set),
                    "m_set": sorted(ss.m_set),
                    "p": {str(v): ss.p[v] for v in sorted(ss.p) if ss.p[v]},
                    "bound_m": bound_m,
                    "bound_blocks": bound_blocks,
                    "blocks": [
                        {
                            "vertices": list(b),
                            "kind": dec.kinds[i],
                            "outer": dec.outer[i],
                            "depth": dec.depths[i],
                        }
                        for i, b in enumerate(dec.blocks)
                    ],
                    "articulation_points": sorted(dec.articulation_points),
                }
            )
        )
        return 0
    def fmt(s):
        return "{" + ", ".join(map(str, sorted(s))) + "}"
    print("R1:", fmt(ss.r1))
    print("R2:", fmt(ss.r2))
    print("R3:", fmt(ss.r3))
    print("L: ", fmt(ss.l_set))
    print("M: ", fmt(ss.m_set))
    attached = {v: c for v, c in sorted(ss.p.items()) if c}
    if attached:
        print("pendant path counts:")
        for v, c in attached.items():
            print(f"  p({v}) = {c}")
    print(f"lower bounds: |M| = {bound_m}, blocks = {bound_blocks}")
    print("blocks:")
    for i, b in enumerate(dec.blocks):
        flag = "outer" if dec.outer[i] else "inner"
        print(
            f"  {fmt(b)} kind={dec.kinds[i]} {flag} depth={dec.depths[i]}"
        )
    print("articulation points:", fmt(dec.articulation_points))
    return 0


def _cmd_spread(args) -> int:
    g = _load_graph(args.graph, args.format)
    if args.edge:
        u, v = _parse_vertex_set(args.edge)
        value = spread_zc(g, edge=(u, v), jobs=args.jobs)
    else:
        value = spread_zc(g, vertex=args.vertex, jobs=args.jobs)
    if args.json:
        print(json.dumps({"spread": value}))
    else:
        print(value)
    return 0


def _cmd_reduce(args) -> int:
    g = _load_graph(args.graph, args.format)
    if args.verify:
        report = verify_reduction(g)
        payload = {
            "z": report.z_original.value,
            "zc_transformed": report.zc_transformed.value,
            "expected": report.z_original.value + 2,
            "ok": report.ok,
        }
        if args.json:
            print(json.dumps(payload))
        else:
            print(
                f"Z(G) = {payload['z']}, Zc(G') = {payload['zc_transformed']}, "
                f"expected {payload['expected']}: {'ok' if report.ok else 'MISMATCH'}"
            )
        return 0 if report.ok else 1
    inst = czf_reduction(g)
    sys.stdout.write(write_edge_list(inst.transformed))
    return 0


def _cmd_axioms(args) -> int:
    g = _load_graph(args.graph, args.format)
    fam = forcing_complement_family(g)
    report = check_axioms(fam, cap=args.cap, seed=args.seed)
    payload = {
        "m1": report.m1,
        "m2": report.m2,
        "m3": report.m3,
        "paper_greedoid": report.is_paper_greedoid,
        "matroid": report.is_matroid,
        "mode": report.mode,
    }
    if args.json:
        if report.m2_witness:
            payload["m2_witness"] = [sorted(s) for s in report.m2_witness]
        if report.m3_witness:
            payload["m3_witness"] = [sorted(s) for s in report.m3_witness]
        print(json.dumps(payload))
    else:
        for key in ("m1", "m2", "m3"):
            print(f"{key}: {'pass' if payload[key] else 'fail'}")
        print(f"paper-greedoid: {report.is_paper_greedoid}")
        print(f"matroid: {report.is_matroid}")
        print(f"mode: {report.mode}")
        if report.m2_witness:
            a, b = report.m2_witness
            print(f"m2 witness: {sorted(a)} subset of {sorted(b)}")
        if report.m3_witness:
            a, x1, x2 = report.m3_witness
            print(f"m3 witness: A={sorted(a)} maximal {sorted(x1)} vs {sorted(x2)}")
    return 0


def _cmd_equality(args) -> int:
    g = _load_graph(args.graph, args.format)
    rep = equality_report(g)
    if args.json:
        print(
            json.dumps(
                {
                    "z": rep.z,
                    "zc": rep.zc,
                    "equal": rep.equal,
                    "connected_minimum_witness": (
                        list(rep.connected_minimum_witness)
                        if rep.connected_minimum_witness
                        else None
                    ),
                }
            )
        )
    else:
        verdict = "equal" if rep.equal else "not equal"
        print(f"Z = {rep.z}, Zc = {rep.zc}: {verdict}")
    return 0


def _cmd_validate(args) -> int:
    config = CorpusConfig(
        trees=args.trees,
        unicyclic=args.unicyclic,
        cactus=args.cactus,
        block=args.block,
        outer_cactus=args.outer_cactus,
        n_min=args.n_min,
        n_max=args.n_max,
        seed=args.seed,
        jobs=args.jobs,
    )
    report = validate_corpus(config)
    if args.csv:
        Path(args.csv).write_text(report.to_csv())
    if args.json:
        print(json.dumps(report.to_json_obj()))
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zf",
        description="Zero forcing and connected zero forcing toolkit",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="generate a graph and print its edge list")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--legs", type=int)
    p.add_argument("--leg-len", dest="leg_len", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("trace", help="run the color change rule from a set")
    _add_graph_arg(p)
    p.add_argument("--set", required=True, help="comma-separated vertices")
    p.add_argument("--seed", type=int, help="use a seeded random force order")
    p.add_argument("--dot", help="write a colored DOT file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("exact", help="exact forcing numbers by brute force")
    _add_graph_arg(p)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("family", help="closed-form solvers with dispatch")
    _add_graph_arg(p)
    p.add_argument("--expect", choices=["tree", "unicyclic", "cactus", "block"])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("greedy", help="greedy minimal connected forcing set")
    _add_graph_arg(p)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("structure", help="structural sets, bounds, blocks")
    _add_graph_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_structure)

    p = sub.add_parser("spread", help="forcing-number change under deletion")
    _add_graph_arg(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--edge", help="edge as u,v")
    group.add_argument("--vertex", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_spread)

    p = sub.add_parser("reduce", help="build or verify the hardness gadget")
    _add_graph_arg(p)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("axioms", help="set-system axioms over forcing sets")
    _add_graph_arg(p)
    p.add_argument("--cap", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_axioms)

    p = sub.add_parser("equality", help="compare Z and Zc exactly")
    _add_graph_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_equality)

    p = sub.add_parser("validate", help="cross-validate formulas on a corpus")
    p.add_argument("--trees", type=int, default=0)
    p.add_argument("--unicyclic", type=int, default=0)
    p.add_argument("--cactus", type=int, default=0)
    p.add_argument("--block", type=int, default=0)
    p.add_argument("--outer-cactus", dest="outer_cactus", type=int, default=0)
    p.add_argument("--n-min", dest="n_min", type=int, default=4)
    p.add_argument("--n-max", dest="n_max", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", help="also write rows to a CSV file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
