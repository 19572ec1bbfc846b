"""Command-line front end.

Digraphs are read in the ``n`` / ``u v`` text format, signed digraphs as
``u v s`` lines, networks as JSON. ``-`` reads standard input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .boolean_network import DEFAULT_STATE_CAP, BooleanNetwork, fixed_points
from .constructions import (
    DEFAULT_VERIFY_CAP,
    build,
    lower_bound_report,
    short_cycle_network,
    special_packing_network,
    threshold_network,
)
from .cycle_params import (
    DEFAULT_FVS_CAP,
    circumference,
    max_cycle_packing,
    max_special_packing,
    min_feedback_vertex_set,
)
from .digraph import Cycle, Digraph, Packing
from .exceptions import AcyclicError
from .families import build_family, random_digraph
from .oracle import DEFAULT_BUDGET, DEFAULT_ORACLE_CAP, phi_exact, phi_m_exact, verify_theorems
from .pointset import to_bitstring
from .poset_analysis import (
    is_lattice,
    longest_chain,
    max_antichain,
    max_pattern,
    monotone_upper_bound,
)
from .signed import SignedDigraph, signed_parameters

SCHEMA = 1


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _is_signed_text(text: str) -> bool:
    rows = [r.split() for r in text.splitlines() if r.strip() and not r.lstrip().startswith("#")]
    return len(rows) > 1 and len(rows[1]) == 3


def _emit(args, data: dict, human: list[str]) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **data}, sort_keys=True))
    else:
        print("\n".join(human))


def _cap(args, default: int) -> int:
    return default if args.cap is None else args.cap


def _cycles(cs) -> list[list[int]]:
    return [list(c.vertices) for c in cs]


# -- subcommands ---------------------------------------------------------

def cmd_params(args) -> int:
    g = Digraph.from_text(_read(args.file))
    tau, fvs = min_feedback_vertex_set(g, cap=_cap(args, DEFAULT_FVS_CAP))
    nu, packing = max_cycle_packing(g)
    nu_star, special = max_special_packing(g)
    try:
        c = circumference(g)
    except AcyclicError:
        c = None
    data = {"tau": tau, "nu": nu, "nu_star": nu_star, "circumference": c, "fvs": fvs,
            "packing": _cycles(packing.cycles), "special_packing": _cycles(special.cycles)}
    _emit(args, data, [
        f"tau={tau} nu={nu} nu*={nu_star} c={'undefined' if c is None else c}",
        f"feedback vertex set: {fvs}",
        f"maximum packing: {data['packing']}",
        f"maximum special packing: {data['special_packing']}",
    ])
    return 0


def cmd_signed_params(args) -> int:
    sd = SignedDigraph.from_text(_read(args.file))
    p = signed_parameters(sd)
    _emit(args, p, [
        f"balanced={p['balanced']} lambda={p['frustration']}",
        f"tau+={p['tau_plus']} nu+={p['nu_plus']} tau_m={p['tau_m']} tau*_m={p['tau_m_star']}",
        f"upper bound: {p['upper_bound']}",
    ])
    return 0


def _parse_packing(spec: str, g: Digraph) -> Packing:
    cycles = [Cycle(tuple(int(v) for v in part.split(","))) for part in spec.split(";") if part]
    return Packing(tuple(cycles), g)


def cmd_construct(args) -> int:
    g = Digraph.from_text(_read(args.file))
    if args.packing:
        packing = _parse_packing(args.packing, g)
        verify_cap = _cap(args, DEFAULT_VERIFY_CAP)
        if args.kind == "threshold":
            c = threshold_network(g, packing, verify_cap=verify_cap)
        elif args.kind == "special-packing":
            c = special_packing_network(g, packing, verify_cap=verify_cap)
        elif args.kind == "short-cycles":
            c = short_cycle_network(g, list(packing.cycles), verify_cap=verify_cap)
        else:
            raise ValueError(f"--packing is not accepted by {args.kind!r}")
    else:
        c = build(args.kind, g, verify_cap=_cap(args, DEFAULT_VERIFY_CAP))
    out = c.network.to_dict()
    out["construction"] = {"name": c.name, "guaranteed": c.guaranteed,
                           "fixed_points": c.fixed_points, "verified": c.verified}
    print(json.dumps(out))
    print(f"{c.name}: {c.fixed_points} fixed points (guaranteed {c.guaranteed})",
          file=sys.stderr)
    return 0


def cmd_fixpoints(args) -> int:
    f = BooleanNetwork.from_json(_read(args.file))
    P = fixed_points(f, cap=_cap(args, DEFAULT_STATE_CAP))
    chain, chain_w = longest_chain(P)
    anti, anti_w = max_antichain(P)
    k, pat = max_pattern(P)
    ks, spat = max_pattern(P, special=True)
    lattice = is_lattice(P)
    bits = [to_bitstring(x, P.n) for x in P.points]
    data = {"count": len(P), "fixed_points": bits, "longest_chain": chain,
            "max_antichain": anti, "max_pattern": k, "max_special_pattern": ks,
            "lattice": lattice,
            "chain_witness": [to_bitstring(x, P.n) for x in chain_w],
            "antichain_witness": [to_bitstring(x, P.n) for x in anti_w]}
    _emit(args, data, [
        f"{len(P)} fixed points",
        *bits,
        f"longest chain {chain}, max antichain {anti}, lattice={lattice}",
        f"max pattern {k}, max special pattern {ks}",
    ])
    return 0


def cmd_bounds(args) -> int:
    g = Digraph.from_text(_read(args.file))
    tau, _ = min_feedback_vertex_set(g, cap=_cap(args, DEFAULT_FVS_CAP))
    nu, _ = max_cycle_packing(g)
    nu_star, _ = max_special_packing(g)
    upper = monotone_upper_bound(tau, nu, nu_star)
    lower = lower_bound_report(g) if nu else {"best": 1, "witness": "acyclic", "bounds": {}}
    data = {"tau": tau, "nu": nu, "nu_star": nu_star, "upper": upper, "lower": lower}
    _emit(args, data, [
        f"tau={tau} nu={nu} nu*={nu_star}",
        f"upper bound: {upper}",
        f"lower bound: {lower['best']} ({lower['witness']})",
        *(f"  {k}: {v}" for k, v in lower["bounds"].items()),
    ])
    return 0


def cmd_oracle(args) -> int:
    text = _read(args.file)
    if _is_signed_text(text):
        value, f = phi_exact(SignedDigraph.from_text(text), budget=args.budget,
                               cap=_cap(args, DEFAULT_ORACLE_CAP))
        label = "phi"
    else:
        value, f = phi_m_exact(Digraph.from_text(text), budget=args.budget,
                               cap=_cap(args, DEFAULT_ORACLE_CAP))
        label = "phi_m"
    _emit(args, {label: value, "witness": f.to_dict()},
          [f"{label}={value}", f"witness: {f.to_json()}"])
    return 0


def cmd_verify(args) -> int:
    targets = []
    if args.file:
        text = _read(args.file)
        targets.append(SignedDigraph.from_text(text) if _is_signed_text(text)
                       else Digraph.from_text(text))
    rng = random.Random(args.seed)
    for _ in range(args.random):
        targets.append(random_digraph(args.n, args.p, rng, loops=True, max_in_degree=3))
    if not targets:
        raise ValueError("nothing to verify: give a file or --random")
    reports = [verify_theorems(t, budget=args.budget) for t in targets]
    ok = all(r["ok"] for r in reports)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "ok": ok, "reports": reports}, sort_keys=True))
    else:
        for i, r in enumerate(reports):
            print(f"# instance {i}: {r['parameters']}")
            for line in r["checks"]:
                extra = f" ({line['lhs']} {line['relation']} {line['rhs']})" if "lhs" in line else ""
                print(f"{line['status']:>7}  {line['check']}{extra}")
        print("all checks passed" if ok else "some checks FAILED")
    return 0 if ok else 1


def cmd_generate(args) -> int:
    g = build_family(args.family, args.n)
    sys.stdout.write(g.to_text())
    return 0


# -- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help="size cap for the exhaustive search of the command")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized sweeps")

    parser = argparse.ArgumentParser(prog="cyclebound", parents=[common],
                                     description="Cycle parameters and fixed-point bounds.")
    parser.set_defaults(cap=None, json=False, seed=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", parents=[common], help="tau, nu, nu*, c with witnesses")
    p.add_argument("file")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("signed-params", parents=[common], help="signed-digraph parameters")
    p.add_argument("file")
    p.set_defaults(func=cmd_signed_params)

    p = sub.add_parser("construct", parents=[common], help="build a lower-bound network")
    p.add_argument("kind", choices=["threshold", "special-packing", "short-cycles", "tprime"])
    p.add_argument("file")
    p.add_argument("--packing", help="cycles as '0,1,2;4,5' (default: chosen automatically)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("fixpoints", parents=[common], help="fixed points and their poset")
    p.add_argument("file")
    p.set_defaults(func=cmd_fixpoints)

    p = sub.add_parser("bounds", parents=[common], help="upper and lower bound report")
    p.add_argument("file")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("oracle", parents=[common], help="exact phi_m or phi by brute force")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="check every bound on instances")
    p.add_argument("file", nargs="?")
    p.add_argument("--random", type=int, default=0, help="also check this many random digraphs")
    p.add_argument("--n", type=int, default=5, help="size of random digraphs")
    p.add_argument("--p", type=float, default=0.35, help="arc probability of random digraphs")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", parents=[common], help="print a family member")
    p.add_argument("family")
    p.add_argument("n", type=int, nargs="?")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        diag = {"schema": SCHEMA, "error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(diag), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
