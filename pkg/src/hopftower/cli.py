"""Command line front end.

    hopftower graph  --instance sym --rank 4 --format dot
    hopftower verify --instance nsym-qsym --rank 6
    hopftower dims   --dims-file tower.json

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 instance or
internal error.
"""

import argparse
import json
import os
import sys

from .construct import Hand, graph_pair
from .dgg import check_duality, to_json_obj
from .hopf import StructureError
from .instances import INSTANCE_KEYS, canonical_alpha_beta, get_instance
from .pipeline import run_pipeline
from .tower import TowerDims, TowerError, tower_from_graph_pair, verify_dimension_theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
HARD_CAP = 10
DEFAULT_RANK = 6


class UsageError(Exception):
    pass


def max_rank() -> int:
    value = os.environ.get("HOPFTOWER_MAX_RANK")
    if value is None:
        return HARD_CAP
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"HOPFTOWER_MAX_RANK must be an integer, got {value!r}") from None


def parse_weights(text):
    """``"a1:b1,a2:b2"`` -> [(a1, b1), (a2, b2)]; a bare ``"k"`` means ``"1:k"``."""
    if text is None:
        return None
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        try:
            if ":" in chunk:
                a, b = (int(x) for x in chunk.split(":"))
            else:
                a, b = 1, int(chunk)
        except ValueError:
            raise UsageError(f"bad weight {chunk!r}; expected a:b or an integer") from None
        if a < 1 or b < 1:
            raise UsageError(f"weights must be positive, got {chunk!r}")
        out.append((a, b))
    return out


def _rank(args, default=DEFAULT_RANK):
    n = default if args.rank is None else args.rank
    if n < 0:
        raise UsageError("rank must be nonnegative")
    cap = max_rank()
    if n > cap:
        raise UsageError(f"rank {n} exceeds the cap {cap} (set HOPFTOWER_MAX_RANK to raise it)")
    return n


def _weights_text(weights):
    return ",".join(f"{a}:{b}" for a, b in weights)


def _pair_dot(g, gp, title):
    """One digraph on the shared vertex set; labels show m, or m|m' where they differ."""
    lines = [f"digraph {json.dumps(title)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for n, names in enumerate(g.names):
        lines.append(f"  subgraph cluster_rank{n} {{")
        lines.append(f"    label=\"rank {n}\";")
        lines.append("    rank=same;")
        for i, name in enumerate(names):
            lines.append(f"    v{n}_{i} [label={json.dumps(name)}];")
        lines.append("  }")
    for n in range(g.depth):
        m, mp = g.matrices[n], gp.matrices[n]
        for i in range(m.shape[0]):
            for j in range(m.shape[1]):
                a, b = int(m[i, j]), int(mp[i, j])
                if a == 0 and b == 0:
                    continue
                label = str(a) if a == b else f"{a}|{b}"
                lines.append(f"  v{n}_{i} -> v{n + 1}_{j} [label=\"{label}\", m={a}, m_prime={b}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_graph(args, out):
    N = _rank(args)
    weights = parse_weights(args.weights)
    pair = get_instance(args.instance)
    alpha, beta = canonical_alpha_beta(pair, weights)
    weights = weights or [(1, 1)] * len(pair.basis(1))
    g, gp = graph_pair(pair, alpha, beta, N, args.side)
    if args.format == "json":
        doc = {
            "instance": args.instance,
            "weights": [list(w) for w in weights],
            "side": args.side,
            "rank": N,
            "gamma": to_json_obj(g),
            "gamma_prime": to_json_obj(gp),
        }
        out.write(json.dumps(doc, indent=1) + "\n")
    elif args.format == "dot":
        out.write(_pair_dot(g, gp, f"{args.instance} {_weights_text(weights)} {args.side}"))
    else:
        dual = check_duality(g, gp, N)
        out.write(f"instance {args.instance}  weights {_weights_text(weights)}  side {args.side}  rank {N}\n")
        for n in range(N + 1):
            out.write(f"rank {n}: {len(g.vertices[n])} vertices\n")
            if n < N:
                for i, name in enumerate(g.names[n]):
                    ups = [
                        f"{g.names[n + 1][j]}x{int(g.matrices[n][i, j])}"
                        for j in range(g.matrices[n].shape[1]) if g.matrices[n][i, j]
                    ]
                    out.write(f"  {name} -> {' '.join(ups)}\n")
        out.write(f"differential coefficient: {dual.r if dual.passed else 'not dual'}\n")
    return EXIT_OK


def _status(ok):
    return "PASS" if ok else "FAIL"


def cmd_verify(args, out):
    N = _rank(args)
    summary = run_pipeline(args.instance, parse_weights(args.weights), N, args.side)
    if args.format == "json":
        out.write(json.dumps(summary, indent=1, sort_keys=True) + "\n")
        return EXIT_OK if summary["passed"] else EXIT_FAIL
    out.write(
        f"instance {summary['instance']}  weights {_weights_text(summary['weights'])}  "
        f"side {summary['side']}  rank {N}  <alpha,beta> = {summary['r']}\n"
    )
    for check in summary["checks"]:
        name = check["check"]
        extra = f"  r={check['r']}" if check.get("r") is not None else ""
        out.write(f"{name:<24}{_status(not check['violations'])}{extra}\n")
        if name == "fomin":
            for row in check["rows"]:
                out.write(f"  n={row['n']}  sum f f' = {row['sum_ff']}  r^n n! = {row['expected']}\n")
        elif name == "dimension":
            for row in check["rows"]:
                out.write(f"  n={row['n']}  dim A_n = {row['dim']}  r^n n! = {row['expected']}\n")
        for v in check["violations"][:20]:
            out.write(f"  violation: {json.dumps(v, sort_keys=True)}\n")
        if len(check["violations"]) > 20:
            out.write(f"  ... {len(check['violations']) - 20} more\n")
    out.write(f"overall {_status(summary['passed'])}\n")
    return EXIT_OK if summary["passed"] else EXIT_FAIL


def cmd_dims(args, out):
    if args.dims_file:
        try:
            tower = TowerDims.load(args.dims_file)
        except OSError as exc:
            raise UsageError(f"cannot read {args.dims_file}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise TowerError(f"{args.dims_file} is not valid JSON: {exc}") from None
        N = _rank(args, default=min(tower.depth, max_rank()))
        source = args.dims_file
    else:
        N = _rank(args)
        weights = parse_weights(args.weights)
        pair = get_instance(args.instance)
        alpha, beta = canonical_alpha_beta(pair, weights)
        g, gp = graph_pair(pair, alpha, beta, N, args.side)
        tower = tower_from_graph_pair(g, gp, N)
        source = args.instance
    report = verify_dimension_theorem(tower, N)
    if args.format == "json":
        doc = report.to_dict()
        doc["source"] = source
        out.write(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    else:
        out.write(f"source {source}  r = dim A_1 = {report.r}\n")
        out.write(f"{'n':>3} {'sum dimP*dimS':>16} {'r^n n!':>16}  status\n")
        for row in report.rows:
            out.write(f"{row['n']:>3} {row['dim']:>16} {row['expected']:>16}  {_status(row['ok'])}\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="hopftower", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default_format):
        p.add_argument("--instance", choices=INSTANCE_KEYS, default="sym")
        p.add_argument("--weights", help="a1:b1[,a2:b2...]; a bare integer k means 1:k")
        p.add_argument("--rank", type=int, default=None, help=f"rank cutoff N (default {DEFAULT_RANK})")
        p.add_argument("--side", choices=[h.value for h in Hand], default=Hand.LEFT.value)
        p.add_argument("--format", choices=formats, default=default_format)

    common(sub.add_parser("graph", help="emit the dual graded graphs"), ["dot", "json", "text"], "dot")
    common(sub.add_parser("verify", help="run the full verification pipeline"), ["text", "json"], "text")
    dims = sub.add_parser("dims", help="tabulate dim A_n against r^n n!")
    common(dims, ["text", "json"], "text")
    dims.add_argument("--dims-file", metavar="PATH", help="JSON table {ranks: [[{dimS, dimP}, ...], ...]}")
    return parser


COMMANDS = {"graph": cmd_graph, "verify": cmd_verify, "dims": cmd_dims}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"hopftower: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (StructureError, TowerError, ValueError, KeyError, OverflowError) as exc:
        print(f"hopftower: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main_entry():
    sys.exit(main())
