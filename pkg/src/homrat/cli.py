"""Command-line front end.

Exit status: 0 on success, 2 on malformed input or inconsistent
specifications, 1 when an internal check fails (including a certificate that
does not re-validate).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .bds import enumerate_maximal_rank
from .certify import (
    GroupSpec,
    SpecError,
    Verdict,
    certify,
    compute_invariants,
    locate_failure,
    verdict_from_json,
    verdict_to_json,
)
from .grammar import parse_subgroup
from .rootsys import ParseError, group_invariants, parse_type
from .tables import TABLES

__all__ = ["main", "build_parser", "emit_table"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 as well; keep its message
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="homrat", description="Rationality certificates for homogeneous spaces G/H.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, subgroup=False):
        sp.add_argument("--group", required=True, help='semisimple type of G, e.g. "A2+2A1"')
        sp.add_argument("--char", type=int, default=0, dest="characteristic")
        sp.add_argument("--radical", type=int, default=0, help="dimension of the solvable radical")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if subgroup:
            sp.add_argument("--subgroup", help="subgroup spec, e.g. maxrank:A2")

    common(sub.add_parser("invariants", help="t, u, dim of G (and of G/H with --subgroup)"), True)
    sp = sub.add_parser("enumerate", help="maximal-rank subgroups by Borel-de Siebenthal moves")
    common(sp)
    sp.add_argument("--depth", type=int)
    sp.add_argument("--json", action="store_true", help="one JSON object per line")
    sp = sub.add_parser("certify", help="decide rationality of G/H")
    common(sp, True)
    sp.add_argument("--expand-trace", action="store_true")
    sp = sub.add_parser("table", help="reproduce a dimension table")
    sp.add_argument("kind")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp = sub.add_parser("validate", help="re-check a JSON certificate produced by certify")
    sp.add_argument("file", nargs="?", default="-")
    return p


def _group(args) -> GroupSpec:
    return GroupSpec(parse_type(args.group), args.radical, args.characteristic)


def _input_echo(args) -> dict:
    return {
        "group": args.group,
        "subgroup": getattr(args, "subgroup", None),
        "char": args.characteristic,
        "radical": args.radical,
    }


def _cmd_invariants(args, out: TextIO) -> int:
    g = _group(args)
    gi = group_invariants(g.semisimple_type)
    data = {"rank": gi.rank, "u": gi.num_pos_roots, "dim": g.dim, "radical": g.radical_dim}
    if args.subgroup:
        h = parse_subgroup(args.subgroup, g.semisimple_type)
        data["quotient"] = compute_invariants(g, h).to_json()
    if args.format == "json":
        json.dump({"input": _input_echo(args), **data}, out)
        out.write("\n")
    else:
        out.write(f"group {g.semisimple_type}: rank {gi.rank}, u {gi.num_pos_roots}, dim {g.dim}\n")
        if "quotient" in data:
            out.write(_fmt_invariants(data["quotient"]) + "\n")
    return 0


def _fmt_invariants(q: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in q.items())


def _cmd_enumerate(args, out: TextIO) -> int:
    g = _group(args)
    rows = enumerate_maximal_rank(g.semisimple_type, args.depth)
    if args.json or args.format == "json":
        for h in rows:
            out.write(json.dumps(h.to_json()) + "\n")
    else:
        for h in rows:
            chain = ", ".join(
                f"{'ss' if m.kind.startswith('S') else 'levi'}:{m.node} on {m.target}" for m in h.chain
            )
            sc = "simply connected" if h.simply_connected_cover_splits else "not simply connected"
            out.write(f"{str(h):<16} dim {h.dim:<4} [{chain}] {sc}\n")
    return 0


def _fmt_node(node, depth=0) -> list[str]:
    prem = ", ".join(f"{k}={v}" for k, v in node.premises)
    lines = [f"{'  ' * depth}{node.rule_id}: {node.ref}", f"{'  ' * depth}  [{prem}]"]
    for c in node.children:
        lines += _fmt_node(c, depth + 1)
    return lines


def _cmd_certify(args, out: TextIO) -> int:
    if not args.subgroup:
        raise ParseError("certify requires --subgroup", "--subgroup", 0)
    g = _group(args)
    h = parse_subgroup(args.subgroup, g.semisimple_type)
    v = certify(g, h, expand_trace=args.expand_trace)
    if v.rational and locate_failure(g, h, v) is not None:
        print("internal error: certificate does not re-validate", file=sys.stderr)
        return 1
    if args.format == "json":
        json.dump({"input": _input_echo(args), **verdict_to_json(v)}, out)
        out.write("\n")
        return 0
    out.write(f"status: {v.status}\n")
    if v.frontier:
        out.write(f"frontier: {v.frontier}\n")
    if v.note:
        out.write(f"note: {v.note}\n")
    out.write(f"invariants: {_fmt_invariants(v.invariants.to_json())}\n")
    if v.certificate is not None:
        out.write("certificate:\n")
        out.write("\n".join("  " + l for l in _fmt_node(v.certificate)) + "\n")
    return 0


def emit_table(kind: str, fmt: str = "text") -> str:
    if kind not in TABLES:
        raise ParseError(f"unknown table (known: {', '.join(TABLES)})", kind, 0)
    cols = TABLES[kind]()
    if fmt == "json":
        return json.dumps(
            {
                str(c.group): {
                    "dim_G": c.dim_G,
                    "dim_H_lower": c.dim_H_lower,
                    "dim_quotient_upper": c.dim_quotient_upper,
                    "rank_bound": c.rank_bound,
                    "satisfied": c.satisfied,
                }
                for c in cols
            }
        )
    rows = [
        ("G of type", [str(c.group) for c in cols]),
        ("dim G =", [c.dim_G for c in cols]),
        ("dim H >=", [c.dim_H_lower for c in cols]),
        ("dim(G/H) <=", [c.dim_quotient_upper for c in cols]),
        ("n + n + 8 =", [c.rank_bound for c in cols]),
    ]
    lines = [f"{name:<12}" + "".join(f" | {v:>4}" for v in vals) for name, vals in rows]
    lines.insert(1, "-" * len(lines[0]))
    checks = ", ".join(
        f"{c.dim_quotient_upper} < {c.rank_bound} ({'ok' if c.satisfied else 'FAILS'})" for c in cols
    )
    lines.append(f"dim(G/H) < n + n + 8: {checks}; ThBrank gives rationality")
    return "\n".join(lines)


def _cmd_table(args, out: TextIO) -> int:
    out.write(emit_table(args.kind, args.format) + "\n")
    return 0


def _cmd_validate(args, out: TextIO) -> int:
    raw = sys.stdin.read() if args.file == "-" else open(args.file).read()
    try:
        doc = json.loads(raw)
        inp = doc["input"]
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise ParseError(f"not a certify JSON document: {e}", args.file, 0) from None
    g = GroupSpec(parse_type(inp["group"]), inp.get("radical", 0), inp.get("char", 0))
    h = parse_subgroup(inp["subgroup"], g.semisimple_type)
    v: Verdict = verdict_from_json(doc)
    bad = locate_failure(g, h, v)
    if bad is None:
        out.write("valid\n")
        return 0
    path, reason = bad
    out.write(f"invalid at node {list(path)}: {reason}\n")
    return 1


_COMMANDS = {
    "invariants": _cmd_invariants,
    "enumerate": _cmd_enumerate,
    "certify": _cmd_certify,
    "table": _cmd_table,
    "validate": _cmd_validate,
}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except (ParseError, SpecError, ValueError) as e:
        print(f"homrat {args.command}: error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # noqa: BLE001 - exit-code contract
        print(f"homrat {args.command}: internal error: {e!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
