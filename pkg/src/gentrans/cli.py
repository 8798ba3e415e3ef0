"""Command-line interface: ``gentrans tables|query|quiver|tensor|verify``.

Exit codes: 0 success, 2 input error, 3 outside table range, 4 budget or size
guard exceeded, 5 verification failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from . import gtd as G
from .errors import BudgetExceeded, InvalidInput, OracleTooLarge, OutsideTableRange
from .quiver import (DimVector, euler_form, has_open_orbit_uniform, orbit_dimension_oracle,
                     rep_dim)
from .rootsys import LieType, weyl_dim
from .schema import SCHEMA_VERSION
from .tensor import (count_system_solutions, e6_klimyk_witness, invariant_dim,
                     tensor_decompose)
from .verify import run_checks

EXIT_OK, EXIT_INPUT, EXIT_RANGE, EXIT_BUDGET, EXIT_VERIFY = 0, 2, 3, 4, 5
SEED_ENV = "GENTRANS_SEED"

WEIGHT_HELP = ("weights are digit strings such as 0001 when every coordinate is at most 9, "
               "or comma-separated such as 0,0,10,1")


def parse_weight(text: str, rank: int | None = None) -> tuple[int, ...]:
    text = text.strip()
    try:
        if "," in text:
            w = tuple(int(x) for x in text.split(","))
        elif text.isdigit():
            w = tuple(int(c) for c in text)
        else:
            raise ValueError
    except ValueError:
        raise InvalidInput(f"bad weight {text!r}; {WEIGHT_HELP}") from None
    if any(a < 0 for a in w):
        raise InvalidInput(f"weight {text!r} is not dominant")
    if rank is not None and len(w) != rank:
        raise InvalidInput(f"weight {text!r} has {len(w)} coordinates, expected {rank}")
    return w


def record(command: str, inputs: dict, result, provenance=()) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "provenance": sorted({p.value if hasattr(p, "value") else p for p in provenance}),
        "version": __version__,
        "schema_version": SCHEMA_VERSION,
    }


def dumps(rec: dict) -> str:
    return json.dumps(rec, sort_keys=True, indent=2)


def _node_text(nodes) -> str:
    return ",".join(str(i) for i in sorted(nodes))


def build_table(which: int, max_rank: int) -> tuple[list[str], list[list], dict]:
    """Header, TSV rows and JSON payload for one table."""
    if which not in (1, 2, 3, 4, 5):
        raise InvalidInput(f"unknown table {which}; choose 1-5")
    if not 3 <= max_rank <= 8:
        raise OutsideTableRange(f"max rank must be within 3..8, got {max_rank}")
    types = G.table_types(max_rank)
    rows, provenance = [], set()
    if which in (2, 5):
        fn = G.gtd_flag if which == 2 else G.gtd_levi
        width = max(t.rank for t in types)
        header = ["type"] + [str(i) for i in range(1, width + 1)]
        json_rows = []
        for t in types:
            recs = [fn(t, i) for i in range(1, t.rank + 1)]
            provenance |= {r.provenance.value for r in recs}
            rows.append([str(t)] + [r.value for r in recs] + [""] * (width - t.rank))
            json_rows.append({"type": str(t), "values": [r.value for r in recs],
                              "provenance": [r.provenance.value for r in recs]})
        return header, rows, {"table": which, "rows": json_rows, "provenance": provenance}
    if which == 1:
        recs = [G.gtd_group(t) for t in types]
        provenance = {r.provenance.value for r in recs}
        header = ["type"] + [str(t) for t in types]
        rows = [["gtd(G)"] + [r.value for r in recs]]
        json_rows = [{"type": str(r.type), "value": r.value, "provenance": r.provenance.value}
                     for r in recs]
        return header, rows, {"table": 1, "rows": json_rows, "provenance": provenance}
    test = G.open_triple if which == 3 else G.levi_open_orbit
    cells = []
    for t in types:
        nodes = [i for i in range(1, t.rank + 1) if test(t, i)]
        fn = G.gtd_flag if which == 3 else G.gtd_levi
        provenance |= {fn(t, i).provenance.value for i in range(1, t.rank + 1)}
        if nodes:
            cells.append((str(t), nodes))
    header = ["type"] + [c[0] for c in cells]
    rows = [["i"] + [_node_text(c[1]) for c in cells]]
    json_rows = [{"type": name, "nodes": nodes} for name, nodes in cells]
    return header, rows, {"table": which, "rows": json_rows, "provenance": provenance}


def cmd_tables(args) -> tuple[str, int]:
    header, rows, payload = build_table(args.which, args.max_rank)
    if args.format == "tsv":
        lines = ["\t".join(header)] + ["\t".join(str(c) for c in row) for row in rows]
        return "\n".join(lines), EXIT_OK
    prov = payload.pop("provenance")
    rec = record("tables", {"which": args.which, "max_rank": args.max_rank}, payload, prov)
    return dumps(rec), EXIT_OK


def cmd_query(args) -> tuple[str, int]:
    t = LieType.parse(args.type, args.rank)
    action = args.action
    node = None if args.node in ("-", "") else _int(args.node, "node")
    inputs = {"type": str(t), "node": node, "action": action}
    if action == "borel":
        G.check_table_range(t)
        rec = record("query", inputs, {"value": G.borel_gtd(t)})
        return dumps(rec), EXIT_OK
    if action == "group":
        r = G.gtd_group(t)
    else:
        if node is None:
            raise InvalidInput(f"action {action} needs a node")
        r = (G.gtd_flag if action == "flag" else G.gtd_levi)(t, node)
    return dumps(record("query", inputs, r.as_dict(), [r.provenance])), EXIT_OK


def _int(text, what) -> int:
    try:
        return int(text)
    except (TypeError, ValueError):
        raise InvalidInput(f"bad {what} {text!r}") from None


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return _int(os.environ.get(SEED_ENV, "0"), SEED_ENV)


def cmd_quiver(args) -> tuple[str, int]:
    if args.vector:
        alpha = DimVector(parse_weight(args.vector))
        uniform = len(set(alpha.coords[1:])) == 1 and min(alpha.coords) > 0
    else:
        if len(args.dna) != 3:
            raise InvalidInput("give d n a, or --vector")
        d, n, a = (_int(x, "argument") for x in args.dna)
        if min(d, n, a) < 1:
            raise InvalidInput("d, n and a must be positive")
        alpha, uniform = DimVector.uniform(d, n, a), True
    d = alpha.arms
    result = {"euler": euler_form(d, alpha, alpha), "rep_dim": rep_dim(d, alpha)}
    result["open"] = has_open_orbit_uniform(d, alpha.coords[0], alpha.coords[1]) if uniform else None
    inputs = {"vector": list(alpha.coords), "arms": d}
    if args.oracle:
        seed = _seed(args)
        rank = orbit_dimension_oracle(d, alpha, seed=seed, trials=args.trials)
        result.update(oracle_rank=rank, oracle_open=rank == result["rep_dim"])
        inputs.update(seed=seed, trials=args.trials)
        if uniform and result["oracle_open"] != result["open"]:
            result["agreement"] = False
        elif uniform:
            result["agreement"] = True
    return dumps(record("quiver", inputs, result)), EXIT_OK


def _budget(args):
    return args.budget


def cmd_tensor(args) -> tuple[str, int]:
    budget = _budget(args)
    if args.e6_witness:
        value = e6_klimyk_witness(budget)
        return dumps(record("tensor", {"e6_witness": True}, {"multiplicity": value})), EXIT_OK
    if args.system is not None:
        n = [_int(x, "n") for x in args.system]
        if min(n) < 0:
            raise InvalidInput("n_j must be nonnegative")
        return dumps(record("tensor", {"system": n}, {"solutions": count_system_solutions(*n)})), EXIT_OK
    if len(args.args) < 2:
        raise InvalidInput("give TYPE RANK and weights")
    t = LieType.parse(args.args[0], args.args[1])
    weights = [parse_weight(w, t.rank) for w in args.args[2:]]
    inputs = {"type": str(t), "weights": [list(w) for w in weights]}
    if args.invariants:
        if not weights:
            raise InvalidInput("need at least one weight")
        value = invariant_dim(t, weights, budget)
        return dumps(record("tensor", inputs, {"invariant_dim": value})), EXIT_OK
    if len(weights) != 2:
        raise InvalidInput("a decomposition needs exactly two weights")
    m = tensor_decompose(t, weights[0], weights[1], budget)
    summands = [{"highest_weight": list(hw), "multiplicity": k, "dim": weyl_dim(t, hw)}
                for hw, k in m.items()]
    result = {"summands": summands, "total_dim": m.dim(t),
              "product_dim": weyl_dim(t, weights[0]) * weyl_dim(t, weights[1])}
    return dumps(record("tensor", inputs, result)), EXIT_OK


def _apply_override(ref, spec: str):
    # action:key:class=value, e.g. levi:E6:3=0 or flag:D:spin/odd=4
    try:
        lhs, value = spec.split("=")
        action, key, node_class = lhs.split(":")
        return G.with_override(action, key, node_class, int(value), ref)
    except (ValueError, KeyError):
        raise InvalidInput(f"bad override {spec!r}; expected action:key:class=value") from None


def cmd_verify(args) -> tuple[str, int]:
    if not 3 <= args.max_rank <= 8:
        raise OutsideTableRange(f"max rank must be within 3..8, got {args.max_rank}")
    ref = None
    for spec in args.override or ():
        ref = _apply_override(ref, spec)
    checks = run_checks(args.max_rank, ref)
    ok = all(c.passed for c in checks)
    code = EXIT_OK if ok else EXIT_VERIFY
    if args.format == "tsv":
        lines = ["check\tanchor\tstatus\tcases\tfirst_failure"]
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{c.name}\t{c.anchor}\t{status}\t{c.cases}\t{c.failures[0] if c.failures else ''}")
        return "\n".join(lines), code
    inputs = {"max_rank": args.max_rank, "overrides": list(args.override or ())}
    result = {"passed": ok, "checks": [c.as_dict() for c in checks]}
    return dumps(record("verify", inputs, result)), code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gentrans",
        description="Generic transitivity degrees of simple groups on flag varieties.",
        epilog=f"Environment: GENTRANS_BUDGET sets the tensor work budget, {SEED_ENV} the "
               "default oracle seed; flags take precedence. Exit codes: 0 ok, 2 input, "
               "3 outside table range, 4 budget or size guard, 5 verification failure.",
    )
    p.add_argument("--version", action="version", version=f"gentrans {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("tables", help="print one of the classification tables 1-5")
    s.add_argument("which", type=int, choices=[1, 2, 3, 4, 5])
    s.add_argument("--max-rank", type=int, default=8)
    s.add_argument("--format", choices=["tsv", "json"], default="tsv")
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("query", help="one gtd value with its provenance")
    s.add_argument("type", help="series letter such as A, or a full type such as E6")
    s.add_argument("rank", help="rank, or - when the type already names it")
    s.add_argument("node", help="node number, or - for group/borel")
    s.add_argument("action", choices=["flag", "levi", "group", "borel"])
    s.set_defaults(func=cmd_query)

    s = sub.add_parser("quiver", help="open-orbit decider for star quivers",
                       description="Either d n a for the vector (n, a, ..., a) with d arms, "
                                   "or --vector with the centre first.")
    s.add_argument("dna", nargs="*", metavar="d n a")
    s.add_argument("--vector", help="full dimension vector, e.g. 3,1,1,1")
    s.add_argument("--oracle", action="store_true", help="also run the exact-rank orbit oracle")
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--trials", type=int, default=3)
    s.set_defaults(func=cmd_quiver)

    s = sub.add_parser("tensor", help="tensor products and invariants", epilog=WEIGHT_HELP)
    s.add_argument("args", nargs="*", metavar="TYPE RANK WEIGHT",
                   help="type, rank (or -) and weights")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--invariants", action="store_true",
                   help="dimension of invariants in the product of all given weights")
    g.add_argument("--system", nargs=4, metavar="N", help="count solutions of the pairing system")
    g.add_argument("--e6-witness", action="store_true",
                   help="multiplicity of E(2w5) in E(2w3) x E(2w3) for E6")
    s.add_argument("--budget", type=int, default=None, help="work budget in weight terms")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("verify", help="run every consistency check")
    s.add_argument("max_rank", nargs="?", type=int, default=8)
    s.add_argument("--override", action="append", metavar="ACTION:KEY:CLASS=VALUE",
                   help="replace one reference entry before checking (fault injection)")
    s.add_argument("--format", choices=["tsv", "json"], default="json")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OutsideTableRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (BudgetExceeded, OracleTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
