"""Command line front end.

Subcommands: phi, schur-table, verify, tu-check, witness, network-demo.
Every command renders to json, csv, or text (--format), writes to stdout or
--out, and is deterministic for fixed flags and seed: identical invocations
produce byte-identical output.  Exit codes: 0 pass/found, 1 fail/not-found,
2 usage or input error.  CYCLOSCHUR_THREADS caps table-row parallelism.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import cyclotomic, reduction, symfunc, unimodular

SCHEMA = "1"


@dataclass(frozen=True)
class RunConfig:
    command: str
    fmt: str = "text"
    out: str | None = None
    n: int | None = None
    max_len: int | None = None
    max_part: int | None = None
    budget: int | None = None
    seed: int = 0
    matrix: str | None = None
    dims: tuple[int, ...] = ()


class UsageError(Exception):
    """Raised for post-parse validation failures; maps to exit code 2."""


def _partition_label(parts) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def _emit(config: RunConfig, payload: dict, csv_rows: list[list], text_lines: list[str]) -> None:
    if config.fmt == "json":
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif config.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(csv_rows)
        body = buf.getvalue()
    else:
        body = "\n".join(text_lines) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def cmd_phi(config: RunConfig) -> int:
    n = config.n
    if n is None or n < 1:
        raise UsageError("phi requires --n with a positive integer")
    poly = cyclotomic.cyclotomic_poly(n)
    coeffs = list(poly.coeffs)
    series = cyclotomic.inverse_cyclotomic_series(n, len(coeffs))
    offending = [k for k, c in enumerate(coeffs) if abs(c) > 1]
    flag = not offending
    payload = {
        "schema": SCHEMA, "command": "phi", "n": n, "degree": poly.degree,
        "coefficients": coeffs, "inverse_series_prefix": series,
        "all_in_unit_range": flag, "offending_degrees": offending,
    }
    csv_rows = [["degree", "coefficient", "inverse_series_coefficient"]]
    csv_rows += [[k, coeffs[k], series[k]] for k in range(len(coeffs))]
    text = [
        f"Phi_{n}: degree {poly.degree}",
        "coefficients (ascending): " + " ".join(str(c) for c in coeffs),
        "1/Phi series prefix:      " + " ".join(str(c) for c in series),
        "all coefficients in {-1,0,1}: " + ("yes" if flag else
            "no (offending degrees: " + ", ".join(str(k) for k in offending) + ")"),
    ]
    _emit(config, payload, csv_rows, text)
    return 0


def _table_threads(n_rows: int) -> int:
    cap = os.environ.get("CYCLOSCHUR_THREADS")
    limit = int(cap) if cap else (os.cpu_count() or 1)
    return max(1, min(limit, n_rows, 8))


def cmd_schur_table(config: RunConfig) -> int:
    n, max_len, max_part = config.n, config.max_len, config.max_part
    if n is None or n < 2:
        raise UsageError("schur-table requires --n >= 2")
    if max_len is None or max_part is None or max_len < 0 or max_part < 0:
        raise UsageError("schur-table requires nonnegative --max-len and --max-part")
    d = cyclotomic.euler_phi(n)
    if max_len > d:
        raise UsageError(
            f"--max-len {max_len} exceeds phi({n}) = {d}; values are bounded only "
            f"for partitions with at most phi(n) parts, so longer rows are not tabulated")
    parts = list(symfunc.partitions_in_box(max_len, max_part))
    threads = _table_threads(len(parts))

    def value_of(p: symfunc.Partition) -> int:
        return symfunc.schur_at_roots(n, p)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(value_of, parts))
    else:
        values = [value_of(p) for p in parts]
    counts = Counter(values)
    payload = {
        "schema": SCHEMA, "command": "schur-table", "n": n,
        "max_len": max_len, "max_part": max_part,
        "rows": [{"partition": list(p.parts), "value": v} for p, v in zip(parts, values)],
        "value_counts": {str(k): counts[k] for k in sorted(counts)},
    }
    csv_rows = [["partition", "value"]]
    csv_rows += [[_partition_label(p.parts), v] for p, v in zip(parts, values)]
    text = [f"schur values at the primitive {n}-th roots, box ({max_len}, {max_part}):"]
    text += [f"  {_partition_label(p.parts):>{2 * max_len + 4}}  {v}"
             for p, v in zip(parts, values)]
    text.append("value counts: " + ", ".join(f"{k}: {counts[k]}" for k in sorted(counts)))
    _emit(config, payload, csv_rows, text)
    return 0


def cmd_verify(config: RunConfig) -> int:
    n, max_part = config.n, config.max_part
    if n is None or n < 2:
        raise UsageError("verify requires --n >= 2")
    if max_part is None or max_part < 0:
        raise UsageError("verify requires --max-part >= 0")
    report = reduction.verify_theorem(n, max_part,
                                      structural_budget=config.budget or 200_000,
                                      seed=config.seed)
    payload = {"schema": SCHEMA, "command": "verify", **report.to_json_dict()}
    star = report.star
    s = report.structural
    text = [f"verify n={n}, box ({cyclotomic.euler_phi(n)}, {max_part})"]
    text.append("condition (*): " + ("satisfied" if star.satisfied else "NOT satisfied")
                + " (odd primes: "
                + (", ".join(str(p) for p in star.odd_prime_factors) or "none") + ")")
    if report.direct_pass:
        text.append(f"direct check: pass ({report.direct_total} partitions, "
                    "all values in {-1,0,1})")
    else:
        part, value = report.direct_counterexample
        confirm = "confirmed" if report.direct_confirmed else "NOT confirmed"
        text.append(f"direct check: FAIL at {_partition_label(part.parts)} "
                    f"value {value} ({confirm} by the determinant route)")
    verdict = {True: "pass", False: "FAIL", None: "inconclusive"}[s.verdict]
    detail = f"mode {s.mode}, {s.bases} bases, {s.singular} singular of {s.subsets_total}"
    if s.common_abs_det is not None:
        detail += f", common |det| {s.common_abs_det}"
    if s.witness is not None:
        detail += f", |det| values {s.witness[2]} vs {s.witness[3]}"
    text.append(f"structural check: {verdict} ({detail})")
    text.append("consistent: " + ("yes" if report.consistent else "NO"))
    csv_rows = [["check", "result", "detail"],
                ["star", star.satisfied,
                 " ".join(str(p) for p in star.odd_prime_factors) or "none"],
                ["direct", report.direct_pass,
                 "" if report.direct_pass else
                 f"{_partition_label(report.direct_counterexample[0].parts)}"
                 f"={report.direct_counterexample[1]}"],
                ["structural", s.verdict, s.mode],
                ["consistent", report.consistent, ""]]
    _emit(config, payload, csv_rows, text)
    passed = report.direct_pass and s.verdict is not False
    return 0 if passed else 1


def _load_matrix(path: str) -> unimodular.RationalMatrix:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise UsageError(f"matrix file not found: {path}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
                         f"{exc.msg}")
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise UsageError(f"{path}: expected a JSON array of arrays of integer strings")
    rows = []
    for i, row in enumerate(data):
        parsed = []
        for j, cell in enumerate(row):
            try:
                parsed.append(int(cell))
            except (TypeError, ValueError):
                raise UsageError(f"{path}: row {i + 1}, column {j + 1}: "
                                 f"not an integer string: {cell!r}")
        rows.append(parsed)
        if len(row) != len(data[0]):
            raise UsageError(f"{path}: row {i + 1} has {len(row)} entries, "
                             f"expected {len(data[0])}")
    return unimodular.RationalMatrix.from_rows(rows)


def cmd_tu_check(config: RunConfig) -> int:
    if not config.matrix:
        raise UsageError("tu-check requires --matrix <path>")
    matrix = _load_matrix(config.matrix)
    report = unimodular.is_totally_unimodular(matrix, seed=config.seed)
    witness = None
    if report.witness is not None:
        ri, ci, det = report.witness
        witness = {"rows": list(ri), "cols": list(ci), "det": str(det)}
    payload = {
        "schema": SCHEMA, "command": "tu-check",
        "rows": matrix.rows, "cols": matrix.cols,
        "totally_unimodular": report.is_totally_unimodular,
        "mode": report.mode, "submatrices_checked": report.submatrices_checked,
        "witness": witness,
    }
    csv_rows = [["rows", "cols", "totally_unimodular", "mode", "submatrices_checked"],
                [matrix.rows, matrix.cols, report.is_totally_unimodular,
                 report.mode, report.submatrices_checked]]
    text = [f"matrix {matrix.rows}x{matrix.cols}: "
            + ("totally unimodular" if report.is_totally_unimodular
               else "NOT totally unimodular"),
            f"mode: {report.mode}, submatrices checked: {report.submatrices_checked}"]
    if witness:
        text.append(f"witness: rows {witness['rows']}, cols {witness['cols']}, "
                    f"det {witness['det']}")
    _emit(config, payload, csv_rows, text)
    return 0 if report.is_totally_unimodular else 1


def cmd_witness(config: RunConfig) -> int:
    if not config.dims or any(d < 1 for d in config.dims):
        raise UsageError("witness requires one or more positive dimensions")
    system = unimodular.maximal_circuit(config.dims[0])
    for d in config.dims[1:]:
        system = unimodular.tensor_product(system, unimodular.maximal_circuit(d))
    budget = config.budget if config.budget is not None else 60
    found = unimodular.find_nonunimodular_witness(system, budget=budget, seed=config.seed)
    base = {
        "schema": SCHEMA, "command": "witness", "dims": list(config.dims),
        "ambient_dim": system.ambient_dim, "system_size": len(system),
        "budget": budget, "seed": config.seed,
    }
    if found is None:
        payload = {**base, "found": False, "witness": None}
        csv_rows = [["found", "budget", "seed"], [False, budget, config.seed]]
        text = [f"no witness found within budget {budget} (seed {config.seed}); "
                "this does not certify unimodularity"]
        _emit(config, payload, csv_rows, text)
        return 1
    payload = {**base, "found": True, "witness": {
        "basis_a": list(found.basis_a), "basis_b": list(found.basis_b),
        "abs_det_a": str(found.abs_det_a), "abs_det_b": str(found.abs_det_b),
        "moves_used": found.moves_used,
    }}
    csv_rows = [["found", "abs_det_a", "abs_det_b", "basis_a", "basis_b"],
                [True, str(found.abs_det_a), str(found.abs_det_b),
                 " ".join(map(str, found.basis_a)), " ".join(map(str, found.basis_b))]]
    text = [
        f"witness found after {found.moves_used} exchange scans (seed {config.seed}):",
        f"  basis A (|det| {found.abs_det_a}): {list(found.basis_a)}",
        f"  basis B (|det| {found.abs_det_b}): {list(found.basis_b)}",
    ]
    _emit(config, payload, csv_rows, text)
    return 0


def cmd_network_demo(config: RunConfig) -> int:
    m, n = config.dims
    if m < 1 or n < 1:
        raise UsageError("network-demo requires positive m and n")
    matrix, instance = unimodular.bipartite_construction(m, n)
    net = unimodular.network_matrix(instance)
    matches = matrix.transpose().entries == net.entries
    payload = {
        "schema": SCHEMA, "command": "network-demo", "m": m, "n": n,
        "matrix": matrix.to_integer_strings(),
        "tree_arcs": [list(a) for a in instance.tree_arcs],
        "graph_arcs": [list(a) for a in instance.graph_arcs],
        "network_matrix": net.to_integer_strings(),
        "transpose_matches": matches,
    }

    def fmt_rows(mat: unimodular.RationalMatrix) -> list[str]:
        return ["  " + " ".join(f"{int(x):>2}" for x in row) for row in mat.entries]

    text = [f"coordinate matrix A ({matrix.rows}x{matrix.cols}):"]
    text += fmt_rows(matrix)
    text.append("tree arcs: " + ", ".join(f"{u}->{v}" for u, v in instance.tree_arcs))
    text.append("graph arcs: " + ", ".join(f"{u}->{v}" for u, v in instance.graph_arcs))
    text.append(f"network matrix ({net.rows}x{net.cols}):")
    text += fmt_rows(net)
    text.append(f"transpose matches: {'true' if matches else 'false'}")
    csv_rows = [["m", "n", "transpose_matches"], [m, n, matches]]
    _emit(config, payload, csv_rows, text)
    return 0 if matches else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycloschur",
        description="Exact computations around roots of unity: cyclotomic "
                    "coefficients, Schur values, unimodularity checks, and "
                    "network-matrix demos.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", default=None, help="write output to this file")
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", parents=[common],
                       help="cyclotomic coefficients and the inverse series prefix")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("schur-table", parents=[common],
                       help="table of Schur values over a partition box")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--max-part", type=int, required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="run the direct, structural, and gate checks for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-part", type=int, default=8)
    p.add_argument("--budget", type=int, default=200_000)

    p = sub.add_parser("tu-check", parents=[common],
                       help="total unimodularity of a matrix file")
    p.add_argument("--matrix", required=True,
                   help="JSON file: array of arrays of integer strings")

    p = sub.add_parser("witness", parents=[common],
                       help="search a tensor of maximal circuits for two distinct |det| bases")
    p.add_argument("dims", type=int, nargs="+")
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("network-demo", parents=[common],
                       help="bipartite construction, its network matrix, and the "
                            "transpose identity")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    return parser


_HANDLERS = {
    "phi": cmd_phi,
    "schur-table": cmd_schur_table,
    "verify": cmd_verify,
    "tu-check": cmd_tu_check,
    "witness": cmd_witness,
    "network-demo": cmd_network_demo,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        command=args.command, fmt=args.format, out=args.out, seed=args.seed,
        n=getattr(args, "n", None) if args.command != "network-demo" else None,
        max_len=getattr(args, "max_len", None),
        max_part=getattr(args, "max_part", None),
        budget=getattr(args, "budget", None),
        matrix=getattr(args, "matrix", None),
        dims=tuple(getattr(args, "dims", ())) if args.command == "witness"
             else ((args.m, args.n) if args.command == "network-demo" else ()),
    )
    try:
        return _HANDLERS[config.command](config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
