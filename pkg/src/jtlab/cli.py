"""Command line surface: enumeration, classification, table reproduction,
realization, and Jordan type computation.

Exit codes: 0 success, 1 verification failure, 2 parse/shape error,
3 partition/Hilbert-function mismatch, 4 not a CIJT partition,
5 quotient not Artinian.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .algebra import (
    GradedIdeal,
    annihilator,
    initial_ideal,
    jordan_degree_type,
    jordan_type,
    quotient,
    rank_mult_power,
)
from .codes import (
    enumerate_cijt,
    enumerate_diagonal_partitions,
    hook_code_direct,
    hook_counts_by_degree,
    is_cijt,
    iota,
    partition_to_branch_label,
)
from .constructor import construct_ci, realize_all, verify_realization
from .errors import (
    JtlabError,
    NotArtinian,
    NotCIJT,
    NotCIShape,
    ParseError,
)
from .hessians import (
    active_hessian_indices,
    nonvanishing_set,
    predicted_nonvanishing_set,
    predicted_rank_profile,
)
from .partitions import (
    HilbertFunction,
    Partition,
    diagonal_lengths,
    format_caret_list,
    is_symmetric_jdt,
)
from .polynomials import parse_poly

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_MISMATCH = 3
EXIT_NOT_CIJT = 4
EXIT_NOT_ARTINIAN = 5


# ---------------------------------------------------------------------------
# row assembly


def classification_row(P, T):
    """All tabulated facts about one partition of diagonal lengths T."""
    label = partition_to_branch_label(P)
    hook = hook_code_direct(P)
    cijt = is_cijt(P)
    row = {
        "partition": str(P),
        "hook_code": hook.traditional_str(support_only=True),
        "branch_label": str(label),
        "subscripted_hook_code": hook.subscripted_str(),
        "symmetric": is_symmetric_jdt(P, T),
        "cijt": cijt,
        "hessian_ranks": None,
        "nonvanishing": None,
    }
    if cijt:
        nonvan = predicted_nonvanishing_set(P)
        profile = predicted_rank_profile(P)
        row["nonvanishing"] = sorted(nonvan)
        row["hessian_ranks"] = [
            profile[(i, T.j - i)] for i in active_hessian_indices(T)
        ]
    return row


def _rank_cells(row, T):
    """Rank column text: the rank, starred when that Hessian vanishes,
    or '-' for non-CIJT rows."""
    active = active_hessian_indices(T)
    if row["hessian_ranks"] is None:
        return ["-"] * len(active)
    nonvan = set(row["nonvanishing"])
    return [
        f"{rank}" if i in nonvan else f"{rank}*"
        for i, rank in zip(active, row["hessian_ranks"])
    ]


def _yn(flag):
    return "Y" if flag else "N"


# ---------------------------------------------------------------------------
# rendering


def render_plain(headers, rows_text, out):
    widths = [
        max(len(h), *(len(r[c]) for r in rows_text)) if rows_text else len(h)
        for c, h in enumerate(headers)
    ]
    out.write(" | ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip() + "\n")
    for r in rows_text:
        out.write(" | ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def render_csv(headers, rows_text, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows_text)


def emit_table(data, fmt, out):
    """data: {"headers": [...], "rows_text": [...], "structured": {...}}."""
    if fmt == "json":
        json.dump(data["structured"], out, indent=2, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        render_csv(data["headers"], data["rows_text"], out)
    else:
        render_plain(data["headers"], data["rows_text"], out)


def classification_table(T, cijt_only=False, with_subscripts=False):
    partitions = enumerate_diagonal_partitions(T)
    if cijt_only:
        partitions = [P for P in partitions if is_cijt(P)]
    rows = [classification_row(P, T) for P in partitions]
    active = active_hessian_indices(T)
    headers = ["P", "hook_code", "branch_label"]
    headers += [f"rk_hess_{i}" for i in active]
    headers += ["symmetric", "cijt"]
    if with_subscripts:
        headers.append("subscripted")
    rows_text = []
    for row in rows:
        cells = [row["partition"], row["hook_code"], row["branch_label"]]
        cells += _rank_cells(row, T)
        cells += [_yn(row["symmetric"]), _yn(row["cijt"])]
        if with_subscripts:
            cells.append(row["subscripted_hook_code"])
        rows_text.append(cells)
    structured = {"hilbert": str(T), "rows": rows}
    return {"headers": headers, "rows_text": rows_text, "structured": structured}


def pattern_table(T):
    """Two-column table pairing each d-part CIJT partition with its
    rectangle flip."""
    d = T.d
    with_d = sorted(
        (P for P in enumerate_cijt(T) if len(P) == d),
        key=lambda P: P.parts,
        reverse=True,
    )
    rows = [{"partition": str(P), "iota": str(iota(P))} for P in with_d]
    return {
        "headers": ["P", "iota(P)"],
        "rows_text": [[r["partition"], r["iota"]] for r in rows],
        "structured": {"hilbert": str(T), "rows": rows},
    }


# ---------------------------------------------------------------------------
# commands


def cmd_enumerate(args, out, err):
    try:
        T = HilbertFunction(args.hilbert)
    except (ParseError, NotCIShape) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    emit_table(classification_table(T, cijt_only=args.cijt_only), args.format, out)
    return EXIT_OK


def cmd_classify(args, out, err):
    try:
        P = Partition(args.partition)
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    diag = diagonal_lengths(P)
    if args.hilbert is not None:
        try:
            T_given = HilbertFunction(args.hilbert)
        except (ParseError, NotCIShape) as exc:
            err.write(f"error: {exc}\n")
            return EXIT_PARSE
        if T_given.values != diag:
            err.write(
                f"error: diagonal lengths of {P} are "
                f"{format_caret_list(diag)}, not {T_given}\n"
            )
            return EXIT_MISMATCH
    report = {"partition": str(P), "diagonal_lengths": format_caret_list(diag)}
    try:
        T = HilbertFunction(diag)
    except NotCIShape:
        T = None
    if T is None:
        report.update(
            {
                "ci_shape": False,
                "cijt": False,
                "hook_counts": {
                    str(deg): c for deg, c in sorted(hook_counts_by_degree(P).items())
                },
            }
        )
    else:
        row = classification_row(P, T)
        report.update(
            {
                "ci_shape": True,
                "cijt": row["cijt"],
                "branch_label": row["branch_label"],
                "hook_code": row["hook_code"],
                "subscripted_hook_code": row["subscripted_hook_code"],
                "symmetric": row["symmetric"],
                "nonvanishing": row["nonvanishing"],
                "hessian_ranks": row["hessian_ranks"],
            }
        )
        if row["cijt"]:
            profile = predicted_rank_profile(P)
            report["rank_profile"] = {
                f"{u}->{s}": rank for (u, s), rank in sorted(profile.items())
            }
    if args.format == "json":
        json.dump(report, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        for key, value in report.items():
            if isinstance(value, bool):
                value = "yes" if value else "no"
            elif isinstance(value, dict):
                value = ", ".join(f"{k}: {v}" for k, v in value.items())
            elif isinstance(value, list):
                value = "{" + ",".join(map(str, value)) + "}"
            elif value is None:
                value = "-"
            out.write(f"{key}: {value}\n")
    return EXIT_OK


def _effective_seed(args):
    env = os.environ.get("JTLAB_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _realization_record(P, realization, report):
    return {
        "partition": str(P),
        "generators": [g.text() for g in realization.ideal.generators],
        "lambda2": [str(v) for v in realization.lambdas],
        "checks": report.as_dict(),
        "all_passed": report.all_passed,
    }


def _print_report(P, realization, report, fmt, out):
    if fmt == "json":
        json.dump(_realization_record(P, realization, report), out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        out.write(f"partition: {P}\n")
        out.write(f"generators: {realization}\n")
        if realization.lambdas:
            out.write(
                "lambda_2: (" + ", ".join(str(v) for v in realization.lambdas) + ")\n"
            )
        out.write(str(report) + "\n")


def cmd_realize(args, out, err):
    seed = _effective_seed(args)
    fmt = args.format
    if args.all is not None:
        try:
            T = HilbertFunction(args.all)
        except (ParseError, NotCIShape) as exc:
            err.write(f"error: {exc}\n")
            return EXIT_PARSE
        if args.alpha_zero:
            results = []
            for P in enumerate_cijt(T):
                realization = construct_ci(P)
                results.append((P, realization, verify_realization(realization)))
        else:
            results = realize_all(T, seed=seed)
        passed = sum(report.all_passed for _, _, report in results)
        if fmt == "json":
            json.dump(
                {
                    "hilbert": str(T),
                    "passed": passed,
                    "total": len(results),
                    "realizations": [
                        _realization_record(P, realization, report)
                        for P, realization, report in results
                    ],
                },
                out,
                indent=2,
                sort_keys=True,
            )
            out.write("\n")
        else:
            for P, realization, report in results:
                _print_report(P, realization, report, fmt, out)
                out.write("\n")
            out.write(f"{passed}/{len(results)} realizations passed all checks\n")
        return EXIT_OK if passed == len(results) else EXIT_CHECK_FAILED
    try:
        P = Partition(args.partition)
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    try:
        if args.alpha_zero:
            realization = construct_ci(P)
        else:
            realization = construct_ci(P, seed=seed)
    except (NotCIJT, NotCIShape) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NOT_CIJT
    report = verify_realization(realization)
    _print_report(P, realization, report, fmt, out)
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILED


def _parse_ideal_arg(text):
    """Inline comma-separated generators, or a path to a file holding them."""
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    gens = [parse_poly(piece) for piece in text.split(",") if piece.strip()]
    if not gens:
        raise ParseError(f"no generators in {text!r}")
    return GradedIdeal(gens)


def cmd_jordan(args, out, err):
    try:
        ell = parse_poly(args.ell)
        if args.dual is not None:
            F = parse_poly(args.dual)
            ideal = annihilator(F)
        else:
            ideal = _parse_ideal_arg(args.ideal)
    except JtlabError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    try:
        A = quotient(ideal)
    except NotArtinian as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NOT_ARTINIAN
    P = jordan_type(A, ell)
    jdt = jordan_degree_type(A, ell)
    report = {
        "ideal": str(ideal),
        "hilbert": format_caret_list(A.hilbert),
        "ell": ell.text(),
        "jordan_type": str(P),
        "jordan_degree_type": [
            {"start": i, "length": s, "multiplicity": m} for (i, s), m in jdt.strings
        ],
        "initial_partition": str(initial_ideal(ideal, ell).partition),
    }
    try:
        T = HilbertFunction(A.hilbert)
        nonvan = nonvanishing_set(A, ell)
        report["nonvanishing"] = sorted(nonvan)
        report["hessian_ranks"] = [
            rank_mult_power(A, ell, i, T.j - i) for i in active_hessian_indices(T)
        ]
    except NotCIShape:
        report["nonvanishing"] = None
        report["hessian_ranks"] = None
    if args.format == "json":
        json.dump(report, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        out.write(f"ideal: ({report['ideal']})\n")
        out.write(f"hilbert function: {report['hilbert']}\n")
        out.write(f"jordan type of {report['ell']}: {report['jordan_type']}\n")
        jdt_text = "; ".join(
            f"{e['multiplicity']} x (start {e['start']}, len {e['length']})"
            if e["multiplicity"] > 1
            else f"(start {e['start']}, len {e['length']})"
            for e in report["jordan_degree_type"]
        )
        out.write(f"jordan degree type: {jdt_text}\n")
        out.write(f"initial-ideal partition: {report['initial_partition']}\n")
        if report["nonvanishing"] is not None:
            out.write(
                "nonvanishing hessians: {"
                + ",".join(map(str, report["nonvanishing"]))
                + "}\n"
            )
            out.write(
                "hessian ranks: "
                + ",".join(map(str, report["hessian_ranks"]))
                + "\n"
            )
    return EXIT_OK


_FIGURE_HILBERTS = {
    "2a-121": "1,2,1",
    "2a-1221": "1,2,2,1",
    "2a-12321": "1,2,3,2,1",
    "9": "1,2,3,3,2,1",
}


def cmd_table(args, out, err):
    fid = args.figure
    name, _, param = fid.partition(":")
    try:
        if fid in _FIGURE_HILBERTS:
            T = HilbertFunction(_FIGURE_HILBERTS[fid])
            data = classification_table(T, with_subscripts=(name != "9"))
        elif name == "3a" and param:
            k = int(param)
            if k < 1:
                raise ParseError(f"k must be positive in {fid!r}")
            T = HilbertFunction.from_dk(2, k)
            data = classification_table(T, with_subscripts=True)
        elif name in ("10.5", "11", "12") and param:
            k = int(param)
            if k < 1:
                raise ParseError(f"k must be positive in {fid!r}")
            d = {"10.5": 3, "11": 4, "12": 5}[name]
            data = pattern_table(HilbertFunction.from_dk(d, k))
        else:
            raise ParseError(f"unknown figure id {fid!r}")
    except (ParseError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    emit_table(data, args.format, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jtlab",
        description=(
            "Jordan types of linear forms on graded Artinian complete "
            "intersection quotients of k[x,y]."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="all partitions of diagonal lengths T")
    p.add_argument("hilbert", help='Hilbert function, e.g. "1,2,3^2,2,1"')
    p.add_argument("--cijt-only", action="store_true")
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="classify one partition")
    p.add_argument("partition", help='partition, e.g. "19^2,15^2,10^3,3^4"')
    p.add_argument("hilbert", nargs="?", default=None, help="expected diagonal lengths")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("realize", help="construct a CI ideal realizing P")
    p.add_argument("partition", nargs="?", default=None)
    p.add_argument("--all", metavar="T", default=None, help="realize every CIJT of T")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha-zero", action="store_true", help="force Lambda_2 = 0")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("jordan", help="Jordan type of a linear form on R/I")
    p.add_argument("ideal", nargs="?", default=None, help="generators, inline or a file")
    p.add_argument("--dual", default=None, help="Macaulay dual generator F in X,Y")
    p.add_argument("--ell", required=True, help='linear form, e.g. "x+2y"')
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_jordan)

    p = sub.add_parser("table", help="reproduce a reference table")
    p.add_argument(
        "figure",
        help="one of 2a-121, 2a-1221, 2a-12321, 3a:k, 9, 10.5:k, 11:k, 12:k",
    )
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "realize" and (args.partition is None) == (args.all is None):
        err.write("error: give exactly one of a partition or --all T\n")
        return EXIT_PARSE
    if args.command == "jordan" and (args.ideal is None) == (args.dual is None):
        err.write("error: give exactly one of an ideal or --dual F\n")
        return EXIT_PARSE
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
