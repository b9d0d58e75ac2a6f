"""Command-line entry point: ``artin-homology <command> [options]``."""

import argparse
import json
import os
import sys
import time

from rich.console import Console
from rich.table import Table

from artin_homology import __version__, reports
from artin_homology.config import FileConfig, RunConfig, build_run_config, load_config
from artin_homology.coxmat import even_presentation, parse_matrix
from artin_homology.errors import ArtinHomologyError, ResourceLimitError
from artin_homology.logging import extract_stats, format_check_log, get_logger, setup_logging, summarize_matrix
from artin_homology.server import run_server

logger = get_logger("main")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_LIMIT = 3
EXIT_UNEXPECTED = 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--input", "-i", help="matrix document file ('-' reads stdin)")
    source.add_argument("--matrix", "-m", help="inline matrix document, e.g. 'n=2; 1 2 4'")
    common.add_argument("--format", choices=("text", "json-lines"), default=None)
    common.add_argument("--config", help="YAML file with limits and seed defaults")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--max-cosets", type=int, default=None)
    common.add_argument("--max-order", type=int, default=None)
    common.add_argument("--max-k", type=int, default=None)

    grouped = argparse.ArgumentParser(add_help=False)
    grouped.add_argument("--group", choices=("artin", "coxeter"), default="artin")

    parser = argparse.ArgumentParser(
        prog="artin-homology",
        description="H_1/H_2 bases, cup and Pontryagin products of even Artin and Coxeter groups",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="parse and check a Coxeter matrix")
    sub.add_parser("h1", parents=[common, grouped], help="H_1 basis or invariants")
    sub.add_parser("h2", parents=[common, grouped], help="H_2 basis with representative words")
    sub.add_parser("cup", parents=[common], help="cup products on H^1 of the Artin group")
    sub.add_parser("pontryagin", parents=[common, grouped], help="commuting pairs realizing the H_2 basis")
    cls = sub.add_parser("class", parents=[common], help="H_2 coordinates of a relator product")
    cls.add_argument("relator_file", help="one factor per line: pair=(i,j) exp=+-1 conj=<word>")
    sub.add_parser("verify", parents=[common], help="run the invariant suite")
    oracle = sub.add_parser("oracle-h2", parents=[common], help="bar-complex H_1/H_2 of a finite group")
    oracle.add_argument(
        "--group-spec",
        default="enumerate",
        help="dihedral:K | elementary:K | product:A,B | enumerate (default, needs a matrix)",
    )
    serve = sub.add_parser("serve", parents=[common], help="run the MCP tool server over SSE")
    serve.add_argument("--host", default=None)
    serve.add_argument("--port", type=int, default=None)
    return parser


def _file_config(args) -> FileConfig | None:
    path = args.config or os.environ.get("ARTIN_HOMOLOGY_CONFIG")
    return load_config(path) if path else None


def _require_matrix(cfg: RunConfig) -> str:
    text = cfg.read_matrix_text()
    if text is None:
        raise ValueError(f"'{cfg.command}' needs a matrix: pass --input or --matrix")
    return text


def execute(cfg: RunConfig) -> tuple[dict, str]:
    """Run one command; returns the report and the matrix summary for logs."""
    if cfg.command == "validate":
        cm = parse_matrix(_require_matrix(cfg))
        return reports.validate_report(cm), f"n={cm.n}"

    if cfg.command == "oracle-h2":
        text = cfg.read_matrix_text()
        p = even_presentation(text) if text is not None else None
        G = reports.resolve_group(cfg.group_spec or "enumerate", p, cfg.limits)
        return reports.oracle_report(G, cfg.limits), summarize_matrix(p)

    p = even_presentation(_require_matrix(cfg))
    matrix = summarize_matrix(p)
    if cfg.command == "h1":
        return reports.h1_report(p, cfg.group), matrix
    if cfg.command == "h2":
        return reports.h2_report(p, cfg.group), matrix
    if cfg.command == "cup":
        return reports.cup_report(p), matrix
    if cfg.command == "pontryagin":
        return reports.pontryagin_report(p, cfg.group, cfg.limits), matrix
    if cfg.command == "class":
        return reports.class_report(p, cfg.read_relator_text()), matrix
    if cfg.command == "verify":
        return reports.verify_report(p, cfg.limits, cfg.seed), matrix
    raise ValueError(f"Unknown command: {cfg.command}")


# text rendering

def _table(title: str, *columns: str) -> Table:
    table = Table(title=title)
    for column in columns:
        table.add_column(column)
    return table


def _render_basis(console: Console, report: dict) -> None:
    title = f"H_{report['degree']}({report['group']}): rank {report['rank']} over {report['coefficients']}"
    table = _table(title, "label", "representative")
    for e in report["elements"]:
        table.add_row(e["label"], e["representative"])
    console.print(table)
    if "rho_star" in report:
        console.print(f"rho* on the alpha/gamma bases: identity mod 2 ({report['rank']} x {report['rank']})")


def _render(console: Console, report: dict) -> None:
    kind = report["kind"]
    if kind == "matrix":
        table = _table(f"Coxeter matrix, n={report['n']}", "i", "j", "m")
        for e in report["labels"]:
            table.add_row(str(e["i"]), str(e["j"]), str(e["m"]))
        console.print(table)
        console.print("all other off-diagonal labels are inf")
        if report["even"]:
            console.print(f"even; |B| = {len(report['B'])}; right-angled: {report['right_angled']}")
        else:
            odd = ", ".join(f"({e['i']},{e['j']})" for e in report["odd_labels"])
            console.print(f"not even: odd labels at {odd}")
    elif kind == "basis":
        _render_basis(console, report)
    elif kind == "invariants":
        console.print(f"H_{report['degree']}({report['group']}) = {report['invariants']}")
    elif kind == "cup":
        table = _table("beta_i cup beta_j = c * beta_ij", "i", "j", "c")
        for e in report["entries"]:
            table.add_row(str(e["i"]), str(e["j"]), str(e["coeff"]))
        console.print(table)
        console.print(f"H^2 / image of cup = {report['cokernel']['text']}")
    elif kind == "pontryagin":
        table = _table(f"Pontryagin pairs ({report['group']})", "(i,j)", "g", "h", "chain")
        for e in report["pairs"]:
            table.add_row(f"({e['i']},{e['j']})", e["g"], e["h"], " ".join(e["chain"]))
        console.print(table)
        if "order" in report:
            console.print(f"chains checked as cycles in a Cayley table of order {report['order']}")
    elif kind == "class":
        table = _table("H_2 coordinates", "(i,j)", "coefficient", "via Magnus")
        for (i, j), c, w in zip(report["B"], report["coords"], report["wedge_coords"]):
            table.add_row(f"({i},{j})", str(c), str(w))
        console.print(table)
        console.print(f"{len(report['factors'])} factors; cross-check {'agrees' if report['agrees'] else 'DISAGREES'}")
    elif kind == "verify":
        table = _table(f"verify (seed {report['seed']})", "check", "status", "detail", "ms")
        for c in report["checks"]:
            table.add_row(c["check"], c["status"], c["detail"], str(c["duration_ms"]))
        console.print(table)
        console.print(f"{report['passed']} passed, {report['failed']} failed, {report['skipped']} skipped")
    elif kind == "oracle":
        console.print(f"order {report['order']}")
        console.print(f"H_1 = {report['h1']['text']}")
        console.print(f"H_2 = {report['h2']['text']}")


def emit(report: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json-lines":
        if report["kind"] == "verify":
            # one record per check, then the summary
            for check in report["checks"]:
                out.write(json.dumps({"schema": reports.SCHEMA, "kind": "check", **check}) + "\n")
            summary = {k: v for k, v in report.items() if k != "checks"}
            out.write(json.dumps({"schema": reports.SCHEMA, **summary}) + "\n")
        else:
            out.write(json.dumps({"schema": reports.SCHEMA, **report}) + "\n")
        return
    _render(Console(file=out, markup=False, highlight=False), report)


def emit_error(code: str, message: str, fmt: str, out=None) -> None:
    if fmt == "json-lines":
        out = out or sys.stdout
        record = {"schema": reports.SCHEMA, "kind": "error", "code": code, "message": message}
        out.write(json.dumps(record) + "\n")
    else:
        Console(file=out or sys.stderr).print(f"Error [{code}]: {message}", markup=False)


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; returns the process exit status."""
    setup_logging()
    args = build_parser().parse_args(argv)
    fmt = args.format or "text"
    start = time.time()

    try:
        cfg = build_run_config(args, _file_config(args))
        fmt = cfg.fmt
        logger.debug(format_check_log(cfg.command, "-", None, f"args: {vars(args)}", "started", 0))
        if cfg.command == "serve":
            run_server(cfg)
            return EXIT_OK
        report, matrix = execute(cfg)
    except ResourceLimitError as e:
        logger.warning(format_check_log(args.command, "-", None, "-", "resource_limit", _elapsed(start), e.message))
        emit_error(e.code, e.message, fmt)
        return EXIT_RESOURCE_LIMIT
    except ArtinHomologyError as e:
        logger.warning(format_check_log(args.command, "-", None, "-", "input_error", _elapsed(start), e.message))
        emit_error(e.code, e.message, fmt)
        return EXIT_INPUT_ERROR
    except (OSError, ValueError) as e:
        logger.warning(format_check_log(args.command, "-", None, "-", "input_error", _elapsed(start), str(e)))
        emit_error("INVALID_INPUT", str(e), fmt)
        return EXIT_INPUT_ERROR
    except Exception as e:
        logger.exception(format_check_log(args.command, "-", None, "-", "error", _elapsed(start), str(e)))
        emit_error("INTERNAL_ERROR", str(e), fmt)
        return EXIT_UNEXPECTED

    failed = bool(report.get("failed")) or report.get("agrees") is False
    status = "failed" if failed else "success"
    logger.info(format_check_log(cfg.command, matrix, None, extract_stats(cfg.command, report), status, _elapsed(start)))
    emit(report, fmt)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _elapsed(start: float) -> int:
    return int((time.time() - start) * 1000)


if __name__ == "__main__":
    sys.exit(main())
