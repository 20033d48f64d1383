"""Command line entry point: ``caminakit {analyze,census,chartab,verify}``."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import analysis as an
from .catalog import DEFAULT_CATALOG
from .character import character_table
from .errors import CaminaError, InternalError
from .group import DEFAULT_MAX_ORDER

log = logging.getLogger("caminakit")


def _checks(text: str) -> tuple[str, ...]:
    if text == "all":
        return an.ALL_CHECKS
    items = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [c for c in items if c not in an.ALL_CHECKS]
    if bad:
        raise argparse.ArgumentTypeError(
            f"unknown checks {bad}; choose from {', '.join(an.ALL_CHECKS)}")
    return items


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-order", type=_positive, default=DEFAULT_MAX_ORDER)
    common.add_argument("--out", type=Path, help="write output here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    checks = argparse.ArgumentParser(add_help=False)
    checks.add_argument("--checks", type=_checks, default=an.ALL_CHECKS,
                        help=f"comma list of {','.join(an.ALL_CHECKS)} (default all)")

    many = argparse.ArgumentParser(add_help=False)
    many.add_argument("--jobs", type=_positive, default=1)
    many.add_argument("--catalog", type=Path,
                      help="file with one group spec per line (default: built-in catalog)")
    many.add_argument("--group", action="append", default=[],
                      help="group spec; repeatable, overrides the catalog")

    p = argparse.ArgumentParser(prog="caminakit",
                                description="Camina pairs and triples of finite groups")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common, checks], help="analyze one group")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="group file (Cayley table or permutation generators)")
    src.add_argument("--group", help="group spec such as dihedral:8")

    c = sub.add_parser("chartab", parents=[common], help="print a character table")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--input")
    src.add_argument("--group")

    sub.add_parser("census", parents=[common, checks, many], help="analyze a catalog of groups")
    sub.add_parser("verify", parents=[common, checks, many],
                   help="run every check over a catalog; pass/fail per group")
    return p


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _catalog(args) -> list[str]:
    if args.group:
        specs = args.group
    elif args.catalog:
        lines = args.catalog.read_text().splitlines()
        specs = [ln.split("#", 1)[0].strip() for ln in lines]
        specs = [s for s in specs if s]
    else:
        specs = list(DEFAULT_CATALOG)
    return specs


def _cmd_analyze(args) -> int:
    cfg = an.AnalyzeConfig(args.input or args.group, args.format, args.checks, args.max_order)
    code, doc = an.run_analyze(cfg)
    _emit(an.dumps(doc) if args.format == "json" else an.render_analysis(doc), args.out)
    return code


def _cmd_chartab(args) -> int:
    G = an.load_group(args.input or args.group, args.max_order)
    doc = an.chartab_doc(character_table(G))
    _emit(an.dumps(doc) if args.format == "json" else an.render_chartab(doc), args.out)
    return an.EXIT_OK


def _cmd_census(args) -> int:
    doc = an.run_census(_catalog(args), args.jobs, args.checks, args.max_order)
    _emit(an.dumps(doc) if args.format == "json" else an.render_census(doc), args.out)
    return an.census_exit_code(doc)


def _cmd_verify(args) -> int:
    doc = an.run_census(_catalog(args), args.jobs, args.checks, args.max_order)
    if args.format == "json":
        text = an.dumps({"groups": {e["name"]: e.get("suites", e.get("error")) for e in doc["groups"]},
                         "errored": doc["errored"], "violated": doc["violated"]})
    else:
        lines = []
        for e in doc["groups"]:
            if e["status"] == "error":
                lines.append(f"ERROR {e['name']}: {e['error']}")
                continue
            failed = [c for c, st in e["suites"].items() if st == "fail"]
            lines.append(f"{'FAIL' if failed else 'PASS'} {e['name']}"
                         + (f": {', '.join(failed)}" if failed else ""))
        lines.append(f"{len(doc['groups']) - len(doc['errored']) - len(doc['violated'])} passed, "
                     f"{len(doc['violated'])} failed, {len(doc['errored'])} errored")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    if doc["violated"]:
        return an.EXIT_VIOLATION
    return an.EXIT_INPUT if doc["errored"] else an.EXIT_OK


COMMANDS = {"analyze": _cmd_analyze, "chartab": _cmd_chartab,
            "census": _cmd_census, "verify": _cmd_verify}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except InternalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return an.EXIT_VIOLATION
    except (CaminaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return an.EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
