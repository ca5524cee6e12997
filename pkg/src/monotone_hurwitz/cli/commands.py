"""
Command-line surface.

    compute {monotone,classical,bms,oracle,jm-total} --alpha 2,1 [--genus G | --r R]
    table   --kind {monotone,classical,toprec} [--d-max D --genus-max G | --genus G --points L --degree N]
    verify  --suite NAME
    cache   {stats,clear}

Exit codes: 0 success, 1 verification failure or I/O error, 2 usage or bounds error.
"""

import argparse
import asyncio
import csv
import io
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from ..algebra.group_algebra import class_coefficient, complete_homogeneous_jm
from ..core.config import ConfigLoader
from ..core.exceptions import (
    BoundExceededError,
    CacheError,
    ComputationError,
    ConfigError,
    HurwitzError,
    InputError,
    NoGenusError,
    VerificationError,
)
from ..core.models import SUITES, FactorizationMode, FactorizationQuery, RunConfig, TableRow
from ..exact.arithmetic import render_exact
from ..exact.partitions import Partition, class_size, genus_of, partitions_up_to, rh_transposition_count
from ..formulas.closed_form import bms_genus0, classical_genus0, formula_report, monotone_genus0
from ..oracle.enumerator import FactorizationOracle
from ..oracle.parallel import ParallelOracle
from ..recurrence.classical import ClassicalJoinCut
from ..recurrence.memo import MemoTable
from ..recurrence.monotone import MonotoneRecurrence
from ..toprec.engine import TopologicalRecursion
from ..utils.logging import setup_logging
from ..verify.suites import SuiteRunner
from .console import ConsoleReporter

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

COMPUTE_KINDS = ("monotone", "classical", "bms", "oracle", "jm-total")
TABLE_KINDS = ("monotone", "classical", "toprec")

# Computation paths per compute kind, default first
METHODS = {
    "monotone": ("recurrence", "closed-form", "oracle", "toprec"),
    "classical": ("joincut", "closed-form", "oracle"),
    "bms": ("formula", "oracle"),
    "oracle": ("monotone", "classical", "rank-weighted"),
    "jm-total": ("group-algebra", "oracle"),
}

_BOUND_FLAGS = (
    "monotone_d_max",
    "monotone_r_max",
    "classical_d_max",
    "classical_r_max",
    "rank_d_max",
    "rank_r_max",
)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one sub-parser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")
    common.add_argument("--workers", type=int, help="Parallel enumeration workers")
    common.add_argument("--stats", action="store_true", help="Print memo statistics on stderr")
    common.add_argument("--format", dest="output_format", choices=("csv", "json", "plain"), default="plain")
    common.add_argument("--output", "-o", type=Path, help="Write results to a file instead of stdout")
    common.add_argument("--cache", dest="cache_path", type=Path, help="Memo cache file (default: $HURWITZ_CACHE)")
    for name in _BOUND_FLAGS:
        common.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, help=argparse.SUPPRESS)
    common.add_argument("--jm-d-max", dest="jm_d_max", type=int, help="Group-algebra cap on d")

    parser = argparse.ArgumentParser(
        prog="monotone-hurwitz",
        description="Exact monotone and classical Hurwitz numbers with independent cross-checks."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", parents=[common], help="Compute one number")
    compute.add_argument("kind", choices=COMPUTE_KINDS)
    compute.add_argument("--alpha", required=True, help="Partition, e.g. 2,1")
    compute.add_argument("--genus", type=int)
    compute.add_argument("--r", type=int)
    compute.add_argument("--method", help="Computation path (see --all-methods)")
    compute.add_argument("--all-methods", action="store_true", help="Run every applicable path")

    table = commands.add_parser("table", parents=[common], help="Emit a table")
    table.add_argument("--kind", choices=TABLE_KINDS, default="monotone")
    table.add_argument("--d-max", type=int, default=4)
    table.add_argument("--genus-max", type=int, default=0)
    table.add_argument("--genus", type=int, default=0)
    table.add_argument("--points", type=int, default=1)
    table.add_argument("--degree", type=int, default=6)

    verify = commands.add_parser("verify", parents=[common], help="Run verification suites")
    verify.add_argument("--suite", choices=SUITES, default="all")
    verify.add_argument("--d-max", type=int, default=4)
    verify.add_argument("--r-max", type=int, default=8)
    verify.add_argument("--weight", type=int, default=6)
    verify.add_argument("--degree", type=int, default=6)

    cache = commands.add_parser("cache", parents=[common], help="Inspect or clear the memo cache")
    cache.add_argument("action", choices=("stats", "clear"))

    return parser


def resolve(args: argparse.Namespace, config: ConfigLoader) -> Tuple[RunConfig, ConfigLoader]:
    """
    Merge parsed arguments into a RunConfig and apply CLI overrides.

    Raises:
        InvalidBoundError: If an override exceeds a hard limit
        ValidationError: If a cap is outside its hard limit
    """
    config = config.with_overrides(
        cache_path=args.cache_path,
        workers=args.workers,
        jm_d_max=args.jm_d_max,
        log_level="DEBUG" if args.verbose else None,
        **{name: getattr(args, name) for name in _BOUND_FLAGS}
    )
    config.validate()

    fields = {
        "command": args.command,
        "output_format": args.output_format,
        "output": args.output,
        "cache_path": config.cache_path,
        "workers": config.workers,
        "stats": args.stats,
    }
    if args.command == "compute":
        fields.update(kind=args.kind, alpha=args.alpha, genus=args.genus, r=args.r,
                      method=args.method, all_methods=args.all_methods)
    elif args.command == "table":
        fields.update(kind=args.kind, d_max=args.d_max, genus_max=args.genus_max,
                      genus=args.genus, points=args.points, degree=args.degree)
    elif args.command == "verify":
        fields.update(suite=args.suite, d_max=args.d_max, r_max=args.r_max,
                      weight=args.weight, degree=args.degree)
    else:
        fields.update(action=args.action)
    return RunConfig(**fields), config


class CommandRunner:
    """Executes one resolved command."""

    def __init__(self, run: RunConfig, config: ConfigLoader, reporter: Optional[ConsoleReporter] = None):
        """
        Initialize command runner.

        Args:
            run: Resolved command-line configuration
            config: Configuration with overrides applied
            reporter: Output sink (default: new ConsoleReporter)
        """
        self.run = run
        self.config = config
        self.reporter = reporter or ConsoleReporter()
        self.oracle = FactorizationOracle(config.bounds)
        self._memo: Optional[MemoTable] = None

    @property
    def memo(self) -> MemoTable:
        if self._memo is None:
            path = self.run.cache_path
            self._memo = MemoTable.load(path) if path is not None else MemoTable()
        return self._memo

    def execute(self) -> int:
        handler = {
            "compute": self.cmd_compute,
            "table": self.cmd_table,
            "verify": self.cmd_verify,
            "cache": self.cmd_cache,
        }[self.run.command]
        status = handler()
        if self._memo is not None and self.run.command in ("compute", "table"):
            if self.run.cache_path is not None:
                self._memo.save_if_dirty()
            if self.run.stats:
                self.reporter.show_stats(self._memo.stats())
        return status

    def emit(self, text: str) -> None:
        """Write results to --output or stdout."""
        if self.run.output is not None:
            self.run.output.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
            logger.info("Wrote %s", self.run.output)
        else:
            self.reporter.write(text)

    # compute

    def _alpha(self) -> Partition:
        alpha = Partition.parse(self.run.alpha or "")
        if alpha.weight < 1:
            raise InputError("--alpha must be a partition of weight >= 1")
        return alpha

    def _r(self, alpha: Partition) -> int:
        """r from --r, or from --genus by Riemann-Hurwitz (transposition kinds only)."""
        if self.run.r is not None:
            return self.run.r
        if self.run.kind == "bms":
            raise InputError("bms counts arbitrary factors: give --r")
        if self.run.genus is not None:
            return rh_transposition_count(alpha, self.run.genus)
        raise InputError("give --r or --genus")

    def cmd_compute(self) -> int:
        alpha = self._alpha()
        kind = self.run.kind
        methods = METHODS[kind]
        if self.run.all_methods:
            chosen = list(methods)
        else:
            chosen = [self.run.method or methods[0]]
            if chosen[0] not in methods:
                raise InputError(f"unknown method {chosen[0]!r} for {kind}; choose from {', '.join(methods)}")

        values: Dict[str, Fraction] = {}
        rendered: Dict[str, str] = {}
        for method in chosen:
            try:
                value = Fraction(self._compute(kind, method, alpha))
            except (BoundExceededError, NoGenusError) as e:
                if not self.run.all_methods:
                    raise
                rendered[method] = f"skipped: {e}"
                continue
            values[method] = value
            rendered[method] = render_exact(value)

        if not self.run.all_methods:
            self.emit(rendered[chosen[0]])
            return EXIT_OK

        agreement = len(set(values.values())) <= 1 if len(values) >= 2 else None
        if kind == "bms" and agreement is False:
            report = formula_report(alpha, "bms-genus0", values.get("oracle"), self._r(alpha))
            rendered["status"] = report.status
        if self.run.output_format == "json":
            self.emit(json.dumps({"alpha": list(alpha), "kind": kind, "values": rendered,
                                  "agreement": agreement}))
        else:
            self.reporter.show_methods(rendered, agreement)
        return EXIT_OK

    def _compute(self, kind: str, method: str, alpha: Partition):
        r = self._r(alpha)
        if kind == "monotone":
            if method == "recurrence":
                return MonotoneRecurrence(self.memo).H(alpha, r)
            if method == "closed-form":
                genus = genus_of(alpha, r)
                if genus != 0:
                    raise NoGenusError(f"closed form covers genus 0 only, r={r} is genus {genus}")
                return monotone_genus0(alpha)
            if method == "oracle":
                return class_size(alpha) * self._oracle_count(alpha, r, FactorizationMode.MONOTONE)
            genus = genus_of(alpha, r)
            engine = TopologicalRecursion({"degree": alpha[0] - 1})
            engine.check_caps(genus, alpha.length, alpha[0] - 1)
            return class_size(alpha) * engine.coefficient(genus, tuple(part - 1 for part in alpha))

        if kind == "classical":
            if method == "joincut":
                return ClassicalJoinCut().H(alpha, r)
            if method == "closed-form":
                if genus_of(alpha, r) != 0:
                    raise NoGenusError(f"closed form covers genus 0 only, r={r}")
                return classical_genus0(alpha)
            return class_size(alpha) * self._oracle_count(alpha, r, FactorizationMode.CLASSICAL)

        if kind == "bms":
            if method == "formula":
                return bms_genus0(alpha, r)
            return class_size(alpha) * self.oracle.count_rank_factorizations(alpha, r, self.run.genus or 0)

        if kind == "oracle":
            mode = FactorizationMode(method)
            if mode is FactorizationMode.RANK_WEIGHTED:
                return self.oracle.count_rank_factorizations(alpha, r, self.run.genus or 0)
            return self._oracle_count(alpha, r, mode)

        # jm-total: all (not necessarily transitive) monotone factorizations
        if method == "group-algebra":
            element = complete_homogeneous_jm(alpha.weight, r, self.config.jm_d_max)
            return class_coefficient(element, alpha)
        return self.oracle.count_monotone(alpha, r, transitive_only=False)

    def _oracle_count(self, alpha: Partition, r: int, mode: FactorizationMode) -> int:
        query = FactorizationQuery(alpha=alpha, r=r, mode=mode)
        if self.config.workers <= 1:
            return self.oracle.count(query)

        parallel = ParallelOracle(self.oracle, self.config.workers)
        with self.reporter.progress() as progress:
            task = progress.add_task(f"Enumerating {alpha.text()}", total=None)

            def progress_callback(done, total):
                progress.update(task, completed=done, total=total)

            return asyncio.run(parallel.count(query, progress_callback=progress_callback))

    # table

    def cmd_table(self) -> int:
        if self.run.kind == "toprec":
            self.emit(self._toprec_table())
            return EXIT_OK

        rows = self._genus_rows()
        fmt = self.run.output_format
        if fmt == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(["alpha", "genus", "value"])
            for alpha, g, _, value in rows:
                writer.writerow([alpha.text(), g, value])
            text = buffer.getvalue()
        elif fmt == "json":
            text = "\n".join(
                TableRow(alpha=list(alpha), genus=g, r=r, value=str(value)).model_dump_json()
                for alpha, g, r, value in rows
            )
        else:
            text = "\n".join(f"{alpha.text()} {g} {value}" for alpha, g, _, value in rows)
        self.emit(text)
        return EXIT_OK

    def _genus_rows(self) -> List[Tuple[Partition, int, int, int]]:
        """(alpha, g, r, value) in (d, reverse-lexicographic partition, g) order."""
        if self.run.kind == "monotone":
            number = MonotoneRecurrence(self.memo).H
        else:
            number = ClassicalJoinCut().H
        rows = []
        for alpha in partitions_up_to(self.run.d_max):
            for g in range(self.run.genus_max + 1):
                r = rh_transposition_count(alpha, g)
                rows.append((alpha, g, r, number(alpha, r)))
        return rows

    def _toprec_table(self) -> str:
        g = self.run.genus or 0
        engine = TopologicalRecursion({"degree": self.run.degree})
        table = engine.mg_table(g, self.run.points, self.run.degree)
        fmt = self.run.output_format
        if fmt == "csv":
            return table.dump_csv()
        if fmt == "json":
            return "\n".join(
                json.dumps({"e": list(e), "genus": g, "value": render_exact(table.entry(e))})
                for e in sorted(table.values)
            )
        if table.points == 1:
            return ",".join(render_exact(value) for value in table.row())
        return "\n".join(
            f"{','.join(map(str, e))} {render_exact(value)}" for e, value in sorted(table.values.items())
        )

    # verify

    def cmd_verify(self) -> int:
        runner = SuiteRunner(self.run, self.config, MonotoneRecurrence(self.memo))
        results = runner.run(self.run.suite)
        if self.run.output_format == "json":
            self.emit("\n".join(result.model_dump_json() for result in results))
        else:
            self.reporter.show_suite_results(results)
        return EXIT_OK if all(result.passed for result in results) else EXIT_FAILURE

    # cache

    def cmd_cache(self) -> int:
        path = self.run.cache_path
        if path is None:
            raise ConfigError("no cache file: pass --cache or set HURWITZ_CACHE")
        if self.run.action == "clear":
            MemoTable(path).clear()
            self.emit(f"cleared {path}")
            return EXIT_OK
        stats = self.memo.stats()
        lines = [f"path {path}"] + [f"{key} {value}" for key, value in stats.items()]
        self.emit("\n".join(lines))
        return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    reporter = ConsoleReporter()
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = ConfigLoader.from_env()
        setup_logging("DEBUG" if args.verbose else config.log_level)
        run, config = resolve(args, config)
        return CommandRunner(run, config, reporter).execute()
    except (InputError, ConfigError, BoundExceededError, NoGenusError, ValidationError) as e:
        reporter.display_error(e)
        return EXIT_USAGE
    except (VerificationError, CacheError, ComputationError, OSError) as e:
        reporter.display_error(e)
        return EXIT_FAILURE
    except HurwitzError as e:
        reporter.display_error(e)
        return EXIT_FAILURE
