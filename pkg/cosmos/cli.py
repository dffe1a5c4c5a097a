"""Command-line front end: load documents, dispatch checks and print verdict reports."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from cosmos import config as settings
from cosmos.api.schemas import Workspace, load_document
from cosmos.commands import COMMANDS, VARIANTS, Options, dispatch
from cosmos.core.errors import BoundaryMismatch, InputError, InstanceMismatch, TruncationError
from cosmos.core.models import Status, Verdict
from cosmos.library import Library, LibraryReport

logger = logging.getLogger(__name__)

EXIT_CODES = {Status.YES: 0, Status.NO: 1, Status.UNKNOWN: 2}
EXIT_INPUT_ERROR = 3

INPUT_ERRORS = (
    InputError,
    BoundaryMismatch,
    TruncationError,
    InstanceMismatch,
    ValidationError,
    json.JSONDecodeError,
    OSError,
    KeyError,
)


@dataclass(frozen=True)
class RunConfig:
    """One invocation: a command, its input documents and the search limits."""

    command: str
    inputs: Tuple[Path, ...] = ()
    dim_bound: int = 3
    budget: int = 1_000_000
    output_format: str = "text"
    probe_set: str = "default"
    variant: str = "cartesian"
    left: bool = False
    group: Optional[str] = None
    listing: bool = False
    extras: Tuple[Path, ...] = field(default_factory=tuple)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        defaults = settings.config
        return cls(
            command=args.command,
            inputs=tuple(Path(p) for p in getattr(args, "inputs", ()) or ()),
            dim_bound=args.dims if args.dims is not None else defaults.dim_bound,
            budget=args.budget if args.budget is not None else defaults.budget,
            output_format=args.format or defaults.output_format,
            probe_set=args.probe_set or defaults.probe_set,
            variant=getattr(args, "variant", "cartesian"),
            left=getattr(args, "left", False),
            group=getattr(args, "group", None),
            listing=getattr(args, "list", False),
            extras=tuple(Path(p) for p in getattr(args, "extras", ()) or ()),
        )


# -- reports -------------------------------------------------------------------------------------


def _dump(data: Any) -> str:
    return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2)


def _certificate_line(certificate: Dict[str, Any]) -> str:
    return " ".join(f"{key}={_compact(certificate[key])}" for key in sorted(certificate))


def _compact(value: Any) -> str:
    if isinstance(value, list):
        return ",".join(str(v) for v in value) or "-"
    return "-" if value is None else str(value)


def format_verdict(verdict: Verdict, output_format: str, source: str = "") -> str:
    data = verdict.to_dict()
    if output_format == "json":
        return _dump({"input": source, **data} if source else data)
    lines = []
    if source:
        lines.append(f"input: {source}")
    lines.append(f"status: {data['status']}")
    lines.append(f"reason: {data['reason']}")
    lines.append(f"certificate: {_certificate_line(data['certificate'])}")
    if data["witness"] is not None:
        lines.append("witness: " + json.dumps(data["witness"], sort_keys=True, ensure_ascii=False))
    return "\n".join(lines)


def format_library(report: LibraryReport, output_format: str) -> str:
    data = report.to_dict()
    if output_format == "json":
        return _dump(data)
    lines = [
        f"{'PASS' if r['passed'] else 'FAIL'} [{r['group']}] {r['name']}: {r['actual']} (expected {r['expected']})"
        for r in data["results"]
    ]
    lines.append(f"{data['total'] - data['failed']}/{data['total']} checks passed")
    return "\n".join(lines)


# -- running -------------------------------------------------------------------------------------


def _worst(codes: Sequence[int]) -> int:
    """Exit status of several verdicts: any NO wins over UNKNOWN, which wins over YES."""
    if not codes:
        return EXIT_CODES[Status.YES]
    if EXIT_CODES[Status.NO] in codes:
        return EXIT_CODES[Status.NO]
    return max(codes)


def extend_library(library: Library, workspace: Workspace) -> None:
    for name, category in workspace.categories.items():
        library.register("category", name, category)
    for name, space in workspace.spaces.items():
        library.register("space", name, space)
    for name, functor in workspace.functors.items():
        library.register("functor", name, functor)


def run_library(config: RunConfig) -> Tuple[int, str]:
    library = Library()
    for path in config.extras:
        extend_library(library, load_document(path))
    if config.listing:
        listing = library.listing()
        if config.output_format == "json":
            return 0, _dump(listing)
        return 0, "\n".join(f"{kind}: {', '.join(names)}" for kind, names in listing.items())
    report = library.run(config.group)
    return (0 if report.passed else 1), format_library(report, config.output_format)


def run(config: RunConfig) -> Tuple[int, str]:
    """Execute one command; returns the exit status and the report for stdout.

    Input errors give status 3 and the error message as the report.
    """
    try:
        settings.configure(
            dim_bound=config.dim_bound,
            budget=config.budget,
            output_format=config.output_format,
            probe_set=config.probe_set,
        )
        if config.command == "library":
            return run_library(config)
        if not config.inputs:
            raise InputError(f"{config.command} needs at least one input document")
        options = Options(dims=config.dim_bound, budget=config.budget, variant=config.variant, left=config.left)
        codes: List[int] = []
        reports: List[str] = []
        for path in config.inputs:
            verdict = dispatch(config.command, load_document(path), options)
            codes.append(EXIT_CODES[verdict.status])
            reports.append(format_verdict(verdict, config.output_format, str(path) if len(config.inputs) > 1 else ""))
        return _worst(codes), "\n".join(reports)
    except INPUT_ERRORS as exc:
        law = getattr(exc, "law", None)
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        return EXIT_INPUT_ERROR, f"error: {message}" + (f" (law: {law})" if law else "")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cosmos", description="Finite checks in the Cat and quasi-category cosmoi.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dims", type=int, default=None, help="Dimension bound for truncated searches")
    common.add_argument("--budget", type=int, default=None, help="Search node budget")
    common.add_argument("--format", choices=settings.FORMATS, default=None, help="Report format")
    common.add_argument("--probe-set", choices=settings.PROBE_SETS, default=None, help="Generalized elements used by for-all checks")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        command = sub.add_parser(name, parents=[common])
        command.add_argument("inputs", nargs="+", help="JSON documents")
        if name == "fibcheck":
            command.add_argument("--variant", choices=sorted(VARIANTS), default="cartesian")
        if name == "ran":
            command.add_argument("--left", action="store_true", help="Compute the left extension instead")
    library = sub.add_parser("library", parents=[common], help="Run the bundled acceptance suite")
    library.add_argument("--list", action="store_true", help="List library items instead of running checks")
    library.add_argument("--group", default=None, help="Run only one group of checks")
    library.add_argument("--with", dest="extras", action="append", default=[], help="Add the items of a document")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=settings.config.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    code, report = run(RunConfig.from_args(args))
    print(report, file=sys.stderr if code == EXIT_INPUT_ERROR else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
