"""Command-line interface.

Subcommands: ``validate``, ``homology``, ``snf``, and the ``seifert`` group
(``equiv``, ``normalize``, ``emit``).  Results go to stdout, diagnostics to
stderr.  With the global ``--porcelain`` flag stdout instead carries stable
line-oriented records introduced by the header line ``porcelain 1``, and the
human rendering moves to stderr.  Exit codes: 0 success, 1 semantic failure
(invalid data, inequivalent invariants), 2 unreadable or malformed input.

``seifert emit`` writes a flow-complex document, which is already a versioned
machine format; it is emitted unchanged in both modes so it can be piped
straight back into ``homology``.  File arguments accept ``-`` for stdin.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .chain import HomologyGroup
from .flow import parse_flow_complex
from .linalg import format_matrix, parse_matrix, smith_normal_form
from .seifert import format_invariant, parse_invariant, seifert_equivalent
from .validation import ParseError, ValidationError, ValidationReport

__all__ = [
    "CommandResult",
    "cmd_validate",
    "cmd_homology",
    "cmd_snf",
    "cmd_seifert_equiv",
    "cmd_seifert_normalize",
    "cmd_seifert_emit",
    "build_parser",
    "main",
]


@dataclass(frozen=True)
class CommandResult:
    """Outcome of one subcommand, independent of stream handling.

    ``machine_lines`` are the porcelain records (None when the command's
    output is already machine-stable, as for ``seifert emit``);
    ``diagnostics`` is error or violation detail for stderr.
    """

    exit_code: int
    human_text: str = ""
    machine_lines: tuple[str, ...] | None = None
    diagnostics: str = ""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _guard(run) -> CommandResult:
    """Map the library's exceptions onto exit codes 1 and 2."""
    try:
        return run()
    except ParseError as exc:
        return CommandResult(2, diagnostics=f"error: {exc}")
    except ValidationError as exc:
        head = f"error: {exc.context}" if exc.context else "error: validation failed"
        detail = exc.report.describe()
        return CommandResult(1, diagnostics=head + ("\n" + detail if detail else ""))
    except OSError as exc:
        return CommandResult(2, diagnostics=f"error: {exc}")


def _violation_lines(report: ValidationReport) -> tuple[str, ...]:
    return tuple(
        " ".join(["violation", violation.code, *violation.subjects])
        for violation in report.violations
    )


def cmd_validate(path: str) -> CommandResult:
    def run() -> CommandResult:
        complex_ = parse_flow_complex(_read_text(path))
        report = complex_.validate()
        if report.ok:
            try:
                complex_.to_chain_complex()
            except ValidationError as exc:
                report = exc.report
        if report.ok:
            return CommandResult(0, human_text="valid", machine_lines=("valid",))
        return CommandResult(
            1,
            human_text="invalid",
            machine_lines=_violation_lines(report),
            diagnostics=report.describe(),
        )

    return _guard(run)


def _homology_record(group: HomologyGroup) -> str:
    line = f"homology {group.degree} {group.betti}"
    if group.torsion:
        line += " " + ",".join(str(d) for d in group.torsion)
    return line


def cmd_homology(path: str | None = None, seifert: str | None = None) -> CommandResult:
    if (path is None) == (seifert is None):
        raise ValueError("exactly one of path or seifert is required")

    def run() -> CommandResult:
        if seifert is not None:
            groups = parse_invariant(seifert).homology_closed_form()
        else:
            groups = parse_flow_complex(_read_text(path)).to_chain_complex().homology()
        human = "\n".join(f"H_{group.degree} = {group}" for group in groups)
        return CommandResult(0, human, tuple(_homology_record(g) for g in groups))

    return _guard(run)


def cmd_snf(path: str, witness: bool = False) -> CommandResult:
    def run() -> CommandResult:
        decomposition = smith_normal_form(parse_matrix(_read_text(path)))
        divisor_text = " ".join(str(d) for d in decomposition.divisors)
        human = f"elementary divisors: {divisor_text or '(none)'}"
        if witness:
            for label, matrix in (
                ("u", decomposition.u),
                ("s", decomposition.s),
                ("v", decomposition.v),
            ):
                human += f"\n{label} =\n" + format_matrix(matrix).rstrip("\n")
        record = "snf" + (f" {divisor_text}" if divisor_text else "")
        return CommandResult(0, human, (record,))

    return _guard(run)


def cmd_seifert_equiv(first: str, second: str) -> CommandResult:
    def run() -> CommandResult:
        verdict = seifert_equivalent(parse_invariant(first), parse_invariant(second))
        word = "equivalent" if verdict else "inequivalent"
        return CommandResult(0 if verdict else 1, word, (f"equiv {word}",))

    return _guard(run)


def cmd_seifert_normalize(invariants: str) -> CommandResult:
    def run() -> CommandResult:
        canonical = format_invariant(parse_invariant(invariants).normalized())
        return CommandResult(0, canonical, (f"normalize {canonical}",))

    return _guard(run)


def cmd_seifert_emit(invariants: str) -> CommandResult:
    def run() -> CommandResult:
        document = parse_invariant(invariants).to_flow_complex().serialize()
        return CommandResult(0, human_text=document, machine_lines=None)

    return _guard(run)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nmshom",
        description="Homology of non-singular Morse-Smale flows from combinatorial orbit data.",
    )
    parser.add_argument(
        "--porcelain",
        action="store_true",
        help="write stable line-oriented records to stdout",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    validate = commands.add_parser("validate", help="check a flow complex file")
    validate.add_argument("path", help="nmsflow file, or - for stdin")

    homology = commands.add_parser(
        "homology", help="homology of a flow complex file or of Seifert invariants"
    )
    homology.add_argument("path", nargs="?", help="nmsflow file, or - for stdin")
    homology.add_argument(
        "--seifert", metavar="INVARIANTS", help="compact invariants g;b1/a1,b2/a2,..."
    )

    snf = commands.add_parser("snf", help="Smith normal form of an integer matrix file")
    snf.add_argument("path", help="matrix file, or - for stdin")
    snf.add_argument("--witness", action="store_true", help="also print u, s, v")

    seifert = commands.add_parser("seifert", help="operations on Seifert invariants")
    subcommands = seifert.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

    equiv = subcommands.add_parser("equiv", help="decide equivalence of two invariant lists")
    equiv.add_argument("first")
    equiv.add_argument("second")

    normalize = subcommands.add_parser("normalize", help="canonical form of an invariant list")
    normalize.add_argument("invariants")

    emit = subcommands.add_parser("emit", help="write the invariants' flow complex as nmsflow text")
    emit.add_argument("invariants")

    return parser


def _dispatch(args: argparse.Namespace) -> CommandResult:
    if args.command == "validate":
        return cmd_validate(args.path)
    if args.command == "homology":
        return cmd_homology(path=args.path, seifert=args.seifert)
    if args.command == "snf":
        return cmd_snf(args.path, witness=args.witness)
    if args.subcommand == "equiv":
        return cmd_seifert_equiv(args.first, args.second)
    if args.subcommand == "normalize":
        return cmd_seifert_normalize(args.invariants)
    return cmd_seifert_emit(args.invariants)


def _render(result: CommandResult, porcelain: bool) -> None:
    if result.diagnostics:
        print(result.diagnostics, file=sys.stderr)
    if porcelain and result.machine_lines is not None:
        sys.stdout.write("porcelain 1\n")
        for line in result.machine_lines:
            sys.stdout.write(line + "\n")
        if result.human_text:
            print(result.human_text, file=sys.stderr)
    elif result.human_text:
        text = result.human_text
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "homology" and (args.path is None) == (args.seifert is None):
        parser.error("homology needs a file path or --seifert, not both")
    result = _dispatch(args)
    _render(result, porcelain=args.porcelain)
    return result.exit_code
