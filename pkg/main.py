"""
Command-line entry point for the covering design toolkit.

Verwendung:
    python main.py generate --group-size 6 --groups 10 --out Output/design60.txt
    python main.py verify Input/design60.txt --subset-size 6 --mode all
    python main.py witness Input/design60.txt --set 1,7,13,25,37,49
    python main.py stats Input/design60.txt --irredundancy

Exit codes: 0 = HOLDS / success, 1 = FAILS, 2 = usage or input error,
3 = undecided (solver budget exhausted).
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Src-Verzeichnis in Pfad aufnehmen
sys.path.insert(0, str(Path(__file__).resolve().parent / "src"))

from pydantic import ValidationError

from design_file import DesignFileParser, DesignFileWriter
from errors import CoveringError, ParameterError
from family_builder import FamilyBuilder
from graph_verifier import GraphVerifier
from independence_solver import IndependenceSolver
from models import ConstructionParams, Outcome
from pair_graph import CoverageAnalyzer
from report_formatter import ReportFormatter
from settings import load_settings
from structural_verifier import StructuralVerifier
from verification_pipeline import MODES, check_agreement, run_verification

logger = logging.getLogger("main")

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3


def cmd_generate(args, settings) -> int:
    params = ConstructionParams(group_size=args.group_size, group_count=args.groups)
    family = FamilyBuilder().build_family(params)
    formatter = ReportFormatter(as_json=args.json)
    summary = formatter.generation(params.n, len(family.blocks), params.guarantee_threshold, args.out)
    if args.out:
        DesignFileWriter().write_design_file(family, args.out)
        print(summary)
    else:
        sys.stdout.write(DesignFileWriter().write_design(family))
        print(summary, file=sys.stderr)
    return EXIT_HOLDS


def cmd_verify(args, settings) -> int:
    family = DesignFileParser().read_design_file(args.design)
    reports = run_verification(
        family,
        args.subset_size,
        args.mode,
        settings,
        jobs=args.jobs,
        strategy=args.strategy,
        budget=args.budget,
    )
    formatter = ReportFormatter(as_json=args.json)
    separator = "\n" if args.json else "\n\n"
    print(separator.join(formatter.verification(report) for report in reports))

    disagreement = check_agreement(reports)
    if disagreement:
        logger.error(disagreement)
        return EXIT_FAILS
    outcomes = {report.outcome for report in reports}
    if Outcome.FAILS in outcomes:
        return EXIT_FAILS
    if Outcome.UNDECIDED in outcomes:
        return EXIT_UNDECIDED
    return EXIT_HOLDS


def cmd_witness(args, settings) -> int:
    family = DesignFileParser().read_design_file(args.design)
    try:
        subset = [int(token) for token in args.set.split(",") if token.strip()]
    except ValueError:
        raise ParameterError(f"--set must be a comma-separated list of integers, got {args.set!r}")
    result = StructuralVerifier().witness_block(family, subset)
    print(ReportFormatter(as_json=args.json).witness(result))
    return EXIT_HOLDS


def cmd_stats(args, settings) -> int:
    family = DesignFileParser().read_design_file(args.design)
    analyzer = CoverageAnalyzer()
    solver = IndependenceSolver(budget=args.budget if args.budget is not None else settings.solver_budget)
    graph = analyzer.covered_pair_graph(family)
    independence = solver.solve(graph)
    cover_size = len(solver.greedy_clique_cover(graph))

    irredundancy = None
    if args.irredundancy:
        s = args.subset_size
        if s is None:
            if not independence.decided:
                raise ParameterError("alpha is undecided; pass --subset-size for the irredundancy check")
            s = independence.alpha + 1
        s = min(s, family.n)
        irredundancy = GraphVerifier(budget=solver.budget).irredundancy_check(family, s)

    print(ReportFormatter(as_json=args.json).stats(
        analyzer.coverage_stats(family), independence, cover_size, irredundancy
    ))
    return EXIT_HOLDS if independence.decided else EXIT_UNDECIDED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Generate and verify pair-intersection covering families",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    parser.add_argument("--json", action="store_true", help="Emit flat JSON objects (one per line)")
    parser.add_argument("--config", default=None, help="Alternate settings YAML")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", help="Write the paired construction for (g, t)")
    generate.add_argument("--group-size", type=int, required=True, help="Base block size g (even)")
    generate.add_argument("--groups", type=int, required=True, help="Number of base blocks t (even)")
    generate.add_argument("--out", default=None, help="Output path; standard output if omitted")
    generate.set_defaults(handler=cmd_generate)

    verify = commands.add_parser("verify", help="Check that every s-subset meets a block twice")
    verify.add_argument("design", help="Design file")
    verify.add_argument("--subset-size", type=int, required=True, help="Subset size s")
    verify.add_argument("--mode", choices=MODES, default="all")
    verify.add_argument("--jobs", type=int, default=None, help="Worker processes for the exhaustive sweep")
    verify.add_argument("--strategy", choices=("prune", "scan"), default=None)
    verify.add_argument("--budget", type=int, default=None, help="Solver node budget")
    verify.set_defaults(handler=cmd_verify)

    witness = commands.add_parser("witness", help="Name the block the proof assigns to a subset")
    witness.add_argument("design", help="Design file with structure annotations")
    witness.add_argument("--set", required=True, help="Comma-separated elements, e.g. 1,7,13,25,37,49")
    witness.set_defaults(handler=cmd_witness)

    stats = commands.add_parser("stats", help="Coverage statistics and independence number")
    stats.add_argument("design", help="Design file")
    stats.add_argument("--irredundancy", action="store_true", help="Also test every block for necessity")
    stats.add_argument("--subset-size", type=int, default=None, help="Threshold for --irredundancy (default alpha + 1)")
    stats.add_argument("--budget", type=int, default=None, help="Solver node budget")
    stats.set_defaults(handler=cmd_stats)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_HOLDS

    try:
        settings = load_settings(args.config)
    except (ValidationError, ValueError, OSError) as e:
        print(f"ERROR: invalid settings: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.INFO if args.verbose else settings.log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        return args.handler(args, settings)
    except (CoveringError, ValidationError, OSError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
