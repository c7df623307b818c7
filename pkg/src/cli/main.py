"""
Command-line surface: compute, enumerate, locate and verify.

Results go to standard output, progress and diagnostics to standard error.
JSON output is wrapped in {"version": 1, "command": ..., "result": ...}.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple

from src.algebra.operators import grothendieck, key_from_operators, lascoux_w_lambda, schur
from src.algebra.polynomial import BetaPolynomial
from src.cells.constraints import cell_constraints
from src.cells.lascoux import lascoux_via_cells, patterns_for_perm
from src.cells.location import closure_patterns, point_to_pattern
from src.cells.tracks import enumerate_tracks, track_to_pattern
from src.config.settings import Settings
from src.enhanced.enumeration import enhancements_of, enumerate_all, enumerate_efficient, grothendieck_via_patterns
from src.enhanced.patterns import is_efficient
from src.enhanced.patterns import render_ascii as render_pattern
from src.gz.patterns import GZPattern, character_of_points, enumerate_gz_patterns, parse_partition, parse_point
from src.kogan.faces import enumerate_reduced_faces, face_permutation, face_word
from src.kogan.faces import render_ascii as render_face
from src.kogan.keys import key_polynomial
from src.perm.permutation import Permutation, parse_permutation
from src.utils.error_handler import LascouxError, UsageError, describe_error
from src.utils.logger import setup_logging
from src.verification.report import VerifyReport
from src.verification.suites import SUITE_NAMES, SuiteOptions, run_suites

logger = logging.getLogger(__name__)

ENVELOPE_VERSION = 1
KINDS = ("lascoux", "key", "grothendieck", "schur")
METHODS = ("operator", "cells")
TARGETS = ("patterns", "faces", "cells", "tracks")
FORMATS = ("text", "json")


@dataclass
class Request:
    command: str
    kind: str = "lascoux"
    target: str = "patterns"
    n: Optional[int] = None
    lam: Optional[Tuple[int, ...]] = None
    perm: Optional[Permutation] = None
    method: str = "operator"
    beta_spec: Optional[int] = None
    output_format: str = "text"
    suites: List[str] = field(default_factory=lambda: ["all"])
    max_n: int = 3
    max_part: int = 3
    denominator: int = 2
    seed: int = 20240601
    random_polynomials: int = 100
    workers: int = 1
    efficient_only: bool = False
    closure: bool = False
    point: Optional[str] = None
    base: Optional[str] = None
    output: Optional[Path] = None
    show_progress: bool = True

    @property
    def degree(self) -> Optional[int]:
        if self.lam is not None:
            return len(self.lam)
        return self.n


@dataclass
class Outcome:
    """What a command hands back to main: JSON result, text lines, exit code."""

    result: Any
    lines: List[str]
    exit_code: int = 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lascoux_gz",
        description="Lascoux, key, Grothendieck and Schur polynomials from operators and from "
                    "enhanced Gelfand-Zetlin patterns.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=FORMATS, help="Output format")
    common.add_argument("--output", help="Also write the JSON envelope to this file")
    common.add_argument("--log-file", help="Log file (default ~/.lascoux_gz/lascoux_gz.log)")
    common.add_argument("--log-level", help="Logging level name")
    common.add_argument("--n", type=int, help="Number of variables")
    common.add_argument("--lambda", dest="lam", help="Partition, e.g. 3,2,0")
    common.add_argument("--perm", help='Permutation in one-line form ("312") or as a word ("s1 s2")')

    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", parents=[common], help="Compute one polynomial")
    compute.add_argument("--kind", choices=KINDS, default="lascoux")
    compute.add_argument("--method", choices=METHODS, default="operator")
    compute.add_argument("--beta-spec", type=int, help="Substitute this integer for beta")

    enumerate_ = sub.add_parser("enumerate", parents=[common], help="List patterns, faces, cells or tracks")
    enumerate_.add_argument("target", choices=TARGETS)
    enumerate_.add_argument("--efficient-only", action="store_true")
    enumerate_.add_argument("--base", help='Free rows of one integer pattern, e.g. "1,2;1"')

    locate = sub.add_parser("locate", parents=[common], help="Find the cell holding a rational point")
    locate.add_argument("--point", required=True, help='Free rows, e.g. "5/2,31/10,9;5/2,19/5;37/10"')
    locate.add_argument("--closure", action="store_true", help="Also list every cell whose closure holds the point")

    verify = sub.add_parser("verify", parents=[common], help="Run verification suites")
    verify.add_argument("--suite", action="append", choices=SUITE_NAMES,
                        help="Suite to run; repeatable (default all)")
    verify.add_argument("--max-n", type=int)
    verify.add_argument("--max-part", type=int)
    verify.add_argument("--denominator", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--random-polynomials", type=int)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--no-progress", action="store_true", help="Hide the progress bar")
    return parser


def build_request(args: argparse.Namespace, settings: Settings) -> Request:
    """Merge parsed flags over settings over defaults and parse the structured values."""
    lam = parse_partition(args.lam) if args.lam else None
    n = args.n
    degree = len(lam) if lam is not None else n
    perm = parse_permutation(args.perm, degree) if args.perm else None

    request = Request(
        command=args.command,
        n=n,
        lam=lam,
        perm=perm,
        output_format=settings.resolve("output_format", args.output_format),
        output=Path(args.output) if args.output else None,
    )
    if args.command == "compute":
        request.kind = args.kind
        request.method = args.method
        request.beta_spec = args.beta_spec
    elif args.command == "enumerate":
        request.target = args.target
        request.efficient_only = args.efficient_only
        request.base = args.base
    elif args.command == "locate":
        request.point = args.point
        request.closure = args.closure
    elif args.command == "verify":
        request.suites = args.suite or ["all"]
        request.max_n = int(settings.resolve("max_n", args.max_n))
        request.max_part = int(settings.resolve("max_part", args.max_part))
        request.denominator = int(settings.resolve("denominator", args.denominator))
        request.seed = int(settings.resolve("seed", args.seed))
        request.random_polynomials = int(settings.resolve("random_polynomials", args.random_polynomials))
        request.workers = int(settings.resolve("workers", args.workers))
        request.show_progress = not args.no_progress
    return request


def validate_request(request: Request) -> Tuple[bool, str]:
    """Check cross-field consistency that argparse cannot see."""
    if request.n is not None and request.n < 1:
        return False, f"--n must be positive, got {request.n}"
    if request.lam is not None and request.n is not None and len(request.lam) != request.n:
        return False, f"--lambda has {len(request.lam)} parts but --n is {request.n}"
    if request.perm is not None and request.degree is not None and request.perm.n != request.degree:
        return False, f"--perm has degree {request.perm.n}, expected {request.degree}"

    if request.command == "compute":
        if request.lam is None:
            return False, "compute needs --lambda"
        if request.kind in ("lascoux", "key") and request.perm is None:
            return False, f"--kind {request.kind} needs --perm"
    elif request.command == "enumerate":
        if request.target == "faces":
            if request.degree is None:
                return False, "enumerate faces needs --n or --lambda"
        elif request.lam is None:
            return False, f"enumerate {request.target} needs --lambda"
        if request.base is not None and request.target != "patterns":
            return False, "--base only applies to enumerate patterns"
    elif request.command == "locate":
        if request.lam is None:
            return False, "locate needs --lambda"
    elif request.command == "verify":
        if request.max_n < 2:
            return False, f"--max-n must be at least 2, got {request.max_n}"
        if request.max_part < 0:
            return False, f"--max-part must be nonnegative, got {request.max_part}"
        if request.denominator < 1:
            return False, f"--denominator must be positive, got {request.denominator}"
        if request.workers < 1:
            return False, f"--workers must be positive, got {request.workers}"
    return True, "Request is valid"


# ---------------------------------------------------------------------------
# commands


def _specialize(p: BetaPolynomial, request: Request) -> BetaPolynomial:
    return p if request.beta_spec is None else p.specialize_beta(request.beta_spec)


def cmd_compute(request: Request) -> Outcome:
    lam, w, cells = request.lam, request.perm, request.method == "cells"
    result: Dict[str, Any] = {"kind": request.kind, "method": request.method, "lambda": list(lam)}
    if w is not None:
        result["perm"] = w.render()
    exit_code = 0

    if request.kind == "lascoux":
        value = lascoux_via_cells(w, lam) if cells else lascoux_w_lambda(w, lam)
    elif request.kind == "key":
        if cells:
            value = key_polynomial(w, lam)
            agrees = value == lascoux_via_cells(w, lam).specialize_beta(0)
            result["cross_check"] = agrees
            if not agrees:
                logger.error(f"Key polynomial of {w}, {lam} differs from the cell sum at beta=0")
                exit_code = 1
        else:
            value = key_from_operators(w, lam)
    elif request.kind == "grothendieck":
        value = grothendieck_via_patterns(lam) if cells else grothendieck(lam)
    else:
        value = character_of_points(lam, enumerate_gz_patterns(lam)) if cells else schur(lam)

    value = _specialize(value, request)
    result["polynomial"] = value.to_json_dict()
    result["terms"] = value.term_count()
    logger.info(f"Computed {request.kind} for {lam} by {request.method}: {value.term_count()} terms")
    return Outcome(result, [value.render()], exit_code)


def _parse_base(request: Request) -> GZPattern:
    point = parse_point(request.base)
    if not point.is_integral():
        raise UsageError(f"--base must have integer entries: {request.base!r}")
    base = GZPattern.from_free_rows(request.lam, [[int(y) for y in row] for row in point.free_rows()])
    if not base.is_valid():
        raise UsageError(f"--base {request.base!r} is not a GZ pattern for {request.lam}")
    return base


def _selected_patterns(request: Request):
    if request.base is not None:
        patterns = enhancements_of(_parse_base(request))
        if request.efficient_only:
            patterns = [p for p in patterns if is_efficient(p)]
        return patterns
    if request.perm is not None:
        return patterns_for_perm(request.perm, request.lam)
    return enumerate_efficient(request.lam) if request.efficient_only else enumerate_all(request.lam)


def cmd_enumerate(request: Request) -> Outcome:
    records: List[dict] = []
    lines: List[str] = []

    if request.target == "faces":
        for face in enumerate_reduced_faces(request.degree, request.perm):
            w = face_permutation(face)
            record = face.to_json_dict()
            record.update(word=list(face_word(face)), perm=w.render())
            records.append(record)
            lines.extend([render_face(face), f"w = {w.render()}", ""])
    elif request.target == "tracks":
        for track in enumerate_tracks(request.lam):
            pattern = track_to_pattern(track)
            record = track.to_json_dict()
            record["pattern"] = pattern.to_json_dict()
            records.append(record)
            lines.append(track.render())
    else:
        for pattern in _selected_patterns(request):
            if request.target == "cells":
                system = cell_constraints(pattern, request.lam)
                records.append({"pattern": pattern.to_json_dict(), "cell": system.to_json_dict()})
                lines.extend([render_pattern(pattern), system.render(), ""])
            else:
                records.append(pattern.to_json_dict())
                lines.extend([render_pattern(pattern), ""])

    lines.append(f"count: {len(records)}")
    logger.info(f"Enumerated {len(records)} {request.target}")
    return Outcome({"target": request.target, "records": records, "count": len(records)}, lines)


def cmd_locate(request: Request) -> Outcome:
    point = parse_point(request.point)
    pattern = point_to_pattern(request.lam, point)
    system = cell_constraints(pattern, request.lam)
    result = {
        "lambda": list(request.lam),
        "point": point.to_json_dict(),
        "pattern": pattern.to_json_dict(),
        "cell": system.to_json_dict(),
    }
    lines = [render_pattern(pattern), system.render()]
    if request.closure:
        closure = closure_patterns(request.lam, point)
        result["closure"] = [p.to_json_dict() for p in closure]
        lines.append(f"closure: {len(closure)} cells")
    return Outcome(result, lines)


def cmd_verify(request: Request) -> Outcome:
    options = SuiteOptions(
        max_n=request.max_n,
        max_part=request.max_part,
        denominator=request.denominator,
        seed=request.seed,
        random_polynomials=request.random_polynomials,
        workers=request.workers,
        show_progress=request.show_progress,
    )
    report: VerifyReport = run_suites(request.suites, options)
    logger.info(f"Verification wall time {report.wall_time:.2f}s")
    return Outcome(report.to_json_dict(), [report.render()], 0 if report.ok else 1)


COMMANDS = {
    "compute": cmd_compute,
    "enumerate": cmd_enumerate,
    "locate": cmd_locate,
    "verify": cmd_verify,
}


def envelope(command: str, result: Any) -> dict:
    return {"version": ENVELOPE_VERSION, "command": command, "result": result}


def _emit(request: Request, outcome: Outcome, stdout: TextIO) -> None:
    document = json.dumps(envelope(request.command, outcome.result), sort_keys=True)
    if request.output_format == "json":
        stdout.write(document + "\n")
    else:
        stdout.write("\n".join(outcome.lines) + "\n")
    if request.output is not None:
        request.output.parent.mkdir(parents=True, exist_ok=True)
        request.output.write_text(document + "\n")
        logger.info(f"Wrote {request.output}")


def main(argv: Optional[Sequence[str]] = None, settings: Optional[Settings] = None,
         stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Parse argv, run one command and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    settings = settings or Settings()
    setup_logging(args.log_file or settings.default_log_file, settings.resolve("log_level", args.log_level))
    logger.info(f"Command {args.command}: {vars(args)}")

    try:
        request = build_request(args, settings)
        ok, message = validate_request(request)
        if not ok:
            raise UsageError(message)
        outcome = COMMANDS[request.command](request)
        _emit(request, outcome, stdout)
        return outcome.exit_code
    except LascouxError as e:
        code, text = describe_error(e)
        logger.warning(f"{args.command} failed with exit {code}: {text}")
        stderr.write(f"error: {text}\n")
        return code
    except Exception as e:
        code, text = describe_error(e)
        stderr.write(f"internal error: {text}\n")
        return code
