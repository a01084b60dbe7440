"""Command-line front end: braid-word jobs in, tables or JSON reports out.

Every report is self-describing: it embeds the engine version, the exact
convention flags in effect, and the seed, so two runs with the same
configuration are byte-identical.  Exit codes: 0 success, 1 validation
error (including braid parse errors), 2 acceptance mismatch (a computed
count disagrees with its oracle, or a law check lands off its expected
status), 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import ENGINE_VERSION
from .axiom_suite import run_all
from .oq_sl2 import OQ_NAMES
from .quotient_engine import (
    ResourceLimitError,
    classical_points,
    coinvariants,
    link_quotient,
    mapping_torus_quotient,
)
from .tensor_power import BraidParseError, BraidWord, PowerContext, TensorElement

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_MISMATCH = 2
EXIT_RESOURCE = 3

COMMANDS = ("quotient", "mapping-torus", "coinvariants", "classical-points", "axioms")
VARIANTS = ("mu-top", "mvdv")


class JobConfigError(ValueError):
    """Invalid job configuration."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class JobConfig:
    command: str
    braid: str = ""
    strands: int = 1
    degree: int = 1
    slack: int = 0
    variant: str = "mu-top"
    mirror: bool = False
    primes: tuple[int, ...] = ()
    seed: int = 42
    trials: int = 50
    braided: bool = False
    output_format: str = "table"
    output_path: str | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise JobConfigError(f"unknown command {self.command!r}")
        if self.strands < 1:
            raise JobConfigError(f"strands must be >= 1, got {self.strands}")
        if self.degree < 0:
            raise JobConfigError(f"degree must be >= 0, got {self.degree}")
        if self.slack < 0:
            raise JobConfigError(f"slack must be >= 0, got {self.slack}")
        if self.variant not in VARIANTS:
            raise JobConfigError(
                f"variant must be one of {', '.join(VARIANTS)}, got {self.variant!r}"
            )
        for p in self.primes:
            if not _is_prime(p):
                raise JobConfigError(f"{p} is not prime")
        if self.output_format not in ("table", "json"):
            raise JobConfigError(f"unknown output format {self.output_format!r}")


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse ``s<i>`` / ``s<i>^-1`` tokens; errors carry the token position."""
    return BraidWord.parse(text, strands)


# -- reports -------------------------------------------------------------------


def _word_text(w) -> str:
    return ".".join(OQ_NAMES[g] for g in w) if w else "1"


def _render_tensor(x: TensorElement) -> str:
    items = sorted(
        x.items(), key=lambda kv: (sum(len(w) for w in kv[0]), kv[0])
    )
    parts = []
    for legs, c in items:
        s = c.render()
        if " + " in s:
            s = f"({s})"
        parts.append(f"{s} * {' (x) '.join(_word_text(w) for w in legs)}")
    return " + ".join(parts) if parts else "0"


def _base_report(cfg: JobConfig, ctx: PowerContext | None) -> dict:
    flags = dict(ctx.flags()) if ctx is not None else {"mirror": cfg.mirror}
    return {
        "command": cfg.command,
        "braid": cfg.braid,
        "strands": cfg.strands,
        "variant": cfg.variant,
        "mirror": cfg.mirror,
        "degree": cfg.degree,
        "slack": cfg.slack,
        "seed": cfg.seed,
        "engine_version": ENGINE_VERSION,
        "flags": flags,
        "working_degree": None,
        "graded_dims": None,
        "stabilized": None,
        "coinvariant_dims": None,
        "coinvariant_basis": None,
        "classical_points": None,
        "checks": None,
    }


def run_job(cfg: JobConfig) -> tuple[dict, int]:
    """Execute one job; returns (report dict, exit code)."""
    cfg.validate()

    if cfg.command == "axioms":
        suite = run_all(degree=cfg.degree, trials=cfg.trials, seed=cfg.seed)
        report = _base_report(cfg, PowerContext(mirror=cfg.mirror))
        report["trials"] = cfg.trials
        report["checks"] = [r.to_dict() for r in suite.results]
        return report, EXIT_OK if suite.all_expected else EXIT_MISMATCH

    ctx = PowerContext(mirror=cfg.mirror)
    beta = parse_braid(cfg.braid, cfg.strands)
    report = _base_report(cfg, ctx)

    if cfg.command == "quotient":
        fq = link_quotient(ctx, beta, cfg.degree, cfg.slack, cfg.variant)
        report["working_degree"] = fq.working_degree
        report["graded_dims"] = list(fq.graded_dims)
        report["stabilized"] = list(fq.stabilized)
        return report, EXIT_OK

    if cfg.command == "mapping-torus":
        fq = mapping_torus_quotient(ctx, beta, cfg.degree, cfg.slack)
        report["working_degree"] = fq.working_degree
        report["graded_dims"] = list(fq.graded_dims)
        report["stabilized"] = list(fq.stabilized)
        return report, EXIT_OK

    if cfg.command == "coinvariants":
        if cfg.braid.strip():
            space = link_quotient(ctx, beta, cfg.degree, cfg.slack, cfg.variant)
            report["working_degree"] = space.working_degree
            report["graded_dims"] = list(space.graded_dims)
            report["stabilized"] = list(space.stabilized)
        else:
            space = cfg.strands
        dims = []
        basis: list[str] = []
        for d in range(cfg.degree + 1):
            sols = coinvariants(ctx, space, d, braided=cfg.braided)
            dims.append(len(sols))
            if d == cfg.degree:
                basis = [_render_tensor(x) for x in sols]
        report["coinvariant_dims"] = dims
        report["coinvariant_basis"] = basis
        return report, EXIT_OK

    # classical-points
    primes = cfg.primes or (3,)
    points = []
    all_match = True
    for p in primes:
        pc = classical_points(ctx, beta, p)
        points.append(
            {
                "prime": pc.prime,
                "count": pc.count,
                "oracle_count": pc.oracle_count,
                "match": pc.match,
            }
        )
        all_match = all_match and pc.match
    report["classical_points"] = points
    return report, EXIT_OK if all_match else EXIT_MISMATCH


# -- rendering -----------------------------------------------------------------


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_table(report: dict) -> str:
    lines = [f"qskein {report['command']} report (engine {report['engine_version']})"]
    braid = report["braid"] if report["braid"].strip() else "(identity)"
    lines.append(f"braid: {braid}  strands: {report['strands']}")
    lines.append(
        f"variant: {report['variant']}  mirror: {str(report['mirror']).lower()}"
        f"  seed: {report['seed']}"
    )
    flags = "  ".join(
        f"{k}={str(v).lower()}" for k, v in sorted(report["flags"].items())
    )
    lines.append(f"flags: {flags}")
    if report["working_degree"] is not None:
        lines.append(
            f"degree: {report['degree']}  working degree: {report['working_degree']}"
        )
    if report["graded_dims"] is not None:
        lines.append(f"graded dims: {report['graded_dims']}")
        lines.append(
            "stabilized: ["
            + ", ".join(str(b).lower() for b in report["stabilized"])
            + "]"
        )
    if report["coinvariant_dims"] is not None:
        lines.append(f"coinvariant dims by degree: {report['coinvariant_dims']}")
        for text in report["coinvariant_basis"]:
            lines.append(f"  {text}")
    if report["classical_points"] is not None:
        lines.append("prime  count  oracle  match")
        for row in report["classical_points"]:
            lines.append(
                f"{row['prime']:>5}  {row['count']:>5}  {row['oracle_count']:>6}"
                f"  {'yes' if row['match'] else 'NO'}"
            )
    if report["checks"] is not None:
        width = max(len(c["name"]) for c in report["checks"])
        lines.append(f"{'check':<{width}}  {'inputs':>6}  status")
        for c in report["checks"]:
            status = c["status"]
            if c["expected_failure"] and status == "fail":
                status += " (expected)"
            lines.append(f"{c['name']:<{width}}  {c['inputs_tried']:>6}  {status}")
            if c["witness"]:
                lines.append(f"{'':<{width}}          {c['witness']}")
    return "\n".join(lines) + "\n"


# -- argument parsing ----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; the exit-code contract
    # reserves 2 for acceptance mismatches, so route errors to code 1
    def error(self, message):
        raise JobConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qskein", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, braid=True):
        if braid:
            p.add_argument("--braid", default="", help="braid word, e.g. 's1 s1 s1'")
            p.add_argument("--strands", type=int, default=1)
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--mirror", action="store_true")
        p.add_argument("--format", dest="output_format", choices=("table", "json"), default="table")
        p.add_argument("--output", dest="output_path", default=None)

    p = sub.add_parser("quotient", help="link-exterior quotient presentation")
    common(p)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--slack", type=int, default=0)
    p.add_argument("--variant", choices=VARIANTS, default="mu-top")

    p = sub.add_parser("mapping-torus", help="mapping-torus quotient presentation")
    common(p)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--slack", type=int, default=0)
    p.add_argument("--variant", choices=VARIANTS, default="mu-top")

    p = sub.add_parser("coinvariants", help="coaction-invariant vectors")
    common(p)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--slack", type=int, default=0)
    p.add_argument("--variant", choices=VARIANTS, default="mu-top")
    p.add_argument("--braided", action="store_true", help="solve with the braided coaction")

    p = sub.add_parser("classical-points", help="point counts over prime fields")
    common(p)
    p.add_argument(
        "--prime", type=int, action="append", dest="primes", default=None,
        help="prime field size (repeatable)",
    )

    p = sub.add_parser("axioms", help="run the law-verification suite")
    common(p, braid=False)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--trials", type=int, default=50)

    return parser


def config_from_args(ns: argparse.Namespace) -> JobConfig:
    return JobConfig(
        command=ns.command,
        braid=getattr(ns, "braid", ""),
        strands=getattr(ns, "strands", 1),
        degree=getattr(ns, "degree", 1),
        slack=getattr(ns, "slack", 0),
        variant=getattr(ns, "variant", "mu-top"),
        mirror=ns.mirror,
        primes=tuple(getattr(ns, "primes", None) or ()),
        seed=ns.seed,
        trials=getattr(ns, "trials", 50),
        braided=getattr(ns, "braided", False),
        output_format=ns.output_format,
        output_path=ns.output_path,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = config_from_args(ns)
        report, code = run_job(cfg)
    except (JobConfigError, BraidParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    text = render_json(report) if cfg.output_format == "json" else render_table(report)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
