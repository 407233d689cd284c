from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

from pydantic import BaseModel, ValidationError

from atomic.config import Settings, get_settings
from atomic.domain.affine import (
    AffineWeight,
    affine_atomic_length,
    affine_from_word,
    affine_image_probe,
    affine_length,
    affine_weight_from_marks,
    finite_word,
    shi_vector,
)
from atomic.domain.atomiclen import atomic_length_w0, expected_w0_atomic_length, image_set
from atomic.domain.cores import core_size_counts, orbit_cores
from atomic.domain.enums import OutputFormat
from atomic.domain.exceptions import AtomicError, MissingArgumentError, UnsupportedTypeError
from atomic.domain.perms import (
    all_permutations,
    average_cosine,
    cosine,
    entropy,
    invsum,
    invsum_total,
    longest_permutation,
    ninvsum,
)
from atomic.domain.rootdata import RootSystem, build_root_system, height, weight
from atomic.domain.susanfe import (
    expected_restricted_constant,
    special_reflection,
    special_reflection_decomposition,
    susanfe_reflections,
)
from atomic.domain.weyl import reduced_word, reflection
from atomic.exceptions import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, map_domain_error
from atomic.schemas.reports import (
    AffineReport,
    CoreCountReport,
    EntropyStats,
    ImageReport,
    ShiEntry,
    ShiReport,
    SpecialReflectionReport,
    SusanfeEntry,
    W0Report,
    gaps,
)
from atomic.services.export import entropy_csv, image_csv
from atomic.services.verification import run_fixture_suite, utopic_census
from cli.formatting import render
from cli.run_config import RunConfig, parse_int_list

COMMANDS = ["image", "w0", "susanfe", "shi", "affine", "cores", "entropy", "verify"]


def configure_logger(settings: Settings | None = None) -> logging.Logger:
    settings = settings or get_settings()
    logger = logging.getLogger("atomic")
    if logger.handlers:
        return logger

    log_dir = Path(settings.log_dir)
    log_dir.mkdir(parents=True, exist_ok=True)
    logfile_path = log_dir / "atomic.log"

    handler = RotatingFileHandler(
        filename=logfile_path,
        encoding="utf-8",
        maxBytes=32 * 1024,
        backupCount=5,
    )
    dt_fmt = "%Y-%m-%d %H:%M:%S"
    formatter = logging.Formatter(
        "[{asctime}] [{levelname:<8}] {name}: {message}",
        dt_fmt,
        style="{",
    )
    handler.setFormatter(formatter)

    logger.setLevel(settings.log_level.upper())
    logger.addHandler(handler)
    logger.propagate = False
    return logger


logger = logging.getLogger("atomic.cli")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="atomic", description="Atomic length on finite and affine Weyl groups")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--type", dest="type_string")
    parser.add_argument("--weight", help="fundamental coordinates, or m_0..m_n for affine types")
    parser.add_argument("--word", help="comma separated letters, 0 is the affine node")
    parser.add_argument("--radius", type=int, help="orbit layers for the affine image")
    parser.add_argument("--n", type=int)
    parser.add_argument("--max", dest="max_size", type=int)
    parser.add_argument("--count-only", action="store_true")
    parser.add_argument("--list", dest="list_all", action="store_true")
    parser.add_argument("--stats", action="store_true")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    parser.add_argument("--json", action="store_true", help="shorthand for --format json")
    parser.add_argument("--threads", type=int)
    parser.add_argument("--stress", action="store_true", help="lift the orbit cap")
    return parser


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def build_run_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    return RunConfig(
        type_string=args.type_string,
        weight_coords=parse_int_list(args.weight),
        word=parse_int_list(args.word),
        radius=args.radius,
        max_size=args.max_size,
        n=args.n,
        thread_count=args.threads or settings.threads,
        output_format=OutputFormat.JSON if args.json else OutputFormat(args.format),
        stress=args.stress,
    )


def _require_system(config: RunConfig, *, affine: bool | None = None) -> RootSystem:
    if config.label is None:
        raise MissingArgumentError("this command needs --type")
    if affine is not None and config.label.affine != affine:
        kind = "an affine" if affine else "a finite"
        raise UnsupportedTypeError(f"this command needs {kind} type, got {config.label}")
    return build_root_system(config.label)


def _require(value, flag: str):
    if value is None:
        raise MissingArgumentError(f"this command needs {flag}")
    return value


def _affine_weight(config: RunConfig, system: RootSystem) -> AffineWeight:
    marks = config.weight_coords or [1] + [0] * system.rank
    return affine_weight_from_marks(system, marks)


def run_image(config: RunConfig, settings: Settings) -> BaseModel:
    system = _require_system(config)
    if system.label.affine:
        radius = _require(config.radius, "--radius")
        return affine_image_probe(system, _affine_weight(config, system), radius, settings=settings)
    lam = weight(system, config.weight_coords) if config.weight_coords else system.rho
    return image_set(system, lam, settings=settings, stress=config.stress, threads=config.thread_count)


def run_w0(config: RunConfig) -> BaseModel:
    system = _require_system(config, affine=False)
    lam = weight(system, config.weight_coords) if config.weight_coords else system.rho
    closed = expected_w0_atomic_length(system.label) if config.weight_coords is None else None
    return W0Report(
        type=str(system.label),
        weight=[int(m) for m in lam.fund_coords],
        value=atomic_length_w0(system, lam),
        closed_form=closed,
    )


def run_susanfe(config: RunConfig) -> BaseModel:
    system = _require_system(config, affine=False)
    special = special_reflection(system)
    parabolic_word, coset_word = special_reflection_decomposition(system)
    return SpecialReflectionReport(
        type=str(system.label),
        word=list(special.word),
        indices=list(special.indices),
        constant=special.constant,
        expected_constant=expected_restricted_constant(system.label),
        parabolic_word=list(parabolic_word),
        coset_word=list(coset_word),
    )


def run_susanfe_list(config: RunConfig) -> list[BaseModel]:
    system = _require_system(config, affine=False)
    return [
        SusanfeEntry(
            root=list(root.coords),
            word=list(reduced_word(reflection(system, root))),
            restricted_length=value,
        )
        for root, value in susanfe_reflections(system)
    ]


def run_shi(config: RunConfig) -> BaseModel:
    system = _require_system(config, affine=True)
    word = config.word or []
    w = affine_from_word(system, word)
    vector = shi_vector(w)
    entries = [
        ShiEntry(root=list(root.coords), height=int(height(root)), coefficient=k)
        for root, k in zip(system.positive_roots, vector.coefficients)
    ]
    return ShiReport(
        type=str(system.label),
        word=list(word),
        entries=entries,
        length=affine_length(w),
        admissible=vector.is_admissible(),
    )


def run_affine(config: RunConfig, settings: Settings) -> BaseModel:
    system = _require_system(config, affine=True)
    lam = _affine_weight(config, system)
    if config.word is None and config.radius is not None:
        return affine_image_probe(system, lam, config.radius, settings=settings)
    word = config.word or []
    w = affine_from_word(system, word)
    return AffineReport(
        type=str(system.label),
        word=list(word),
        translation=list(w.beta),
        finite_word=list(finite_word(w)),
        gamma=list(w.gamma),
        atomic_length=affine_atomic_length(w, lam),
    )


def run_cores(config: RunConfig, settings: Settings, count_only: bool) -> BaseModel:
    n = _require(config.n, "--n")
    max_size = _require(config.max_size, "--max")
    if count_only:
        sizes = core_size_counts(n, max_size, settings=settings)
        listed = None
    else:
        found = orbit_cores(n, max_size, settings=settings)
        sizes = {size: len(cores) for size, cores in found.items()}
        listed = {size: [list(p.parts) for p in cores] for size, cores in found.items()}
    return CoreCountReport(n=n, max_size=max_size, sizes=sizes, missing=gaps(list(sizes), max_size), cores=listed)


def run_entropy_stats(config: RunConfig) -> BaseModel:
    n = _require(config.n, "--n")
    w0 = longest_permutation(n)
    perms = list(all_permutations(n))
    holds = all(
        entropy(w) == 2 * invsum(w)
        and cosine(w) == cosine(w0) + ninvsum(w)
        and invsum(w) + ninvsum(w) == invsum_total(n)
        for w in perms
    )
    return EntropyStats(
        n=n,
        permutations=len(perms),
        invsum_total=invsum_total(n),
        average_cosine=str(average_cosine(n)),
        identities_hold=holds,
    )


def dispatch(args: argparse.Namespace, config: RunConfig, settings: Settings) -> tuple[str, int]:
    fmt = config.output_format
    match args.command:
        case "image":
            report = run_image(config, settings)
            if fmt is OutputFormat.CSV:
                return image_csv(report), EXIT_OK
            return render(report, fmt), EXIT_OK
        case "w0":
            report = run_w0(config)
            if fmt is OutputFormat.TEXT:
                return str(report.value), EXIT_OK
            return render(report, fmt), EXIT_OK
        case "susanfe":
            if args.list_all:
                return render(run_susanfe_list(config), fmt), EXIT_OK
            return render(run_susanfe(config), fmt), EXIT_OK
        case "shi":
            return render(run_shi(config), fmt), EXIT_OK
        case "affine":
            report = run_affine(config, settings)
            if fmt is OutputFormat.CSV and isinstance(report, ImageReport):
                return image_csv(report), EXIT_OK
            return render(report, fmt), EXIT_OK
        case "cores":
            return render(run_cores(config, settings, args.count_only), fmt), EXIT_OK
        case "entropy":
            if args.stats:
                return render(run_entropy_stats(config), fmt), EXIT_OK
            return entropy_csv(_require(config.n, "--n")), EXIT_OK
        case "verify":
            results = run_fixture_suite(settings)
            failed = [r for r in results if not r.passed]
            if fmt is OutputFormat.TEXT:
                lines = [f"{'ok  ' if r.passed else 'FAIL'} {r.name}" for r in results]
                lines.append(f"{len(results) - len(failed)}/{len(results)} fixtures passed")
                for row in utopic_census(settings=settings):
                    lines.append(f"census {row.type} utopic={row.count} fibonacci-1={row.fibonacci_minus_one}")
                text = "\n".join(lines)
            else:
                text = render(results, fmt)
            return text, EXIT_FAILURE if failed else EXIT_OK
    raise UnsupportedTypeError(f"unknown command {args.command}")


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    settings = get_settings()
    configure_logger(settings)
    try:
        config = build_run_config(args, settings)
        settings = dataclasses.replace(settings, threads=config.thread_count)
        logger.info("command started command=%s type=%s weight=%s", args.command, config.type_string, config.weight_coords)
        output, code = dispatch(args, config, settings)
    except ValidationError as exc:
        logger.error("invalid arguments command=%s errors=%s", args.command, exc.error_count())
        print(f"error: invalid arguments: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: invalid number list: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AtomicError as exc:
        code, message = map_domain_error(exc)
        logger.error("command failed command=%s code=%s message=%s", args.command, code, message)
        print(f"error: {message}", file=sys.stderr)
        return code
    print(output.rstrip("\n"))
    logger.info("command finished command=%s code=%s", args.command, code)
    return code


if __name__ == "__main__":
    sys.exit(main())
