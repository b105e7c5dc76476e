"""
Command-line front end.

    python -m astopo generate ba --n 100 --m 2 --m0 3 --seed 7 --out ba.edges
    python -m astopo analyze --in ba.edges --metrics all --out ba.json
    python -m astopo compare --target as84.edges --models ba,glp,pfp --runs 10 --out cmp/

Exit codes: 0 success, 2 usage/config/parse error, 3 runtime failure.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .core.errors import TopologyError
from .core.models import METRIC_NAMES, MetricOptions
from .datasets import read_edge_list, write_edge_list
from .generators import MODEL_NAMES, fresh_seed, generate, model_config
from .harness import REPORT_FORMATS, analyze, emit_metric_report, emit_report, run_comparison

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RUNTIME = 3

# CLI flag (argparse dest) -> config field, per model
MODEL_FLAGS: Dict[str, Dict[str, str]] = {
    "waxman": {
        "waxman_alpha": "alpha",
        "waxman_beta": "beta",
        "waxman_plane_size": "plane_size",
        "waxman_degree": "target_degree",
    },
    "ba": {"m": "m", "m0": "m0"},
    "glp": {"m": "m", "m0": "m0", "glp_p_add": "p_add", "glp_beta": "beta_pref"},
    "inet": {
        "inet_frac_degree_one": "frac_degree_one",
        "inet_exponent": "exponent",
        "inet_core_size": "core_size",
        "inet_max_degree": "max_degree",
    },
    "pfp": {"m0": "m0", "pfp_p": "p_new", "pfp_q": "q_new", "pfp_delta": "delta"},
}


class UsageError(TopologyError):
    """Bad command-line input that argparse cannot catch on its own."""


def _add_model_flags(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("model parameters")
    group.add_argument("--m", type=int, help="links per new node (ba, glp)")
    group.add_argument("--m0", type=int, help="seed size (ba, glp, pfp)")
    group.add_argument("--waxman-alpha", type=float)
    group.add_argument("--waxman-beta", type=float)
    group.add_argument("--waxman-plane-size", type=float)
    group.add_argument("--waxman-degree", type=float, help="target average degree")
    group.add_argument("--glp-p-add", type=float, help="probability a step adds a node")
    group.add_argument("--glp-beta", type=float, help="preference shift, < 1")
    group.add_argument("--inet-frac-degree-one", type=float)
    group.add_argument("--inet-exponent", type=float)
    group.add_argument("--inet-core-size", type=int)
    group.add_argument("--inet-max-degree", type=int)
    group.add_argument("--pfp-p", type=float, help="probability of the one-host step")
    group.add_argument("--pfp-q", type=float, help="probability of the two-host step")
    group.add_argument("--pfp-delta", type=float)


def _add_metric_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--metrics", default="all",
                        help=f"comma-separated subset of {','.join(METRIC_NAMES)}, or 'all'")
    parser.add_argument("--clustering-mode", choices=("restricted", "literal"), default="restricted")
    parser.add_argument("--spectrum-mode", choices=("auto", "full", "extremes"), default="auto")
    parser.add_argument("--spectrum-k", type=int, default=50)
    parser.add_argument("--clique-budget", type=float, default=60.0, help="seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="astopo",
        description="Generate, measure and compare AS-level Internet topologies.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", action="count", default=0,
                        help="more logging (once for info, twice for debug)")
    parser.add_argument("--quiet", action="store_true", help="errors only")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("generate", help="write a synthetic topology as an edge list")
    gen.add_argument("model", choices=MODEL_NAMES)
    gen.add_argument("--n", type=int, help="node count")
    gen.add_argument("--seed", type=int, help="random seed (printed when omitted)")
    gen.add_argument("--out", type=Path, required=True, help="edge-list file to write")
    _add_model_flags(gen)

    ana = commands.add_parser("analyze", help="compute the metric suite on an edge list")
    ana.add_argument("--in", dest="input", type=Path, required=True, help="edge-list file")
    ana.add_argument("--out", type=Path, required=True,
                     help="report file (json, csv) or directory (plotdata)")
    ana.add_argument("--format", choices=REPORT_FORMATS, default="json")
    _add_metric_flags(ana)

    cmp_ = commands.add_parser("compare", help="compare a target against synthetic models")
    cmp_.add_argument("--target", type=Path, required=True, help="edge-list file")
    cmp_.add_argument("--models", default=",".join(MODEL_NAMES),
                      help="comma-separated model names, or 'all'")
    cmp_.add_argument("--runs", type=int, default=10, help="instances per model")
    cmp_.add_argument("--seed", type=int, help="master seed (printed when omitted)")
    cmp_.add_argument("--out", type=Path, required=True, help="report directory")
    cmp_.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_metric_flags(cmp_)
    _add_model_flags(cmp_)
    return parser


def configure_logging(verbose: int, quiet: bool):
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    logging.captureWarnings(True)


def _split(value: str, valid: Sequence[str]) -> List[str]:
    if value.strip() == "all":
        return list(valid)
    names = [part.strip() for part in value.split(",") if part.strip()]
    if not names:
        raise UsageError("expected at least one name")
    return names


def _metric_options(args: argparse.Namespace, jobs: int = 1) -> MetricOptions:
    return MetricOptions(
        metrics=tuple(_split(args.metrics, METRIC_NAMES)),
        clustering_mode=args.clustering_mode,
        spectrum_mode=args.spectrum_mode,
        spectrum_k=args.spectrum_k,
        clique_budget=args.clique_budget,
        jobs=jobs,
    )


def model_params(model: str, args: argparse.Namespace) -> Dict[str, Any]:
    """Config overrides for `model` from the flags the user actually gave."""
    params = {}
    for dest, field_name in MODEL_FLAGS[model].items():
        value = getattr(args, dest, None)
        if value is not None:
            params[field_name] = value
    return params


def cmd_generate(args: argparse.Namespace) -> int:
    params = model_params(args.model, args)
    if args.n is not None:
        params["n"] = args.n
    cfg = model_config(args.model, **params)
    seed = fresh_seed() if args.seed is None else args.seed
    graph = generate(args.model, cfg, seed)

    header = [f"astopo {__version__} generate {args.model} seed={seed}"]
    header.append(" ".join(f"{k}={v}" for k, v in sorted(vars(cfg).items())))
    args.out.parent.mkdir(parents=True, exist_ok=True)
    write_edge_list(graph, args.out, header=header)
    print(f"N={graph.node_count} M={graph.edge_count} seed={seed}")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    graph = read_edge_list(args.input)
    report = analyze(graph, _metric_options(args), graph_id=args.input.stem)
    written = emit_metric_report(report, args.format, args.out)
    print(f"N={report.n} M={report.m} wrote {len(written)} file(s) to {args.out}")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    models = _split(args.models, MODEL_NAMES)
    options = _metric_options(args, jobs=args.jobs)
    overrides = {}
    for model in models:
        if model in MODEL_FLAGS:
            params = model_params(model, args)
            if params:
                overrides[model] = model_config(model, **params)
    seed = fresh_seed() if args.seed is None else args.seed
    target = read_edge_list(args.target)

    run = run_comparison(
        target,
        models,
        seeds_per_model=args.runs,
        options=options,
        master_seed=seed,
        model_configs=overrides,
        target_id=args.target.stem,
    )
    for fmt in REPORT_FORMATS:
        emit_report(run, fmt, args.out)
    print(f"N={target.node_count} M={target.edge_count} seed={seed} models={','.join(models)}")
    for runs in run.runs:
        if runs.inapplicable:
            print(f"{runs.model}: inapplicable ({runs.inapplicable})")
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "analyze": cmd_analyze,
    "compare": cmd_compare,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        return COMMANDS[args.command](args)
    except (TopologyError, ValueError, FileNotFoundError) as exc:
        print(f"astopo {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:
        logger.debug("Unhandled failure", exc_info=True)
        print(f"astopo {args.command}: failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
