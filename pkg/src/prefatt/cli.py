"""Command line front end.

Subcommands: generate, analyze, bench, sweep-alpha. Every run writes its
outputs plus a manifest.json recording the resolved parameters, seed, tool
version, and timestamps, so a run can be reproduced from the manifest
alone. Count flags accept scientific notation (--n 1e6).

Exit codes: 0 success, 1 usage or parameter error, 2 runtime error.
"""

import argparse
import json
import sys
import time
from collections import Counter
from datetime import datetime, timezone

from . import __version__
from .analysis import (
    DEFAULT_FIT_MIN_DEGREE,
    DEFAULT_FIT_TAIL_NODES,
    degree_stats,
    star_ratio_from_degrees,
    sweep_alpha,
)
from .bench import run_bench, write_bench_csv
from .index import INDEX_KINDS
from .models import ModelConfig, generate
from .preference import ParameterError, parse_fitness, parse_preference


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; argparse's default of 2 is reserved for runtime errors
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(1)


def _count(text):
    try:
        value = float(text)
    except ValueError:
        raise ParameterError(f"not a number: {text!r}") from None
    rounded = int(round(value))
    if rounded < 0 or abs(value - rounded) > 1e-6 * max(1.0, abs(value)):
        raise ParameterError(f"expected a non-negative integer, got {text!r}")
    return rounded


def _count_list(text):
    return [_count(item) for item in text.split(",") if item]


def _float_list(text):
    try:
        return [float(item) for item in text.split(",") if item]
    except ValueError:
        raise ParameterError(f"bad number list {text!r}") from None


def _now():
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _out_dir(args, subcommand):
    from pathlib import Path

    if args.out:
        path = Path(args.out)
    else:
        stamp = time.strftime("%Y%m%d-%H%M%S")
        path = Path(f"prefatt-{subcommand}-{stamp}")
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write_manifest(path, subcommand, parameters, outputs, results, started):
    manifest = {
        "tool": "prefatt",
        "version": __version__,
        "subcommand": subcommand,
        "parameters": parameters,
        "seed": parameters.get("seed"),
        "started": started,
        "finished": _now(),
        "outputs": outputs,
        "results": results,
    }
    with open(path / "manifest.json", "w") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")
    return manifest


def _write_histogram(path, histogram):
    with open(path, "w") as f:
        f.write("degree,count\n")
        for d in sorted(histogram):
            f.write(f"{d},{histogram[d]}\n")


def _write_ccdf(path, ccdf_map):
    with open(path, "w") as f:
        f.write("degree,ccdf\n")
        for d in sorted(ccdf_map):
            f.write(f"{d},{ccdf_map[d]:.10g}\n")


def _add_model_flags(sub, default_fitness="const:1"):
    sub.add_argument("--model", choices=["price", "krapivsky"], default="price")
    sub.add_argument("--n", type=_count, default=1000, help="node budget (accepts 1e6)")
    sub.add_argument("--p", type=float, default=0.8, help="node-step probability (krapivsky)")
    sub.add_argument("--fitness", default=default_fitness, metavar="KIND:LOC",
                     help="in-degree fitness, e.g. const:3.5, pareto:3.5, normal:3.5")
    sub.add_argument("--fitness-out", default=None, metavar="KIND:LOC",
                     help="out-degree fitness (default: same as --fitness)")
    sub.add_argument("--pref", default="linear:c=1", metavar="KIND:...",
                     help="in-degree preference, e.g. linear:c=1 or power:alpha=1.2")
    sub.add_argument("--pref-out", default=None, metavar="KIND:...",
                     help="out-degree preference (default: same as --pref)")
    sub.add_argument("--index", choices=list(INDEX_KINDS), default="heap")
    sub.add_argument("--seed", type=_count, default=1)
    sub.add_argument("--seed-graph-size", type=_count, default=1)
    sub.add_argument("--simple", action="store_true",
                     help="resample edge-step endpoint pairs until distinct")
    sub.add_argument("--literal-pseudocode", action="store_true",
                     help="transpose edge-step endpoint sampling (tail by in-degree)")


def _config_from_args(args):
    lam = parse_fitness(args.fitness)
    mu = parse_fitness(args.fitness_out) if args.fitness_out else lam
    pref_in = parse_preference(args.pref)
    pref_out = parse_preference(args.pref_out) if args.pref_out else pref_in
    return ModelConfig(
        model=args.model,
        n=args.n,
        p=args.p,
        lambda_model=lam,
        mu_model=mu,
        pref_in=pref_in,
        pref_out=pref_out,
        seed=args.seed,
        seed_graph_size=args.seed_graph_size,
        index_kind=args.index,
        keep_edges=False,
        simple=args.simple,
        literal_pseudocode=args.literal_pseudocode,
    )


def _model_parameters(args, config):
    return {
        "model": config.model,
        "n": config.n,
        "p": config.p,
        "fitness": config.lambda_model.describe(),
        "fitness_out": config.mu_model.describe(),
        "pref": config.pref_in.describe(),
        "pref_out": config.pref_out.describe(),
        "index": config.index_kind,
        "seed": config.seed,
        "seed_graph_size": config.seed_graph_size,
        "simple": config.simple,
        "literal_pseudocode": config.literal_pseudocode,
    }


def _cmd_generate(args):
    started = _now()
    config = _config_from_args(args)
    out = _out_dir(args, "generate")
    write_edges = args.edges
    if write_edges is None:
        write_edges = config.n <= 1_000_000
    outputs = {"degree_in": "degree_in.csv", "degree_out": "degree_out.csv"}
    sink = None
    try:
        if write_edges:
            sink = open(out / "edges.tsv", "w")
            outputs["edges"] = "edges.tsv"
        result = generate(config, edge_sink=sink)
    finally:
        if sink is not None:
            sink.close()
    g = result.graph
    _write_histogram(out / "degree_in.csv", g.degree_histogram("in"))
    _write_histogram(out / "degree_out.csv", g.degree_histogram("out"))
    results = {
        "nodes": g.n_nodes,
        "edges": g.n_edges,
        "iterations": result.iterations,
        "wall_time_seconds": round(result.wall_time, 6),
        "max_in_degree": g.max_in_degree,
        "max_out_degree": g.max_out_degree,
        "max_total_degree": g.max_total_degree,
    }
    params = _model_parameters(args, config)
    params["edges_written"] = write_edges
    _write_manifest(out, "generate", params, outputs, results, started)
    print(f"generated {g.n_nodes} nodes, {g.n_edges} edges in {result.wall_time:.2f}s -> {out}")
    return 0


def _read_edge_file(path):
    in_counts = Counter()
    out_counts = Counter()
    loops = Counter()
    edges = 0
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParameterError(f"{path}:{lineno}: expected 'tail<TAB>head', got {line!r}")
            try:
                tail = int(parts[0])
                head = int(parts[1])
            except ValueError:
                raise ParameterError(
                    f"{path}:{lineno}: endpoints must be integers, got {line!r}"
                ) from None
            out_counts[tail] += 1
            in_counts[head] += 1
            if tail == head:
                loops[tail] += 1
            edges += 1
    if edges == 0:
        raise ParameterError(f"{path}: no edges found")
    return in_counts, out_counts, loops, edges


def _read_histogram_csv(path):
    hist = {}
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line or (lineno == 1 and line.lower().startswith("degree")):
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise ParameterError(f"{path}:{lineno}: expected 'degree,count', got {line!r}")
            try:
                hist[int(parts[0])] = int(parts[1])
            except ValueError:
                raise ParameterError(f"{path}:{lineno}: bad integers in {line!r}") from None
    if not hist:
        raise ParameterError(f"{path}: empty histogram")
    return hist


def _marginal_stats(histogram, args):
    try:
        stats = degree_stats(histogram, args.fit_min_degree, args.fit_tail_nodes)
        return stats.exponent, stats.r_squared, list(stats.fit_range)
    except ParameterError:
        # not enough tail to fit; ccdf is still reportable
        return None, None, None


def _cmd_analyze(args):
    started = _now()
    if not args.edges_file and not args.hist_in and not args.hist_out:
        raise ParameterError("analyze needs --edges, --hist-in, or --hist-out")
    out = _out_dir(args, "analyze")
    hist_in = hist_out = None
    star = None
    d_max_total = None
    edges = None
    nodes = None
    if args.edges_file:
        in_counts, out_counts, loops, edges = _read_edge_file(args.edges_file)
        node_set = set(in_counts) | set(out_counts)
        nodes = len(node_set)
        hist_in = dict(Counter(in_counts.get(v, 0) for v in node_set))
        hist_out = dict(Counter(out_counts.get(v, 0) for v in node_set))
        star = star_ratio_from_degrees(in_counts, out_counts, loops, edges)
        d_max_total = max(in_counts.get(v, 0) + out_counts.get(v, 0) for v in node_set)
    if args.hist_in:
        hist_in = _read_histogram_csv(args.hist_in)
    if args.hist_out:
        hist_out = _read_histogram_csv(args.hist_out)

    from .analysis import ccdf as _ccdf

    stats = {
        "alpha_in": None, "alpha_out": None,
        "r2": None, "r2_in": None, "r2_out": None,
        "fit_range": None, "fit_range_in": None, "fit_range_out": None,
        "d_max": d_max_total, "d_max_in": None, "d_max_out": None, "d_max_total": d_max_total,
        "edges": edges, "nodes": nodes, "star_ratio": star,
    }
    outputs = {}
    if hist_in:
        stats["d_max_in"] = max(hist_in)
        if edges is None:
            stats["edges"] = edges = sum(d * c for d, c in hist_in.items())
        if nodes is None:
            stats["nodes"] = nodes = sum(hist_in.values())
        alpha, r2, rng_ = _marginal_stats(hist_in, args)
        stats.update(alpha_in=alpha, r2_in=r2, fit_range_in=rng_)
        stats["r2"] = r2
        stats["fit_range"] = rng_
        _write_ccdf(out / "ccdf_in.csv", _ccdf(hist_in))
        outputs["ccdf_in"] = "ccdf_in.csv"
    if hist_out:
        stats["d_max_out"] = max(hist_out)
        alpha, r2, rng_ = _marginal_stats(hist_out, args)
        stats.update(alpha_out=alpha, r2_out=r2, fit_range_out=rng_)
        if stats["r2"] is None:
            stats["r2"] = r2
            stats["fit_range"] = rng_
        _write_ccdf(out / "ccdf_out.csv", _ccdf(hist_out))
        outputs["ccdf_out"] = "ccdf_out.csv"
    with open(out / "stats.json", "w") as f:
        json.dump(stats, f, indent=2, sort_keys=True)
        f.write("\n")
    outputs["stats"] = "stats.json"
    params = {
        "edges_file": args.edges_file,
        "hist_in": args.hist_in,
        "hist_out": args.hist_out,
        "fit_min_degree": args.fit_min_degree,
        "fit_tail_nodes": args.fit_tail_nodes,
        "seed": None,
    }
    _write_manifest(out, "analyze", params, outputs, stats, started)
    line = ", ".join(
        f"{k}={stats[k]:.4g}" if isinstance(stats[k], float) else f"{k}={stats[k]}"
        for k in ("alpha_in", "alpha_out", "star_ratio")
        if stats[k] is not None
    )
    print(f"analyze -> {out} ({line})" if line else f"analyze -> {out}")
    return 0


def _cmd_bench(args):
    started = _now()
    config = _config_from_args(args)
    out = _out_dir(args, "bench")
    results = run_bench(
        args.indexes,
        args.sizes,
        config=config,
        replications=args.reps,
        warmup=args.warmup,
        seed=args.seed,
    )
    with open(out / "bench.csv", "w") as f:
        write_bench_csv(results, f)
    params = _model_parameters(args, config)
    params.update(indexes=args.indexes, sizes=args.sizes,
                  reps=args.reps, warmup=args.warmup)
    del params["n"], params["index"]
    rows = [
        {"index_kind": r.index_kind, "n": r.n, "mean_seconds": round(r.mean_seconds, 6),
         "ci95_seconds": round(r.ci95_seconds, 6), "mem_bytes_estimate": r.mem_bytes_estimate}
        for r in results
    ]
    _write_manifest(out, "bench", params, {"bench": "bench.csv"}, {"cells": rows}, started)
    for r in results:
        print(f"{r.index_kind:>11} n={r.n:<9} {r.mean_seconds:.3f}s +-{r.ci95_seconds:.3f}")
    print(f"bench -> {out}")
    return 0


def _cmd_sweep_alpha(args):
    started = _now()
    out = _out_dir(args, "sweep")
    reports = sweep_alpha(
        args.alphas,
        n=args.n,
        replications=args.reps,
        p=args.p,
        fitness=args.fitness_const,
        seed=args.seed,
        index_kind=args.index,
        jobs=args.jobs,
    )
    with open(out / "sweep.csv", "w") as f:
        f.write("alpha,mean_ratio,ci_lo,ci_hi,replications\n")
        for r in reports:
            f.write(
                f"{r.alpha:g},{r.ratio:.6f},{r.ci95[0]:.6f},{r.ci95[1]:.6f},{r.replications}\n"
            )
    params = {
        "alphas": list(args.alphas), "n": args.n, "reps": args.reps, "p": args.p,
        "fitness_const": args.fitness_const, "seed": args.seed, "index": args.index,
        "jobs": args.jobs,
    }
    rows = [{"alpha": r.alpha, "mean_ratio": round(r.ratio, 6)} for r in reports]
    _write_manifest(out, "sweep-alpha", params, {"sweep": "sweep.csv"}, {"alphas": rows}, started)
    for r in reports:
        print(f"alpha={r.alpha:<4g} star ratio {r.ratio:.4f} "
              f"[{r.ci95[0]:.4f}, {r.ci95[1]:.4f}]")
    print(f"sweep-alpha -> {out}")
    return 0


def build_parser():
    parser = _Parser(prog="prefatt", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"prefatt {__version__}")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    gen = subs.add_parser("generate", help="grow a network and write degrees/edges")
    _add_model_flags(gen)
    gen.add_argument("--edges", action=argparse.BooleanOptionalAction, default=None,
                     help="write edges.tsv (default: only for n <= 1e6)")
    gen.add_argument("--out", default=None, help="output directory")
    gen.set_defaults(func=_cmd_generate)

    ana = subs.add_parser("analyze", help="degree statistics from edges or histograms")
    ana.add_argument("--edges", dest="edges_file", default=None,
                     help="edge list file, one 'tail<TAB>head' per line")
    ana.add_argument("--hist-in", default=None, help="in-degree histogram CSV")
    ana.add_argument("--hist-out", default=None, help="out-degree histogram CSV")
    ana.add_argument("--fit-min-degree", type=_count, default=DEFAULT_FIT_MIN_DEGREE)
    ana.add_argument("--fit-tail-nodes", type=_count, default=DEFAULT_FIT_TAIL_NODES)
    ana.add_argument("--out", default=None)
    ana.set_defaults(func=_cmd_analyze)

    ben = subs.add_parser("bench", help="time generation across index kinds and sizes")
    _add_model_flags(ben)
    ben.add_argument("--indexes", type=lambda s: s.split(","), default=["heap"],
                     help="comma-separated index kinds")
    ben.add_argument("--sizes", type=_count_list, default=[10_000],
                     help="comma-separated node budgets (accepts 1e4,2e4)")
    ben.add_argument("--reps", type=_count, default=3)
    ben.add_argument("--warmup", type=_count, default=1)
    ben.add_argument("--out", default=None)
    ben.set_defaults(func=_cmd_bench)

    swp = subs.add_parser("sweep-alpha", help="star ratio across preference exponents")
    swp.add_argument("--alphas", type=_float_list, default=[0.8, 1.0, 1.2, 1.5, 2.0])
    swp.add_argument("--n", type=_count, default=100_000)
    swp.add_argument("--reps", type=_count, default=10)
    swp.add_argument("--p", type=float, default=0.8)
    swp.add_argument("--fitness-const", type=float, default=1.0,
                     help="additive constant in d**alpha + c")
    swp.add_argument("--seed", type=_count, default=1)
    swp.add_argument("--index", choices=list(INDEX_KINDS), default="heap")
    swp.add_argument("--jobs", type=_count, default=1, help="parallel replications")
    swp.add_argument("--out", default=None)
    swp.set_defaults(func=_cmd_sweep_alpha)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 2
    except Exception as exc:  # noqa: BLE001 - boundary: report and map to exit code
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
