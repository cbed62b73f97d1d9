"""Degree-distribution analysis.

The tail of a degree distribution is summarized by the complementary
cumulative distribution ccdf(d) = P(D >= d), computed exactly from integer
counts. Power-law tails are fitted by unweighted least squares on the
log10-log10 ccdf over a degree window; if the ccdf slope is s, the density
exponent is reported as alpha = 1 - s (a density proportional to d^-a has
a ccdf proportional to d^-(a-1)).

The rate-equation oracles give the asymptotic density exponents the models
should approach:

    price:      2 + lambda / c
    krapivsky:  in  2 + p * lambda / c
                out 1 + (1 + p * mu / c) / (1 - p)

with c the linear preference slope. Finite runs bend below these values at
low degree, which is why fits use a degree window rather than the full
range.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .preference import FitnessModel, ParameterError, PreferenceFunction

DEFAULT_FIT_MIN_DEGREE = 5
DEFAULT_FIT_TAIL_NODES = 10


def ccdf(histogram):
    """Map degree -> P(D >= degree) over the occupied degrees.

    Counts are summed as integers and divided once, so each value is the
    exact count ratio rounded to float.
    """
    if not histogram:
        raise ParameterError("empty degree histogram")
    total = sum(histogram.values())
    out = {}
    running = 0
    for d in sorted(histogram, reverse=True):
        running += histogram[d]
        out[d] = running / total
    return dict(sorted(out.items()))


def fit_exponent(ccdf_map, d_lo, d_hi):
    """Fit log10 ccdf against log10 degree on d_lo <= d <= d_hi.

    Returns (alpha, r_squared) where alpha = 1 - slope is the density
    exponent. Needs at least five occupied degrees in the window.
    """
    degrees = [d for d in ccdf_map if d_lo <= d <= d_hi and d > 0 and ccdf_map[d] > 0]
    if len(degrees) < 5:
        raise ParameterError(
            f"need at least 5 occupied degrees in [{d_lo}, {d_hi}] to fit, "
            f"found {len(degrees)}"
        )
    x = np.log10(np.array(degrees, dtype=float))
    y = np.log10(np.array([ccdf_map[d] for d in degrees], dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_res = float(np.dot(resid, resid))
    ss_tot = float(np.dot(y - y.mean(), y - y.mean()))
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res == 0.0 else 0.0
    else:
        r2 = 1.0 - ss_res / ss_tot
    return 1.0 - float(slope), r2


@dataclass
class DegreeStats:
    histogram: dict
    ccdf: dict
    exponent: float
    r_squared: float
    fit_range: tuple
    nodes: int


def degree_stats(
    histogram,
    fit_min_degree=DEFAULT_FIT_MIN_DEGREE,
    fit_tail_nodes=DEFAULT_FIT_TAIL_NODES,
    fit_range=None,
):
    """Compute the ccdf and fit its tail.

    The default window keeps degrees >= fit_min_degree whose ccdf is at
    least fit_tail_nodes / (node count), dropping the bent low-degree head
    and the noisy extreme tail. An explicit fit_range overrides both.
    """
    c = ccdf(histogram)
    nodes = sum(histogram.values())
    if fit_range is None:
        threshold = fit_tail_nodes / nodes
        eligible = [d for d, v in c.items() if d >= fit_min_degree and v >= threshold]
        if not eligible:
            raise ParameterError(
                f"no degrees at or above {fit_min_degree} with ccdf >= {threshold:g}"
            )
        fit_range = (fit_min_degree, max(eligible))
    exponent, r2 = fit_exponent(c, fit_range[0], fit_range[1])
    return DegreeStats(dict(histogram), c, exponent, r2, tuple(fit_range), nodes)


def price_exponent(lam, c=1.0):
    """Asymptotic in-degree density exponent of Price's model."""
    return 2.0 + lam / c


def krapivsky_in_exponent(p, lam, c=1.0):
    return 2.0 + p * lam / c


def krapivsky_out_exponent(p, mu, c=1.0):
    if p >= 1.0:
        return float("inf")
    return 1.0 + (1.0 + p * mu / c) / (1.0 - p)


def star_ratio(g):
    """Largest fraction of edges incident to any single node.

    A self-loop contributes one edge, so the value stays within [0, 1]; for
    loop-free graphs it equals max total degree / edge count.
    """
    if g.n_edges == 0:
        raise ParameterError("star ratio is undefined on a graph with no edges")
    best = 0
    loops = g.self_loops
    ind = g.in_degrees
    outd = g.out_degrees
    for v in range(g.n_nodes):
        inc = ind[v] + outd[v]
        if loops:
            inc -= loops.get(v, 0)
        if inc > best:
            best = inc
    return best / g.n_edges


def star_ratio_from_degrees(in_counts, out_counts, self_loops, n_edges):
    """Same ratio computed from per-node degree mappings (edge-list input)."""
    if n_edges == 0:
        raise ParameterError("star ratio is undefined with no edges")
    best = 0
    for v in set(in_counts) | set(out_counts):
        inc = in_counts.get(v, 0) + out_counts.get(v, 0) - self_loops.get(v, 0)
        if inc > best:
            best = inc
    return best / n_edges


@dataclass
class StarReport:
    alpha: float
    ratio: float
    ci95: tuple
    replications: int
    ratios: tuple


def _mean_ci(values):
    arr = np.asarray(values, dtype=float)
    mean = float(arr.mean())
    if arr.size < 2:
        return mean, (mean, mean)
    half = 2.0 * float(arr.std(ddof=1)) / arr.size ** 0.5
    return mean, (mean - half, mean + half)


def _sweep_run(config):
    # module-level so process pools can pickle it
    from .models import generate

    result = generate(config)
    return star_ratio(result.graph)


def sweep_alpha(
    alphas,
    n=100_000,
    replications=10,
    p=0.8,
    fitness=1.0,
    seed=1,
    model="krapivsky",
    index_kind="heap",
    jobs=1,
):
    """Generate networks under power-law preference d**alpha + fitness for
    each alpha and report the star ratio, mean over replications with a
    two-standard-error interval. Replication i uses seed + i.
    """
    from .models import ModelConfig

    if replications < 1:
        raise ParameterError("replications must be at least 1")
    const = FitnessModel("constant", fitness)
    configs = []
    for alpha in alphas:
        pref = PreferenceFunction.power(alpha)
        for rep in range(replications):
            configs.append(
                ModelConfig(
                    model=model,
                    n=n,
                    p=p,
                    lambda_model=const,
                    mu_model=const,
                    pref_in=pref,
                    pref_out=pref,
                    seed=seed + rep,
                    index_kind=index_kind,
                    keep_edges=False,
                )
            )
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            ratios = list(pool.map(_sweep_run, configs))
    else:
        ratios = [_sweep_run(cfg) for cfg in configs]
    reports = []
    for i, alpha in enumerate(alphas):
        chunk = ratios[i * replications : (i + 1) * replications]
        mean, ci = _mean_ci(chunk)
        reports.append(StarReport(float(alpha), mean, ci, replications, tuple(chunk)))
    return reports
