"""Growing-network models.

Price's model: every step samples an existing target by in-degree
preference, then adds a new node and an edge from it to the target.

The Krapivsky model interleaves two step kinds: with probability p a node
step (same as Price), otherwise an edge step that adds an edge between two
existing nodes, tail sampled by out-degree preference and head by
in-degree preference. Generation stops when the node budget is reached, so
the iteration count is itself random with mean about n/p.

One description of the edge step labels the endpoints the other way round
(tail by in-degree, head by out-degree). The default here keeps tail =
out-degree sample; ``literal_pseudocode=True`` switches to the transposed
labeling for comparison runs.

Both loops keep the graph and the sampling indexes in lockstep: after an
edge lands, the affected endpoint's index mass is recomputed from its new
degree and fitness, and new nodes are inserted with their starting mass
(in: degree 0, out: degree 1, since a node is born with its out-edge).
"""

import time
from dataclasses import dataclass, field, replace
from typing import Optional

from .graph import Graph
from .index import INDEX_KINDS, make_index
from .preference import FitnessModel, ParameterError, PreferenceFunction

_RESAMPLE_CAP = 10_000
_KEEP_EDGES_MAX_N = 1_000_000


@dataclass(frozen=True)
class ModelConfig:
    model: str = "price"
    n: int = 1000
    p: float = 0.8
    lambda_model: FitnessModel = FitnessModel("constant", 1.0)
    mu_model: FitnessModel = FitnessModel("constant", 1.0)
    pref_in: PreferenceFunction = PreferenceFunction.linear(1.0)
    pref_out: PreferenceFunction = PreferenceFunction.linear(1.0)
    seed: int = 1
    seed_graph_size: int = 1
    index_kind: str = "heap"
    keep_edges: Optional[bool] = None
    simple: bool = False
    literal_pseudocode: bool = False
    max_iteration_factor: float = 100.0


@dataclass
class GenerationResult:
    config: ModelConfig
    graph: Graph
    iterations: int
    wall_time: float
    in_index: object = None
    out_index: object = None


def _validate(cfg):
    if cfg.model not in ("price", "krapivsky"):
        raise ParameterError(f"unknown model {cfg.model!r}")
    if cfg.n < 1:
        raise ParameterError("n must be at least 1")
    if cfg.seed_graph_size < 1:
        raise ParameterError("seed_graph_size must be at least 1")
    if cfg.seed_graph_size > cfg.n:
        raise ParameterError("seed_graph_size cannot exceed n")
    if not 0.0 < cfg.p <= 1.0:
        # price ignores p, but a nonsense value is a mistake either way
        raise ParameterError("p must be in (0, 1]")
    if cfg.index_kind not in INDEX_KINDS:
        raise ParameterError(f"unknown index kind {cfg.index_kind!r}")
    if cfg.simple and cfg.seed_graph_size < 2:
        raise ParameterError(
            "simple mode needs seed_graph_size >= 2: an edge step on a "
            "single-node graph can never find distinct endpoints"
        )
    if cfg.index_kind == "array":
        constraints = [(cfg.pref_in, cfg.lambda_model, "in")]
        if cfg.model == "krapivsky":
            constraints.append((cfg.pref_out, cfg.mu_model, "out"))
        for pref, fit, side in constraints:
            if pref.kind != "linear" or pref.coefficient != 1.0 or fit.kind != "constant":
                raise ParameterError(
                    "array index requires linear preference with c=1 and "
                    f"constant fitness (violated on the {side} side)"
                )


def _make_indexes(cfg, track_out):
    in_fit = cfg.lambda_model.location if cfg.lambda_model.kind == "constant" else None
    in_index = make_index(cfg.index_kind, seed=2 * cfg.seed, fitness=in_fit)
    out_index = None
    if track_out:
        out_fit = cfg.mu_model.location if cfg.mu_model.kind == "constant" else None
        out_index = make_index(cfg.index_kind, seed=2 * cfg.seed + 1, fitness=out_fit)
    return in_index, out_index


def _grow(cfg, rng, edge_sink):
    """Shared generation loop; Price is the p=1 special case without an
    out-degree index."""
    _validate(cfg)
    track_out = cfg.model == "krapivsky"
    p = cfg.p if track_out else 1.0
    keep = cfg.keep_edges
    if keep is None:
        keep = cfg.n <= _KEEP_EDGES_MAX_N
    g = Graph(keep_edges=keep, edge_sink=edge_sink)
    in_index, out_index = _make_indexes(cfg, track_out)

    lam_model = cfg.lambda_model
    mu_model = cfg.mu_model
    mass_in = cfg.pref_in.mass
    mass_out = cfg.pref_out.mass

    for _ in range(cfg.seed_graph_size):
        lam = lam_model.draw(rng)
        mu = mu_model.draw(rng) if track_out else 0.0
        v = g.add_node(lam, mu)
        in_index.insert(v, mass_in(0, lam))
        if track_out:
            out_index.insert(v, mass_out(0, mu))
    if in_index.total_mass <= 0.0:
        raise ParameterError(
            "zero total in-degree preference mass on the seed graph; "
            "the first sample would fail (check fitness and preference)"
        )
    if track_out and p < 1.0 and out_index.total_mass <= 0.0:
        raise ParameterError(
            "zero total out-degree preference mass on the seed graph; "
            "an edge step could not sample a tail"
        )

    # local aliases: these calls run a few million times per generation
    uniform = rng.uniform
    in_sample = in_index.sample_at
    in_increment = in_index.increment
    in_insert = in_index.insert
    add_node = g.add_node
    add_edge = g.add_edge
    in_deg = g.in_degrees
    fit_in = g.fitness_in
    if track_out:
        out_sample = out_index.sample_at
        out_increment = out_index.increment
        out_insert = out_index.insert
        out_deg = g.out_degrees
        fit_out = g.fitness_out
    draw_branch = p < 1.0
    literal = cfg.literal_pseudocode
    simple = cfg.simple

    n = cfg.n
    nodes = cfg.seed_graph_size
    cap = int(cfg.max_iteration_factor * n / p)
    iterations = 0
    started = time.perf_counter()
    while nodes < n:
        iterations += 1
        if iterations > cap:
            raise RuntimeError(
                f"iteration cap {cap} exceeded after adding {nodes} of {n} nodes; "
                f"p={p} may be too small for the requested size"
            )
        if draw_branch and uniform() >= p:
            # edge step between existing nodes
            if literal:
                tail = in_sample(uniform())
                head = out_sample(uniform())
            else:
                tail = out_sample(uniform())
                head = in_sample(uniform())
            if simple and tail == head:
                for _ in range(_RESAMPLE_CAP):
                    if literal:
                        tail = in_sample(uniform())
                        head = out_sample(uniform())
                    else:
                        tail = out_sample(uniform())
                        head = in_sample(uniform())
                    if tail != head:
                        break
                else:
                    raise RuntimeError(
                        f"could not sample distinct endpoints in {_RESAMPLE_CAP} tries"
                    )
            add_edge(tail, head)
            out_increment(tail, mass_out(out_deg[tail], fit_out[tail]))
            in_increment(head, mass_in(in_deg[head], fit_in[head]))
        else:
            # node step: edge from the newcomer to a preferentially sampled target
            target = in_sample(uniform())
            lam = lam_model.draw(rng)
            mu = mu_model.draw(rng) if track_out else 0.0
            v = add_node(lam, mu)
            add_edge(v, target)
            in_increment(target, mass_in(in_deg[target], fit_in[target]))
            in_insert(v, mass_in(0, lam))
            if track_out:
                out_insert(v, mass_out(1, mu))
            nodes += 1
    wall = time.perf_counter() - started
    return GenerationResult(cfg, g, iterations, wall, in_index, out_index)


def price_generate(config, rng=None, edge_sink=None):
    """Run Price's model; config.p, mu_model, and pref_out are ignored."""
    cfg = replace(config, model="price")
    from .rng import RandomSource

    if rng is None:
        rng = RandomSource(cfg.seed)
    return _grow(cfg, rng, edge_sink)


def krapivsky_generate(config, rng=None, edge_sink=None):
    """Run the Krapivsky model with node probability config.p."""
    cfg = replace(config, model="krapivsky")
    from .rng import RandomSource

    if rng is None:
        rng = RandomSource(cfg.seed)
    return _grow(cfg, rng, edge_sink)


def generate(config, rng=None, edge_sink=None):
    """Dispatch on config.model."""
    if config.model == "price":
        return price_generate(config, rng, edge_sink)
    if config.model == "krapivsky":
        return krapivsky_generate(config, rng, edge_sink)
    raise ParameterError(f"unknown model {config.model!r}")
