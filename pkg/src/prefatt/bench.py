"""Timing harness over the index kinds.

Each (index kind, size) cell generates networks from a shared model
template with fresh seeds per replication (base seed + replication index),
after one discarded warm-up run. Timings come from the generation result's
wall_time, which covers only the sample/increment/insert loop; graphs are
generated without edge retention or output, so no I/O is measured.
"""

import gc
import sys
from dataclasses import dataclass, replace

from .models import ModelConfig, generate
from .preference import ParameterError


@dataclass
class BenchResult:
    index_kind: str
    n: int
    mean_seconds: float
    ci95_seconds: float  # two standard errors; 0.0 with a single replication
    replications: int
    mem_bytes_estimate: int


# CPython payload estimates: a float object is 24 bytes, a distinct int
# around 28, plus an 8-byte slot in every list that references it.
_FLOAT_ITEM = 32
_INT_ITEM = 36


def _estimate_bytes(index):
    total = 0
    for name in dir(index):
        if not name.startswith("_"):
            continue
        try:
            value = getattr(index, name)
        except AttributeError:
            continue
        if isinstance(value, list) and value:
            per = _FLOAT_ITEM if isinstance(value[0], float) else _INT_ITEM
            total += sys.getsizeof(value) + per * len(value)
        elif isinstance(value, dict):
            total += sys.getsizeof(value)
    return total


def run_bench(index_kinds, sizes, config=None, replications=3, warmup=1, seed=1):
    """Time generation for every kind x size cell; returns BenchResult rows.

    The default template is a Krapivsky run with unit constant fitness and
    linear preference, which every index kind supports.
    """
    if replications < 1:
        raise ParameterError("replications must be at least 1")
    if config is None:
        config = ModelConfig(model="krapivsky", p=0.8)
    results = []
    for kind in index_kinds:
        for n in sizes:
            cell = replace(config, n=int(n), index_kind=kind, keep_edges=False)
            mem = 0
            for _ in range(warmup):
                generate(replace(cell, seed=seed))
            times = []
            for rep in range(replications):
                gc.collect()
                result = generate(replace(cell, seed=seed + rep))
                times.append(result.wall_time)
                mem = _estimate_bytes(result.in_index)
                if result.out_index is not None:
                    mem += _estimate_bytes(result.out_index)
            mean = sum(times) / len(times)
            if len(times) > 1:
                var = sum((t - mean) ** 2 for t in times) / (len(times) - 1)
                ci = 2.0 * (var ** 0.5) / len(times) ** 0.5
            else:
                ci = 0.0
            results.append(BenchResult(kind, int(n), mean, ci, replications, mem))
    return results


def write_bench_csv(results, stream):
    stream.write("index_kind,n,mean_seconds,ci95_seconds,replications\n")
    for r in results:
        stream.write(
            f"{r.index_kind},{r.n},{r.mean_seconds:.6f},{r.ci95_seconds:.6f},{r.replications}\n"
        )
