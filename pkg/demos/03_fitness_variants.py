"""Random per-node fitness instead of a shared constant.

Three fitness models with the same mean: a constant, a Pareto draw
(shape lambda, scale lambda - 1), and a normal clipped at zero. The tail
stays a power law in all three cases; random fitness mostly adds run-to-run
wobble to the fitted exponent.
"""

import statistics

from prefatt import FitnessModel, ModelConfig, degree_stats, generate

LAM = 3.5
MODELS = [
    FitnessModel("constant", LAM),
    FitnessModel("pareto", LAM),
    FitnessModel("truncated_normal", LAM),
]

for fm in MODELS:
    exponents = []
    for rep in range(3):
        cfg = ModelConfig(
            model="krapivsky",
            n=100_000,
            p=0.8,
            seed=40 + rep,
            lambda_model=fm,
            mu_model=FitnessModel("constant", 1.8),
            keep_edges=False,
        )
        stats = degree_stats(generate(cfg).graph.degree_histogram("in"))
        exponents.append(stats.exponent)
    spread = statistics.stdev(exponents)
    print(f"{fm.describe():>12}: exponents "
          f"{[round(a, 3) for a in exponents]}  spread {spread:.4f}")

print("\nheavier-tailed fitness -> wider spread, same qualitative tail")
