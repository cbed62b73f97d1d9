"""Superlinear preference and the collapse into a star.

Replace the linear preference with d**alpha + 1. Below alpha = 1 the
network stays broadly spread; past it, one hub starts collecting nearly
every edge. The diagnostic is the fraction of all edges touching the
busiest node.
"""

from prefatt import sweep_alpha

ALPHAS = [0.8, 1.0, 1.2, 1.5, 2.0]

reports = sweep_alpha(ALPHAS, n=20_000, replications=5, seed=3)

print("alpha   busiest-node edge share")
for r in reports:
    bar = "#" * int(50 * r.ratio)
    print(f"{r.alpha:<5g}  {r.ratio:6.4f}  {bar}")

print("\nthe jump sits between 1.0 and 1.2 at this size; it sharpens and "
      "shifts toward 1.0 as n grows")
