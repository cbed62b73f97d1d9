"""Time the sampling indexes against each other.

Generation cost is dominated by weighted sampling and weight updates. The
tree indexes do both in O(log n); the naive scan pays O(n) per draw and
falls off a cliff; the repeated-entry array is O(1) but only fits the
unit-slope linear preference with one shared constant fitness.
"""

import io

from prefatt import run_bench
from prefatt.bench import write_bench_csv

results = run_bench(
    ["heap", "treap-rand", "treap-mass", "array", "naive"],
    [5_000, 10_000, 20_000],
    replications=3,
    warmup=1,
    seed=1,
)

print(f"{'index':>11} {'n':>7} {'mean s':>9} {'ci95':>8}")
for r in results:
    print(f"{r.index_kind:>11} {r.n:>7} {r.mean_seconds:>9.4f} {r.ci95_seconds:>8.4f}")

# same table as machine-readable csv
buf = io.StringIO()
write_bench_csv(results, buf)
print("\n" + buf.getvalue())

naive = {r.n: r.mean_seconds for r in results if r.index_kind == "naive"}
heap = {r.n: r.mean_seconds for r in results if r.index_kind == "heap"}
print("naive-to-heap slowdown by n: "
      + ", ".join(f"{n}: {naive[n] / heap[n]:.1f}x" for n in sorted(naive)))
