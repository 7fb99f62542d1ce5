# %% [markdown]
# # Cost per generated pile
# Operation counters (head moves, list scans, splices) stay flat per stamp
# folding and grow linearly per semi-meander.

# %%
import sys

from foldgray.bench import run_bench, write_csv

records = []
for kind in ("stamp", "semi"):
    for algo in ("recursive", "iterative"):
        records += run_bench(range(6, 13), kind, algo, repetitions=1)
write_csv(records, sys.stdout)

# %%
for r in records:
    print(f"{r.kind.value:5} {r.algorithm.value:9} n={r.n:2}  ops/pile={r.ops_per_string:6.2f}"
          f"  ops/pile/n={r.ops_per_string / r.n:5.3f}  worst step={r.ops.max_ops_per_emission}")
