# QAOA against e+e- k_t, angular k-Means and a random-partition control
# on 200 toy 6-particle events (depth 1, k = 2).

import numpy as np

from jetcut import GeneratorConfig, QaoaConfig, aggregate, generate_events
from jetcut.evaluation import records_from_rows
from jetcut.pipeline import baseline_row, qaoa_row, random_row

events = generate_events(GeneratorConfig(n_particles=6, angular_spread=0.3, seed=2024), 200)
rng = np.random.default_rng(0)

rows = []
for ev in events:
    rows.append({"algorithm": "qaoa", **qaoa_row(ev, 2, QaoaConfig(depth=1, seed=ev.event_id))})
    rows.append(baseline_row(ev, "kt"))
    rows.append(baseline_row(ev, "kmeans"))
    rows.append(random_row(ev, rng))

summary = aggregate(records_from_rows(rows), bins=20)
for algo, s in summary.items():
    print(f"{algo:7s} valid {s['valid_count']:3d}/{s['count']}  "
          f"median {s['median']:.4f}  IQR [{s['q1']:.4f}, {s['q3']:.4f}]")

# %% crude text histogram of the angle sum
edges = summary["qaoa"]["hist_edges"]
for algo in ("qaoa", "kt"):
    print(algo)
    for lo, c in zip(edges, summary[algo]["hist_counts"]):
        if c:
            print(f"  {lo:5.2f} {'#' * (c // 2)}")
