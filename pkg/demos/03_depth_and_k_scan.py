# Scanning QAOA depth and graph k on a small ensemble of 10-particle events.
#
# Same idea as the CLI `jetcut sweep`, written out by hand.

import numpy as np

from jetcut import GeneratorConfig, QaoaConfig, generate_events
from jetcut.pipeline import qaoa_row

events = generate_events(GeneratorConfig(n_particles=10, angular_spread=0.4, seed=300), 20)

# %% depth scan at k = 6
for depth in (1, 3, 5):
    rows = [qaoa_row(ev, 6, QaoaConfig(depth=depth, seed=ev.event_id)) for ev in events]
    ratio = np.mean([r["expectation"] / r["c_max"] for r in rows])
    print(f"depth={depth}: median sum={np.median([r['sum'] for r in rows]):.4f} "
          f"mean <C>/C_max={ratio:.3f}")

# %% k scan at depth 3
for k in (2, 4, 6, 7, 8):
    rows = [qaoa_row(ev, k, QaoaConfig(depth=3, seed=ev.event_id)) for ev in events]
    print(f"k={k}: median sum={np.median([r['sum'] for r in rows]):.4f}")
