# QAOA on one event: optimize the schedule, sample 1024 shots, keep the best cut.

from jetcut import (GeneratorConfig, QaoaConfig, brute_force_maxcut, build_graph,
                    generate_two_jet_event, optimize, score)

ev = generate_two_jet_event(GeneratorConfig(n_particles=10, angular_spread=0.3, seed=7))
g = build_graph(ev, 4)

out = optimize(g, QaoaConfig(depth=3, shots=1024, seed=1))
print("optimized gammas:", [round(x, 3) for x in out.params.gammas])
print("optimized betas: ", [round(x, 3) for x in out.params.betas])
print("<C> by depth:    ", [round(x, 4) for x in out.depth_expectations])
print("C_max (oracle):  ", round(brute_force_maxcut(g).value, 4))

# %% the five most frequent samples
top = sorted(out.histogram.items(), key=lambda kv: -kv[1])[:5]
for bits, count in top:
    print(bits, count)

# %% best sampled partition, scored against the truth quark directions
rec = score(out.best_sample, ev, "qaoa")
print("best sample", out.best_sample.bitstring, "cut", round(out.best_sample_value, 4))
print(f"angle1={rec.angle1:.4f} angle2={rec.angle2:.4f} sum={rec.sum:.4f}")
