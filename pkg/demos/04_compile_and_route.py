# Lowering a 6-particle QAOA circuit to native gates and routing it onto a line.

from jetcut import (CouplingMap, GeneratorConfig, QaoaConfig, build_graph,
                    generate_two_jet_event, lower, optimize, route, run_circuit,
                    simulate_gates, stats)
from jetcut.compiler import fidelity, to_logical_order, to_qasm

ev = generate_two_jet_event(GeneratorConfig(n_particles=6, angular_spread=0.3, seed=5))
g = build_graph(ev, 2)
params = optimize(g, QaoaConfig(depth=1)).params

circ = lower(g, params)
print("unrouted:", stats(circ))
print("fidelity vs engine:", fidelity(simulate_gates(circ), run_circuit(g, params)))

# %% a 6-qubit line, each qubit talks to at most 2 neighbours
routed = route(circ, CouplingMap.line(6))
print("routed:  ", stats(routed.circuit))
print("final layout (logical -> physical):", routed.layout)
state = to_logical_order(simulate_gates(routed.circuit), routed.layout)
print("fidelity after routing:", fidelity(state, simulate_gates(circ)))

# %% OpenQASM 2.0 for use with other toolchains
print(to_qasm(routed.circuit)[:300], "...")
