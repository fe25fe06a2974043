"""QAOA-based two-jet clustering: event graphs, Max-Cut QAOA, baselines, evaluation."""

from .baselines import JetResult, kmeans_cluster, kt_cluster
from .compiler import CouplingMap, Gate, GateCircuit, lower, route, simulate_gates, stats
from .evaluation import MetricRecord, aggregate, score
from .events import (Event, GeneratorConfig, Particle, angle_between, direction,
                     generate_events, generate_two_jet_event, read_events, write_events)
from .graph import WeightedGraph, build_graph, complete_graph
from .maxcut import CutResult, Partition, QubitLimitError, brute_force_maxcut, cost_spectrum, cut_value
from .qaoa import (InitStrategy, QaoaConfig, QaoaOutcome, QaoaParams, apply_cost_layer,
                   apply_mixer_layer, expectation, optimize, prepare_plus_state, run_circuit, sample)

__version__ = "0.1.0"
