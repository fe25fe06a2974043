import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial.transform import Rotation

from jetcut.baselines import kt_cluster
from jetcut.evaluation import (MetricRecord, aggregate, read_results, record_fields,
                               records_from_rows, score, write_histogram, write_results)
from jetcut.events import Event, GeneratorConfig, Particle, generate_two_jet_event, rotate_event
from jetcut.maxcut import Partition

AXES = ((0.0, 0.0, 1.0), (0.0, 0.0, -1.0))


def test_perfect_reconstruction():
    ev = Event((Particle(0, 0, 3, 3), Particle(0, 0, -2, 2)), AXES)
    rec = score(Partition((0, 1)), ev, "x")
    assert rec.valid and rec.sum == 0.0 and rec.algorithm == "x"


def test_pairing_symmetry():
    ev = generate_two_jet_event(GeneratorConfig(8, 0.3, seed=2))
    part = kt_cluster(ev).assignment
    a = score(part, ev)
    b = score(part.complement(), ev)
    assert a.sum == pytest.approx(b.sum, abs=1e-15)


def test_pairing_minimizes_sum_by_hand():
    # jet 0 along +x tilted 0.1 toward +z, jet 1 along -z; the swapped pairing is optimal
    ev = Event((Particle(0, 0, -1, 1), Particle(math.sin(0.1), 0, math.cos(0.1), 1)), AXES)
    rec = score(Partition((0, 1)), ev)
    assert rec.sum == pytest.approx(0.1, abs=1e-12)


def test_zero_spread_two_particles():
    for s in range(10):
        ev = generate_two_jet_event(GeneratorConfig(2, 0.0, seed=s))
        rec = score(Partition((0, 1)), ev)
        assert rec.sum < 1e-9


def test_empty_side_invalid():
    ev = generate_two_jet_event(GeneratorConfig(4, 0.3, seed=1))
    rec = score(Partition((1, 1, 1, 1)), ev, "qaoa")
    assert not rec.valid and rec.sum == 2 * math.pi
    assert rec.sum == rec.angle1 + rec.angle2


def test_size_mismatch():
    ev = generate_two_jet_event(GeneratorConfig(4, 0.3, seed=1))
    with pytest.raises(ValueError):
        score(Partition((0, 1)), ev)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 10), st.integers(0, 2**32), st.integers(0, 2**32))
def test_rotation_invariance(n, seed, rseed):
    ev = generate_two_jet_event(GeneratorConfig(n, 0.5, seed=seed))
    rot = Rotation.random(random_state=rseed % 2**32).as_matrix()
    part = Partition(ev.labels)
    a, b = score(part, ev), score(part, rotate_event(ev, rot))
    assert abs(a.sum - b.sum) < 1e-9
    assert 0 <= a.sum <= 2 * math.pi


def test_aggregate_single():
    s = aggregate([MetricRecord(0, "kt", 0.1, 0.2, 0.3, True)])
    assert s["kt"]["mean"] == s["kt"]["median"] == 0.3
    assert sum(s["kt"]["hist_counts"]) == 1
    assert len(s["kt"]["hist_counts"]) == 60


def test_aggregate_all_invalid():
    recs = [MetricRecord(i, "qaoa", math.pi, math.pi, 2 * math.pi, False) for i in range(3)]
    s = aggregate(recs)["qaoa"]
    assert s["valid_count"] == 0 and s["count"] == 3
    assert s["mean"] is None and s["median"] is None


def test_aggregate_identical_algorithms():
    recs = [MetricRecord(i, a, 0.0, 0.0, 0.0, True) for i in range(4) for a in ("kt", "kmeans")]
    s = aggregate(recs)
    assert s["kt"] == s["kmeans"]


def test_aggregate_quartiles_and_overflow():
    sums = [0.5, 1.0, 1.5, 2.0, 4.0]
    s = aggregate([MetricRecord(i, "a", v / 2, v / 2, v, True) for i, v in enumerate(sums)])["a"]
    assert s["median"] == 1.5 and s["q1"] == 1.0 and s["q3"] == 2.0
    assert s["overflow"] == 1 and sum(s["hist_counts"]) == 4


def test_aggregate_empty():
    with pytest.raises(ValueError):
        aggregate([])


def test_result_csv_roundtrip(tmp_path):
    recs = [MetricRecord(1, "kt", 0.1, 0.2, 0.30000000000000004, True),
            MetricRecord(2, "kt", math.pi, math.pi, 2 * math.pi, False)]
    write_results([record_fields(r) for r in recs], tmp_path / "r.csv")
    assert records_from_rows(read_results(tmp_path / "r.csv")) == recs
    summary = aggregate(recs)
    write_histogram(summary, tmp_path / "h.csv")
    lines = (tmp_path / "h.csv").read_text().splitlines()
    assert lines[0] == "algorithm,bin_low,bin_high,count" and len(lines) == 61
