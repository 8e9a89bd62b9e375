import io
import math

import numpy as np
import pytest

from dmsteer.errors import ConfigError, UnknownPreset
from dmsteer.netstate import NodePair
from dmsteer.sweep import (
    CSV_HEADER,
    SweepConfig,
    SweepRecord,
    discrepancies,
    evaluate,
    figure_preset,
    read_records,
    records_to_text,
    run_sweep,
    write_discrepancies,
    write_records,
)

FIELDS = ("h_x", "h_y", "h_z", "i_s", "negativity")


def test_single_point_direct_channel():
    (rec,) = run_sweep(SweepConfig(pairs=[(2, 3)], dx_values=[1.0], t_range=(0.0, 1.0, 2)))[:1]
    assert rec.i_s == pytest.approx(3.0, abs=1e-12)
    assert rec.negativity == pytest.approx(0.0, abs=1e-12)
    assert rec.steerable is False


def test_nodes_one_four_constant():
    recs = run_sweep(SweepConfig(pairs=[(1, 4)], dx_values=[1.0], t_range=(0.0, 10.0, 41)))
    assert all(r.negativity <= 1e-12 and abs(r.i_s - 3) <= 1e-9 for r in recs)


def test_periodic_records():
    dx = 0.05
    period = math.pi / dx
    ts = (0.0, period, 9)
    shifted = (period, 2 * period, 9)
    a = run_sweep(SweepConfig(pairs=[(2, 3), (2, 4)], dx_values=[dx], t_range=ts))
    b = run_sweep(SweepConfig(pairs=[(2, 3), (2, 4)], dx_values=[dx], t_range=shifted))
    for ra, rb in zip(a, b):
        for f in FIELDS:
            assert abs(getattr(ra, f) - getattr(rb, f)) <= 1e-8


def test_order_and_count():
    cfg = SweepConfig(pairs=[(2, 4), (1, 2)], dx_values=[0.1, 0.2, 0.3], t_range=(0.0, 5.0, 4))
    recs = run_sweep(cfg)
    assert len(recs) == cfg.size == 2 * 3 * 4
    keys = [(r.pair, r.dx, r.t) for r in recs]
    expected = [(p, dx, t) for p in cfg.pairs for dx in cfg.dx_values for t in np.linspace(0, 5, 4)]
    assert keys == expected


def test_batched_sweep_matches_scalar_evaluation():
    cfg = SweepConfig(pairs=[(1, 2), (2, 4), (1, 3)], dx_values=[0.07, 0.9], t_range=(0.0, 12.0, 15))
    for r in run_sweep(cfg):
        ref = evaluate(r.pair, r.dx, r.t)
        for f in FIELDS:
            assert abs(getattr(r, f) - getattr(ref, f)) <= 1e-12
        assert r.steerable == ref.steerable


def test_rerun_is_bit_identical():
    cfg = figure_preset("fig5", t_range=(0.0, 300.0, 101))
    assert records_to_text(run_sweep(cfg)) == records_to_text(run_sweep(cfg))


def test_record_invariants():
    for r in run_sweep(SweepConfig(pairs=[(1, 2), (2, 4)], dx_values=[0.3], t_range=(0.0, 10.0, 51))):
        assert abs(r.i_s - (r.h_x + r.h_y + r.h_z)) <= 1e-12
        assert r.steerable == (r.i_s < 2 - 1e-12)
        if r.steerable:
            assert r.negativity > 1e-9


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(pairs=[], dx_values=[1.0], t_range=(0, 1, 3)),
        dict(pairs=[(2, 3)], dx_values=[], t_range=(0, 1, 3)),
        dict(pairs=[(2, 3)], dx_values=[-0.1], t_range=(0, 1, 3)),
        dict(pairs=[(2, 3)], dx_values=[float("inf")], t_range=(0, 1, 3)),
        dict(pairs=[(2, 3)], dx_values=[1.0], t_range=(0, 1, 1)),
        dict(pairs=[(2, 3)], dx_values=[1.0], t_range=(1, 0, 3)),
        dict(pairs=[(2, 3)], dx_values=[1.0], t_range=(0, 1)),
        dict(pairs=[(2, 3)], dx_values=[1.0], t_range=(0, 1, 3), output_format="xml"),
    ],
)
def test_config_errors(kwargs):
    with pytest.raises(ConfigError):
        SweepConfig(**kwargs)


def test_presets():
    assert figure_preset("fig3").dx_values == (0.03, 0.05, 0.1)
    assert figure_preset("fig5").dx_values == (0.03, 0.05, 0.1)
    assert figure_preset("fig2").pairs == (NodePair(2, 3),)
    assert figure_preset("fig3").pairs == (NodePair(2, 3),)
    assert figure_preset("fig4").pairs == (NodePair(2, 4),)
    assert figure_preset("fig5").pairs == (NodePair(2, 4),)
    surf = figure_preset("fig2")
    assert len(surf.dx_values) == 100 and surf.t_range == (0.0, 50.0, 200)
    assert 0 < min(surf.dx_values) and max(surf.dx_values) == 1.0
    with pytest.raises(UnknownPreset):
        figure_preset("fig9")


@pytest.mark.parametrize("fmt", ["csv", "jsonl"])
def test_round_trip(fmt):
    recs = run_sweep(SweepConfig(pairs=[(1, 2), (2, 4)], dx_values=[0.1, 1 / 3], t_range=(0.0, 7.0, 13)))
    buf = io.StringIO()
    assert write_records(recs, buf, fmt) == len(recs)
    buf.seek(0)
    back = read_records(buf, fmt)
    assert back == recs


def test_csv_layout():
    recs = run_sweep(SweepConfig(pairs=[(1, 2)], dx_values=[0.5], t_range=(0.0, 1.0, 3)))
    text = records_to_text(recs)
    lines = text.split("\n")
    assert lines[0] == ",".join(CSV_HEADER)
    assert text.endswith("\n") and "\r" not in text
    assert len(lines) == len(recs) + 2
    assert lines[1].startswith("1-2,0.5,0.0,")
    assert lines[1].endswith(",true")


def test_read_rejects_foreign_header():
    with pytest.raises(ValueError):
        read_records(io.StringIO("a,b\n1,2\n"))


def test_record_round_trips_awkward_floats():
    rec = SweepRecord(NodePair(2, 4), 0.1 + 0.2, 1e-300, 1 / 3, 2 / 3, 5e-324, 1.0000000000000002, 0.0, False)
    buf = io.StringIO()
    write_records([rec], buf)
    buf.seek(0)
    (back,) = read_records(buf)
    assert back == rec


def test_discrepancies_only_for_supported_pairs():
    cfg = SweepConfig(pairs=[(1, 2), (2, 3), (2, 4)], dx_values=[0.5], t_range=(0.0, 2.0, 5))
    reps = discrepancies(cfg)
    assert len(reps) == 10
    assert {str(r.pair) for r in reps} == {"2-3", "2-4"}
    buf = io.StringIO()
    assert write_discrepancies(reps, buf) == 10
    assert buf.getvalue().splitlines()[0] == "pair,dx,t,trace_defect,max_entry_delta,min_eigenvalue"
