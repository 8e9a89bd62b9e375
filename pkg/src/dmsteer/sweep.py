"""Grid sweeps over (D_x, t), figure presets, and CSV/JSONL record streams."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np

from . import qla
from .errors import ConfigError, UnknownPreset
from .netstate import DmVector, NodePair, evolve_many, evolve_network
from .paperforms import DiscrepancyReport, discrepancy_report
from .witness import (
    PauliAxis,
    conditional_entropies,
    is_steerable,
    negativities,
    negativity,
    steering_parameter,
)

CSV_HEADER = ("pair", "dx", "t", "h_x", "h_y", "h_z", "i_s", "negativity", "steerable")
DISCREPANCY_HEADER = ("pair", "dx", "t", "trace_defect", "max_entry_delta", "min_eigenvalue")
FORMATS = ("csv", "jsonl")

# Default surface and line-scan extents; all overridable.
SURFACE_DX = (0.01, 1.0, 100)
SURFACE_T = (0.0, 50.0, 200)
LINE_DX = (0.03, 0.05, 0.1)
LINE_T = (0.0, 300.0, 3001)


@dataclass(frozen=True)
class SweepConfig:
    pairs: tuple
    dx_values: tuple
    t_range: tuple
    output_format: str = "csv"
    output_path: str | None = None
    include_discrepancy: bool = False
    measured: int = 1

    def __post_init__(self):
        pairs = tuple(p if isinstance(p, NodePair) else NodePair(*p) for p in self.pairs)
        if not pairs:
            raise ConfigError("at least one node pair is required")
        dxs = tuple(float(v) for v in self.dx_values)
        if not dxs:
            raise ConfigError("dx grid is empty")
        if any(not math.isfinite(v) or v < 0 for v in dxs):
            raise ConfigError(f"dx values must be finite and >= 0: {dxs}")
        if len(self.t_range) != 3:
            raise ConfigError("t_range must be (t_min, t_max, t_steps)")
        t_min, t_max, steps = float(self.t_range[0]), float(self.t_range[1]), self.t_range[2]
        if int(steps) != steps or steps < 2:
            raise ConfigError(f"t_steps must be an integer >= 2, got {steps}")
        if not (math.isfinite(t_min) and math.isfinite(t_max)) or not t_min < t_max:
            raise ConfigError(f"need finite t_min < t_max, got {t_min}, {t_max}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"output format must be one of {FORMATS}")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "dx_values", dxs)
        object.__setattr__(self, "t_range", (t_min, t_max, int(steps)))

    @property
    def t_values(self) -> np.ndarray:
        return np.linspace(*self.t_range)

    @property
    def size(self) -> int:
        return len(self.pairs) * len(self.dx_values) * self.t_range[2]

    def metadata(self) -> dict:
        d = asdict(self)
        d["pairs"] = [str(p) for p in self.pairs]
        d["d_axis"] = "x"
        return d


@dataclass(frozen=True)
class SweepRecord:
    pair: NodePair
    dx: float
    t: float
    h_x: float
    h_y: float
    h_z: float
    i_s: float
    negativity: float
    steerable: bool

    def as_row(self) -> dict:
        row = asdict(self)
        row["pair"] = str(self.pair)
        return row


def dx_grid(dx_min: float, dx_max: float, steps: int) -> tuple:
    if int(steps) != steps or steps < 1:
        raise ConfigError(f"dx steps must be a positive integer, got {steps}")
    return tuple(np.linspace(dx_min, dx_max, int(steps)).tolist())


_PRESETS = {
    "fig2": (NodePair(2, 3), "surface"),
    "fig3": (NodePair(2, 3), "line"),
    "fig4": (NodePair(2, 4), "surface"),
    "fig5": (NodePair(2, 4), "line"),
}


def figure_preset(name: str, **overrides) -> SweepConfig:
    """Sweep configuration for a named figure preset.

    Surface presets cover ``dx`` in ``[0.01, 1]`` (100 values) against
    ``t`` in ``[0, 50]`` (200 values).  Line presets scan ``t`` in
    ``[0, 300]`` for ``dx`` in ``(0.03, 0.05, 0.1)``.
    """
    try:
        pair, kind = _PRESETS[name]
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; choose from {sorted(_PRESETS)}") from None
    if kind == "surface":
        kwargs = dict(dx_values=dx_grid(*SURFACE_DX), t_range=SURFACE_T)
    else:
        kwargs = dict(dx_values=LINE_DX, t_range=LINE_T)
    kwargs.update(overrides)
    return SweepConfig(pairs=(pair,), **kwargs)


def preset_names() -> list[str]:
    return sorted(_PRESETS)


def evaluate(pair: NodePair, dx: float, t: float, measured: int = 1, state=None) -> SweepRecord:
    """Compute every observable for one grid point.

    ``state`` may carry an already evolved network state for ``(dx, t)``.
    """
    if state is None:
        state = evolve_network(DmVector.along_x(dx), t)
    rho = qla.partial_trace(state, [pair.a, pair.b])
    sb = steering_parameter(rho, measured)
    return SweepRecord(
        pair=pair,
        dx=float(dx),
        t=float(t),
        h_x=sb[PauliAxis.X],
        h_y=sb[PauliAxis.Y],
        h_z=sb[PauliAxis.Z],
        i_s=sb.total,
        negativity=negativity(rho),
        steerable=sb.steerable,
    )


def _row_records(pair: NodePair, dx: float, ts: np.ndarray, measured: int) -> list[SweepRecord]:
    states = evolve_many(DmVector.along_x(dx), ts)
    rhos = qla.partial_trace(states, [pair.a, pair.b])
    h = conditional_entropies(rhos, measured)
    totals = h.sum(axis=-1)
    neg = negativities(rhos)
    steer = is_steerable(totals)
    return [
        SweepRecord(
            pair=pair,
            dx=float(dx),
            t=float(t),
            h_x=float(h[i, 0]),
            h_y=float(h[i, 1]),
            h_z=float(h[i, 2]),
            i_s=float(totals[i]),
            negativity=float(neg[i]),
            steerable=bool(steer[i]),
        )
        for i, t in enumerate(ts)
    ]


def iter_sweep(config: SweepConfig) -> Iterator[SweepRecord]:
    ts = config.t_values
    for pair in config.pairs:
        for dx in config.dx_values:
            yield from _row_records(pair, dx, ts, config.measured)


def run_sweep(config: SweepConfig) -> list[SweepRecord]:
    """Records in pair-major, then dx, then ascending t order."""
    return list(iter_sweep(config))


def discrepancies(config: SweepConfig) -> list[DiscrepancyReport]:
    """Closed-form reports for the pairs in ``config`` that have one."""
    supported = [p for p in config.pairs if p in (NodePair(2, 3), NodePair(2, 4))]
    return [
        discrepancy_report(pair, dx, float(t))
        for pair in supported
        for dx in config.dx_values
        for t in config.t_values
    ]


# -- serialization -----------------------------------------------------------


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_rows(rows: Iterable[dict], header: Sequence[str], fmt: str, stream: TextIO) -> int:
    n = 0
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(row[k]) for k in header])
            n += 1
    elif fmt == "jsonl":
        for row in rows:
            stream.write(json.dumps({k: row[k] for k in header}) + "\n")
            n += 1
    else:
        raise ConfigError(f"unknown format {fmt!r}")
    return n


def write_records(records: Iterable[SweepRecord], stream: TextIO, fmt: str = "csv") -> int:
    return write_rows((r.as_row() for r in records), CSV_HEADER, fmt, stream)


def write_discrepancies(reports: Iterable[DiscrepancyReport], stream: TextIO, fmt: str = "csv") -> int:
    return write_rows((r.as_row() for r in reports), DISCREPANCY_HEADER, fmt, stream)


def _parse_bool(text) -> bool:
    if isinstance(text, bool):
        return text
    if text == "true":
        return True
    if text == "false":
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _record_from_row(row: dict) -> SweepRecord:
    return SweepRecord(
        pair=NodePair.parse(row["pair"]),
        dx=float(row["dx"]),
        t=float(row["t"]),
        h_x=float(row["h_x"]),
        h_y=float(row["h_y"]),
        h_z=float(row["h_z"]),
        i_s=float(row["i_s"]),
        negativity=float(row["negativity"]),
        steerable=_parse_bool(row["steerable"]),
    )


def read_records(stream: TextIO, fmt: str = "csv") -> list[SweepRecord]:
    if fmt == "csv":
        reader = csv.DictReader(stream)
        if tuple(reader.fieldnames or ()) != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {reader.fieldnames}")
        return [_record_from_row(row) for row in reader]
    if fmt == "jsonl":
        return [_record_from_row(json.loads(line)) for line in stream if line.strip()]
    raise ConfigError(f"unknown format {fmt!r}")


def records_to_text(records: Iterable[SweepRecord], fmt: str = "csv") -> str:
    buf = io.StringIO()
    write_records(records, buf, fmt)
    return buf.getvalue()
