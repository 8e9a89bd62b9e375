"""Built-in invariant suite run by the ``check`` subcommand."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import qla
from .netstate import DmVector, NodePair, bell_state, channel_state, evolve_network, network_unitary
from .paperforms import discrepancy_report
from .sweep import SweepConfig, evaluate, figure_preset, iter_sweep
from .witness import STEERING_BOUND, STEERING_TOL, negativity, steering_parameter

ALL_PAIRS = tuple(NodePair(a, b) for a in range(1, 5) for b in range(a + 1, 5))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def _dynamics_grid(n_dx: int = 10, n_t: int = 25):
    for dx in np.linspace(1.0 / n_dx, 1.0, n_dx):
        for t in np.linspace(0.0, math.pi / dx, n_t):
            yield float(dx), float(t)


def check_dynamics() -> CheckResult:
    worst = dict(unitarity=0.0, trace=0.0, neg_eig=0.0, purity=0.0)
    for dx, t in _dynamics_grid():
        u = network_unitary(DmVector.along_x(dx), t)
        rho = evolve_network(DmVector.along_x(dx), t).matrix
        worst["unitarity"] = max(worst["unitarity"], np.max(np.abs(u @ u.conj().T - np.eye(16))))
        worst["trace"] = max(worst["trace"], abs(np.trace(rho) - 1))
        worst["neg_eig"] = max(worst["neg_eig"], -np.linalg.eigvalsh(rho)[0])
        worst["purity"] = max(worst["purity"], abs(qla.purity(rho) - 1))
    ok = (
        worst["unitarity"] <= 1e-10
        and worst["trace"] <= 1e-10
        and worst["neg_eig"] <= 1e-9
        and worst["purity"] <= 1e-9
    )
    return CheckResult("dynamics", ok, ", ".join(f"{k}={v:.1e}" for k, v in worst.items()))


def check_partial_trace_oracle(n_random: int = 50, seed: int = 7) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_random):
        rho = qla.random_density_matrix(4, rng)
        for keep in ([1, 2], [2, 3], [2, 4], [1, 3], [1, 4], [3], [1, 2, 4]):
            a = qla.partial_trace(rho, keep)
            b = qla.partial_trace_projector(rho, keep)
            worst = max(worst, np.max(np.abs(a - b)))
    for dx, t in _dynamics_grid(5, 10):
        state = evolve_network(DmVector.along_x(dx), t)
        for p in ALL_PAIRS:
            a = qla.partial_trace(state, [p.a, p.b]).matrix
            b = qla.partial_trace_projector(state, [p.a, p.b]).matrix
            worst = max(worst, np.max(np.abs(a - b)))
    return CheckResult("partial-trace oracle", worst <= 1e-12, f"max delta {worst:.1e}")


def check_fixed_points() -> CheckResult:
    phi = bell_state()
    mixed = np.eye(4) / 4
    values = {
        "I_s(phi+)": (steering_parameter(phi).total, 0.0),
        "I_s(I/4)": (steering_parameter(mixed).total, 3.0),
        "N(phi+)": (negativity(phi), 1.0),
        "N(I/4)": (negativity(mixed), 0.0),
    }
    ok = all(abs(v - want) <= 1e-9 for v, want in values.values())
    for dx, t in _dynamics_grid(5, 10):
        r = evaluate(NodePair(1, 4), dx, t)
        ok &= abs(r.i_s - 3) <= 1e-9 and r.negativity <= 1e-9
    return CheckResult("fixed points", ok, ", ".join(f"{k}={v:.3g}" for k, (v, _) in values.items()))


def check_record_invariants() -> CheckResult:
    bad = 0
    n = 0
    for name in ("fig3", "fig5"):
        cfg = figure_preset(name, t_range=(0.0, 300.0, 301))
        for r in iter_sweep(cfg):
            n += 1
            if abs(r.i_s - (r.h_x + r.h_y + r.h_z)) > 1e-12:
                bad += 1
            if r.steerable != (r.i_s < STEERING_BOUND - STEERING_TOL):
                bad += 1
            if not -1e-9 <= r.i_s <= 3 + 1e-9:
                bad += 1
            if any(not -1e-9 <= h <= 1 + 1e-9 for h in (r.h_x, r.h_y, r.h_z)):
                bad += 1
            if r.steerable and r.negativity <= 1e-9:
                bad += 1
    return CheckResult("record invariants", bad == 0, f"{bad} violations in {n} records")


def check_steerable_implies_entangled() -> CheckResult:
    cfg = SweepConfig(pairs=ALL_PAIRS, dx_values=(0.05, 0.3, 1.0), t_range=(0.0, 20.0, 81))
    bad = sum(1 for r in iter_sweep(cfg) if r.steerable and r.negativity <= 1e-9)
    return CheckResult("steerable => entangled", bad == 0, f"{bad} of {cfg.size} records violate")


def check_periodicity() -> CheckResult:
    worst = 0.0
    for pair in (NodePair(2, 3), NodePair(2, 4), NodePair(1, 2)):
        for dx in (0.03, 0.05, 0.1):
            period = math.pi / dx
            for t in np.linspace(0.0, 300.0, 31):
                a, b = evaluate(pair, dx, float(t)), evaluate(pair, dx, float(t) + period)
                for f in ("h_x", "h_y", "h_z", "i_s", "negativity"):
                    worst = max(worst, abs(getattr(a, f) - getattr(b, f)))
    return CheckResult("periodicity", worst <= 1e-8, f"max delta {worst:.1e}")


def check_mirror_symmetry() -> CheckResult:
    worst = 0.0
    for d in ((1.0, 0, 0), (0, 1.0, 0), (0, 0, 1.0)):
        for t in np.linspace(0.0, 3.0, 13):
            a = np.linalg.eigvalsh(channel_state(NodePair(1, 3), d, t).matrix)
            b = np.linalg.eigvalsh(channel_state(NodePair(2, 4), d, t).matrix)
            worst = max(worst, np.max(np.abs(a - b)))
    return CheckResult("mirror symmetry 1-3/2-4", worst <= 1e-9, f"max delta {worst:.1e}")


def check_closed_form_ledger() -> CheckResult:
    worst = 0.0
    for dx, t in _dynamics_grid(5, 10):
        rep = discrepancy_report(NodePair(2, 4), dx, t)
        worst = max(worst, abs(rep.trace_defect - math.sin(2 * dx * t) ** 2))
        discrepancy_report(NodePair(2, 3), dx, t)
    return CheckResult("closed-form trace defect", worst <= 1e-12, f"max delta {worst:.1e}")


SUITE: tuple[Callable[[], CheckResult], ...] = (
    check_dynamics,
    check_partial_trace_oracle,
    check_fixed_points,
    check_record_invariants,
    check_steerable_implies_entangled,
    check_periodicity,
    check_mirror_symmetry,
    check_closed_form_ledger,
)


def run_checks() -> list[CheckResult]:
    return [check() for check in SUITE]
