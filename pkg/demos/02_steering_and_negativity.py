"""
Steering parameter and negativity along a time line
===================================================

Sum of the three Pauli conditional entropies (``I_s``, steerable below 2
bits) and the negativity for several channels over one period.
Set ``PLOT = True`` to draw the curves with matplotlib.
"""

import math

import numpy as np

from dmsteer import SweepConfig, run_sweep

PLOT = False
dx = 0.1
cfg = SweepConfig(pairs=[(1, 2), (2, 3), (2, 4)], dx_values=[dx], t_range=(0.0, math.pi / dx, 9))

print(f"{'pair':>5} {'t':>7} {'h_x':>6} {'h_y':>6} {'h_z':>6} {'I_s':>6} {'N':>6} steerable")
for r in run_sweep(cfg):
    print(f"{str(r.pair):>5} {r.t:7.3f} {r.h_x:6.3f} {r.h_y:6.3f} {r.h_z:6.3f} {r.i_s:6.3f} {r.negativity:6.3f} {r.steerable}")

# %%
# The original Bell pair (1,2) loses entanglement and steerability together,
# the indirect channel (2,4) gets down to I_s = 2 while remaining separable,
# and (2,3) never moves away from the maximally mixed value I_s = 3.
if PLOT:
    import matplotlib.pyplot as plt

    fine = run_sweep(SweepConfig(pairs=[(1, 2), (2, 3), (2, 4)], dx_values=[dx], t_range=(0.0, 2 * math.pi / dx, 400)))
    fig, (ax1, ax2) = plt.subplots(2, 1, sharex=True)
    for pair in ("1-2", "2-3", "2-4"):
        rows = [r for r in fine if str(r.pair) == pair]
        ts = np.array([r.t for r in rows])
        ax1.plot(ts, [r.i_s for r in rows], label=pair)
        ax2.plot(ts, [r.negativity for r in rows], label=pair)
    ax1.axhline(2, color="k", lw=0.5)
    ax1.set_ylabel("I_s (bits)")
    ax2.set_ylabel("negativity")
    ax2.set_xlabel("t")
    ax1.legend()
    plt.show()
