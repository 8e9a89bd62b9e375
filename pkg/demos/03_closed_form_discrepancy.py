"""
Closed-form channel matrices versus the exact marginals
=======================================================

The printed closed forms for rho_23 and rho_24 do not have unit trace and
rho_24 is not positive.  The discrepancy report quantifies this against
the exact partial trace of the evolved network.
"""

import math

import numpy as np

from dmsteer.netstate import NodePair
from dmsteer.paperforms import discrepancy_report, paper_rho24

dx = 1.0
print(f"{'pair':>4} {'t':>6} {'|tr-1|':>8} {'max delta':>10} {'min eig':>8}")
for pair in (NodePair(2, 3), NodePair(2, 4)):
    for t in np.linspace(0, math.pi / 2, 5):
        rep = discrepancy_report(pair, dx, t)
        print(f"{str(pair):>4} {t:6.3f} {rep.trace_defect:8.4f} {rep.max_entry_delta:10.4f} {rep.min_eigenvalue:8.4f}")

# %%
# For rho_24 the trace defect is exactly sin^2(2 D t).
t = 0.3
print(np.trace(paper_rho24(dx, t)).real - 1, math.sin(2 * dx * t) ** 2)
