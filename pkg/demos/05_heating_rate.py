"""Golden-rule heating rate of an n-multipolar drive.

The drive spectrum near zero frequency goes like x^n, so the absorption rate is
an integral of x^(2n) against an exponentially small tail of the many-body
spectral function. The result falls off as Omega^-(2n+1).
"""

import numpy as np

from rmdsim.analysis import FGRParams, fgr_analytic, fgr_rate, mode_sum_rate

omegas = np.geomspace(1.0, 100.0, 7)
for n in range(4):
    rates = [fgr_rate(FGRParams(n, om)) for om in omegas]
    slope = np.polyfit(np.log(omegas), np.log(rates), 1)[0]
    err = max(abs(r - fgr_analytic(FGRParams(n, om))) / r for r, om in zip(rates, omegas))
    print(f"n={n}: d ln(rate) / d ln(Omega) = {slope:.6f}, worst relative error vs closed form {err:.1e}")

p = FGRParams(1, 1.0)
print("\nsum over discrete Floquet modes approaches the integral:")
for h in (0.4, 0.1, 0.025):
    print(f"  spacing {h}: {mode_sum_rate(p, h):.5f} (integral {fgr_rate(p):.5f})")
