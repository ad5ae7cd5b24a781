"""Power-law scaling of the imbalance lifetime with drive frequency.

For each multipolar order n the lifetime is fitted at five periods and a
straight line through (ln 1/T, ln tau) gives the exponent alpha, expected to
approach 2n + 1. Uses twenty sequences per point; about a minute.
"""

from pathlib import Path

from rmdsim.runner import load_config, scan_frequencies

here = Path(__file__).parent
cfg = load_config(here / "configs" / "eight_qubit_scan.json")
rows = scan_frequencies(cfg, here / cfg.output)
for row in rows:
    taus = ", ".join(f"{t:.0f}" for t in row["tau_ns"])
    print(f"n={row['n']}: alpha = {row['alpha']:.2f} +- {row['stderr']:.2f} "
          f"(theory {2 * row['n'] + 1}); tau_I [ns] = {taus}")
