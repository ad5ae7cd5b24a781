"""Prethermal lifetimes on two rows of four qubits under 1-RMD.

Runs ten drive sequences at T = 4 and 8 ns with the exact engine, writes the
ensemble CSVs and fits the imbalance decay and the single-qubit entropy growth.
Halving the period stretches both lifetimes by a large factor. Takes about ten
seconds.
"""

from pathlib import Path

from rmdsim.runner import fit_ensemble, load_config, run_experiment

here = Path(__file__).parent
cfg = load_config(here / "configs" / "eight_qubit_lifetimes.json")
result = run_experiment(cfg, here / cfg.output)
print(f"ensembles written to {result.out_dir}")

taus = {}
for T in cfg.T_ns:
    fits = fit_ensemble(result.ensembles[(1, T)], cfg, {"q": 1})
    taus[T] = {k: v.params["tau"] for k, v in fits.items()}
    print(f"T = {T:g} ns: tau_I = {taus[T]['imbalance']:.0f} ns, tau_S = {taus[T]['S_q']:.0f} ns, "
          f"S_M = {fits['S_q'].params['S_M']:.3f}")

print(f"tau_I(4)/tau_I(8) = {taus[4.0]['imbalance'] / taus[8.0]['imbalance']:.2f}")
print(f"tau_S(4)/tau_S(8) = {taus[4.0]['S_q'] / taus[8.0]['S_q']:.2f}")
