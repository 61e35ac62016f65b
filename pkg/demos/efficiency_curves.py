"""A small predictive-efficiency sweep, written to ./efficiency-demo/.

Efficiency is the ground-truth model's test error divided by a method's
test error, so 1 means "as good as knowing the true weights".  The full
experiment is ``pilotfusion sweep``; this one runs in a couple of minutes.
"""
import sys

from pilotfusion.bench import ExperimentConfig, run_sweep
from pilotfusion.encounter import DecisionParams
from pilotfusion.modelbased import WeightGrid

out_dir = sys.argv[1] if len(sys.argv) > 1 else "efficiency-demo"
config = ExperimentConfig(
    n_high_sweep=(5, 20, 50),
    n_low=500,
    trials=5,
    n_test=50,
    base_seed=1,
    n_samples=5,
    ensemble_size=200,
    decision=DecisionParams(m_actions=50, m_obs=5),
    grid=WeightGrid.from_range(0.85, 0.95, 0.01),
)
result = run_sweep(config, out_dir=out_dir)
for c in result.curves:
    print(f"{c.method:>8}  n_high={c.n_high:<3}  {c.mean_efficiency:.3f} ± {c.stderr:.3f}")
print(f"\nraw.csv, curves.csv and curves.svg are in {out_dir}/")
