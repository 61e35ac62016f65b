"""Estimate pilots' utility weights from observed joint actions.

Builds weight-grid action ensembles at both fidelities, then compares the
high-fidelity-only MAP estimate with the estimate that also uses 1000
cheap low-fidelity encounters, and with the coupled-prior posterior.
Takes under a minute.
"""
import numpy as np

from pilotfusion import SCENARIOS, DecisionParams, RandomSource, ScenarioConfig, generate_dataset
from pilotfusion.bench import ExperimentConfig, build_models
from pilotfusion.modelbased import (CouplingPrior, WeightGrid, fit_map_hf, fit_map_mf,
                                    likelihood_table, weight_posterior)

params = DecisionParams(m_actions=50, m_obs=5)
config = ExperimentConfig(decision=params, ensemble_size=300, base_seed=3,
                          grid=WeightGrid.from_range(0.85, 0.95, 0.01))
models = build_models(config)

src = RandomSource(11)
for name in ("identical", "large-diff"):
    truth = SCENARIOS[name]
    high = generate_dataset(10, "train", "high", truth, ScenarioConfig(), params, src.spawn(name, "high"))
    low = generate_dataset(1000, "train", "low", truth, ScenarioConfig(), params, src.spawn(name, "low"))
    print(f"{name}: true high-fidelity weights {tuple(truth.w_high)}, low {tuple(truth.w_low)}")
    w = fit_map_hf(high, models.high)
    print(f"  MAP from 10 high-fidelity encounters      ({w.w1:.2f}, {w.w2:.2f})")
    w = fit_map_mf(low, high, models.low, models.high)
    print(f"  MAP pooling 1000 low-fidelity encounters  ({w.w1:.2f}, {w.w2:.2f})")
    post = weight_posterior(likelihood_table(high, models.high), likelihood_table(low, models.low),
                            CouplingPrior.from_truth(truth))
    j = int(np.argmax(post.probs))
    m = post.mean_weights()
    mode = post.grid.weights(j)
    print(f"  coupled posterior mode ({mode.w1:.2f}, {mode.w2:.2f}) "
          f"(p={post.probs[j]:.2f}), mean ({m.w1:.3f}, {m.w2:.3f})")
