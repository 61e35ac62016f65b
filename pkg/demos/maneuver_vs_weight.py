"""How hard do pilots turn as they care more about separation?

Simulates the same 300 encounters at a handful of utility weights and
prints the mean absolute heading change of Player 1.  Low weights mean the
turn penalty dominates and pilots barely deviate; high weights push them to
the candidate bound.
"""
import numpy as np

from pilotfusion import DecisionParams, RandomSource, ScenarioConfig
from pilotfusion.encounter import simulate_encounters
from pilotfusion.scenarios import generate_geometries

N = 300
params = DecisionParams()
src = RandomSource(7)
s1, s2, _ = generate_geometries(N, "train", ScenarioConfig(), src.spawn("geometry"))
sources = [src.spawn("decision", i) for i in range(N)]

print(" weight   mean |a1|   share |a1| > 0.5 rad")
for w in (0.80, 0.85, 0.87, 0.88, 0.89, 0.90, 0.91, 0.93, 0.98):
    a = simulate_encounters(s1, s2, (w, w), "high", params, sources)
    turn = np.abs(a[:, 0])
    print(f"  {w:.2f}     {turn.mean():.3f}       {np.mean(turn > 0.5):.2f}")

# the same draws at both fidelities: only the belief noise differs
lo = simulate_encounters(s1, s2, (0.89, 0.90), "low", params, sources)
hi = simulate_encounters(s1, s2, (0.89, 0.90), "high", params, sources)
print(f"\nlow vs high fidelity at (0.89, 0.90): mean |a1| {np.abs(lo[:, 0]).mean():.3f} "
      f"vs {np.abs(hi[:, 0]).mean():.3f}")
