# %% [markdown]
# # Batch experiment
# Fresh puzzles per episode, seeds derived from one master seed. The mean
# emotion trajectory averages only episodes still running at each step.

# %%
import numpy as np

from cascade_affect import run_batch
from cascade_affect.batch import trajectory
from cascade_affect.config import GenerateSpec, SimConfig

config = SimConfig(
    generate=GenerateSpec(rows=5, require_subtraction=True),
    p_slip=0.15,
    episodes=300,
    master_seed=2026,
)
summary, results, traces = run_batch(config, jobs=4)
print(summary)

# %%
traj = np.array(trajectory(traces))
print("step  mean_valence  mean_frustration  n_active")
for step, v, f, n in traj[::3]:
    print(f"{int(step):4d}  {v:+12.4f}  {f:16.4f}  {int(n):8d}")

# %% [markdown]
# Abandoned episodes versus solved ones: how many plan changes did each take?

# %%
steps = np.array([r.steps for r in results])
changes = np.array([r.plan_changes for r in results])
solved = np.array([r.outcome.value == "solved" for r in results])
print("solved:", steps[solved].mean(), changes[solved].mean())
print("other: ", steps[~solved].mean() if (~solved).any() else None, changes[~solved].mean() if (~solved).any() else None)
