# %% [markdown]
# # Slips and corrections
# With `p_slip > 0` a fill is off by one. The slipped cell's own triple is then
# fully known and violated, so the next appraisal is an error and the agent
# erases its most recent culprit.

# %%
from collections import Counter

from cascade_affect import EpisodeConfig, Grid, Puzzle, run_episode

puzzle = Puzzle(Grid.from_values([[2, 7, 1], [None, None], [None]]))
config = EpisodeConfig(puzzle, p_slip=0.5)

result, trace = run_episode(config, seed=11)
for e in trace:
    print(e.t, e.appraisal, e.action, e.move and (tuple(e.move.target), e.move.value), "SLIP" if e.slipped else "")

# %%
outcomes = Counter()
slips = corrections = 0
for seed in range(200):
    r, _ = run_episode(config, seed)
    outcomes[r.outcome.value] += 1
    slips += r.slips
    corrections += r.corrections
print(outcomes, slips, corrections)
