# %% [markdown]
# # One episode of the appraise / feel / cope / act loop
# The agent starts with the additive reading, hits an impasse, switches to
# the full reading and fills one cell per step.

# %%
from cascade_affect import EpisodeConfig, Grid, Puzzle, run_episode

puzzle = Puzzle(Grid.from_values([[1, None, 3], [None, 5], [None]]))
result, trace = run_episode(EpisodeConfig(puzzle), seed=0)

for event in trace:
    move = f"{tuple(event.move.target)}={event.move.value} via {event.move.rule.value}" if event.move else ""
    print(f"t={event.t} {event.plan:9s} {event.appraisal:9s} {event.action:13s} "
          f"v={event.valence:+.4f} f={event.frustration:.2f} {move}")

print(result.outcome.value, result.final_emotion)

# %% [markdown]
# With nothing given, no reading licenses any move: every appraisal is an
# impasse, plan changes pile up frustration and the agent gives up.

# %%
blank = Puzzle(Grid.from_values([[None, None], [None]]))
result, trace = run_episode(EpisodeConfig(blank), seed=0)
print([(e.action, e.frustration) for e in trace], result.outcome.value)
