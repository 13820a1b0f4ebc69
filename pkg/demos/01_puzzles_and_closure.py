# %% [markdown]
# # Cascade puzzles
# Every cell below the top row is the sum of the two cells above it.
# The generator draws a top row, completes it, then blanks cells for as long
# as local rules can still recover them.

# %%
from cascade_affect import (
    Rule, SplitMix64, brute_force_completions, builtin_plans, closure,
    applicable_moves, generate_puzzle,
)

puzzle = generate_puzzle(rows=4, vmax=9, require_subtraction=True, rng=SplitMix64(7))
print(puzzle.grid)

# %% [markdown]
# Reading the instructions literally (additive rule only) stalls on this
# instance; allowing subtraction completes it.

# %%
print(closure(puzzle.grid, {Rule.R1}))
print()
solved = closure(puzzle.grid, {Rule.R1, Rule.R2, Rule.R3})
print(solved)

# %% [markdown]
# The brute-force oracle enumerates every top row in [0, vmax] and keeps the
# ones that agree with the givens. For generated puzzles there is exactly one.

# %%
completions = brute_force_completions(puzzle, puzzle.vmax)
print(len(completions), completions[0].values() == solved.values())

# %% [markdown]
# What each plan would do next from the starting grid:

# %%
for name, plan in builtin_plans().items():
    print(name, applicable_moves(puzzle.grid, plan)[:2])
