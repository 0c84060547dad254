# %% [markdown]
# # Repetition-rate distribution
#
# Every contending vehicle draws how many copies of its request to send.
# The law used throughout is Lambda(x) = 0.5 x^2 + 0.28 x^3 + 0.22 x^8.

# %%
import numpy as np

from rtstdma import PAPER_DISTRIBUTION, mean_degree, parse_distribution, sample_degrees

print("law:", PAPER_DISTRIBUTION)
print("average copies per vehicle:", mean_degree(PAPER_DISTRIBUTION))

# %% [markdown]
# Draw 100 000 degrees and compare the empirical frequencies with the law.

# %%
rng = np.random.default_rng(0)
draws = sample_degrees(PAPER_DISTRIBUTION, rng, 100_000)
for degree, p in PAPER_DISTRIBUTION.entries:
    print(f"l={degree}: target {p:.3f}  observed {np.mean(draws == degree):.4f}")

# %% [markdown]
# Config files use the same textual form.  A law that does not sum to one is
# rejected with the reason attached.

# %%
try:
    parse_distribution("2:0.6,3:0.6")
except ValueError as exc:
    print("rejected:", exc)
