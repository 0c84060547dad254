# %% [markdown]
# # Successive interference cancellation, step by step
#
# Five vehicles share eight mini-slots.  x sends three copies, the other four
# send two; v and w happen to pick the same pair of slots.
#
# | vehicle | id | mini-slots |
# |---|---|---|
# | x | 1 | 3, 5, 6 |
# | y | 2 | 1, 3 |
# | z | 3 | 1, 4 |
# | v | 4 | 6, 8 |
# | w | 5 | 6, 8 |

# %%
from rtstdma.protocol import assign_slots, example_config, fig3_instance, run_frame_rts
from rtstdma.degree_dist import PAPER_DISTRIBUTION
from rtstdma.sic import format_trace, peel

cap = fig3_instance()
print(format_trace(cap))

# %% [markdown]
# Pass 1 reads z from slot 4 and x from slot 5, cancelling their other
# copies.  That leaves y alone in slot 1 for pass 2.  v and w stay stuck
# together in slots 6 and 8.

# %%
outcome = peel(cap)
print("extraction order:", outcome.extracted)
print("undecoded:", outcome.undecoded, "residual slots:", outcome.residual_slots)

# %% [markdown]
# The RSU hands CTP slot k to the k-th extracted vehicle.

# %%
for k, vehicle in enumerate(assign_slots(outcome, n_t=5), start=1):
    print(f"CTP slot {k} -> vehicle {vehicle}")

frame = run_frame_rts(5, example_config(5), PAPER_DISTRIBUTION, cap=cap)
print("safety packets delivered this frame:", frame.successes)
