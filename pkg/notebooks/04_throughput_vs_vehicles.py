# %% [markdown]
# # Throughput against the number of vehicles (100 ms frame)
#
# N_t = M = M_max at every point.  Beyond 192 vehicles the CTP and feedback
# phase no longer fit in the frame and RTS-TDMA is marked infeasible.

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from rtstdma.harness import example1_spec, report_to_csv, run_sweep
from rtstdma.protocol import CSA, RTS_TDMA

FRAMES = 100  # raise to 500+ for smoother curves
report = run_sweep(example1_spec(range(20, 201, 10), frames=FRAMES))
print(report_to_csv(report))

# %%
fig, ax = plt.subplots()
for scheme in (RTS_TDMA, CSA):
    rows = [r for r in report.rows_for(scheme) if r.feasible]
    ax.errorbar([r.sweep_value for r in rows], [r.mean_throughput for r in rows],
                yerr=[2 * r.std_error for r in rows], marker="o", label=scheme)
ax.axvline(184.615, ls="--", c="grey")
ax.set_xlabel("M_max")
ax.set_ylabel("successful safety packets per frame")
ax.legend()
fig.savefig("throughput_vs_mmax.png", dpi=120)
