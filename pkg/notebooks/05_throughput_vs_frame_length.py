# %% [markdown]
# # Throughput against frame length (150 vehicles)
#
# Below 78 ms there is no room left for a contention phase; above the
# critical 81.25 ms RTS-TDMA has more mini-slots than CSA has slots.

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from rtstdma.harness import example2_spec, run_sweep
from rtstdma.protocol import CSA, RTS_TDMA

FRAMES = 100
report = run_sweep(example2_spec([float(t) for t in range(75, 121, 1)], frames=FRAMES))
for r in report.rows:
    print(f"T_F={r.sweep_value:5.1f} {r.scheme:8s} S={r.mean_throughput:7.2f} feasible={r.feasible}")

# %%
fig, ax = plt.subplots()
for scheme in (RTS_TDMA, CSA):
    rows = [r for r in report.rows_for(scheme) if r.feasible]
    ax.plot([r.sweep_value for r in rows], [r.mean_throughput for r in rows], marker=".", label=scheme)
ax.axvline(81.25, ls="--", c="grey")
ax.set_xlabel("T_F (ms)")
ax.set_ylabel("successful safety packets per frame")
ax.legend()
fig.savefig("throughput_vs_tframe.png", dpi=120)
