# %% [markdown]
# # When does RTS-TDMA beat CSA?
#
# RTS-TDMA spends part of the frame on short request mini-slots and the
# feedback packet.  It wins while its contention phase has more mini-slots
# than CSA has full slots, i.e. while N_c / N_I > 1.

# %%
from rtstdma.analytic import (
    analytic_report,
    critical_load,
    critical_mmax,
    critical_tframe,
    slot_ratio,
)
from rtstdma.protocol import example_config

tau_i = tau_t = 0.5
tau_c = 0.02

print("critical vehicle count at T_F = 100 ms:", critical_mmax(100, tau_i, tau_t, tau_c))
print("critical frame length for 150 vehicles:", critical_tframe(150, tau_i, tau_t, tau_c), "ms")
print("critical load M_max / N*_I:", critical_load(tau_t, tau_c))

# %% [markdown]
# The ratio falls as more CTP slots are reserved.

# %%
for n_t in (0, 50, 100, 150, 184, 185, 192, 193):
    cfg = example_config(n_t)
    print(f"N_t={n_t:3d}  N_c={cfg.n_c:5d}  N_I={cfg.n_i}  ratio={slot_ratio(cfg):7.3f}")

# %% [markdown]
# Everything at once, as printed by `rtstdma analytic`:

# %%
for key, value in analytic_report(100.0, 150, tau_i, tau_t, tau_c).items():
    print(f"{key}={value}")
