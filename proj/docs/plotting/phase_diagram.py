"""Heatmap of C_res over (gamma, h) from a two-axis sweep.csv, with h_c = 1 - gamma^2."""
import sys

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

df = pd.read_csv(sys.argv[1] if len(sys.argv) > 1 else "out/phase_diagram/sweep.csv")
df = df[df.status == "ok"]
grid = df.pivot(index="h", columns="gamma", values="c_res")
z = np.log10(np.clip(np.abs(grid.values), 1e-18, None))

fig, ax = plt.subplots(figsize=(5, 4))
mesh = ax.pcolormesh(grid.columns, grid.index, z, shading="nearest", cmap="viridis")
g = np.linspace(0, 1, 200)
ax.plot(g, 1 - g**2, "r-", lw=1.5)
ax.set_xlabel(r"$\gamma$")
ax.set_ylabel(r"$h$")
fig.colorbar(mesh, label=r"$\log_{10}|C_{\rm res}|$")
fig.tight_layout()
fig.savefig(sys.argv[2] if len(sys.argv) > 2 else "phase_diagram.png", dpi=150)
