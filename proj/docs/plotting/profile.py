"""|C(r)| on log-log axes from one or more profile.csv files."""
import sys

import matplotlib.pyplot as plt
import pandas as pd

fig, ax = plt.subplots(figsize=(4.5, 3.5))
for path in sys.argv[1:] or ["out/solve/profile.csv"]:
    df = pd.read_csv(path)
    ax.loglog(df.r, df.c.abs(), ".-", label=path)
ax.set_xlabel("r")
ax.set_ylabel("|C(r)|")
ax.legend(fontsize=6)
fig.tight_layout()
fig.savefig("profile.png", dpi=150)
