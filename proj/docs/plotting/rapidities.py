"""Scatter of rapidities (Re beta, Im beta) from `xyness solve --out DIR`."""
import sys

import matplotlib.pyplot as plt
import pandas as pd

df = pd.read_csv(sys.argv[1] if len(sys.argv) > 1 else "out/solve/rapidities.csv")
fig, ax = plt.subplots(figsize=(4, 5))
ax.plot(df.re_beta, df.im_beta, ".", ms=3)
ax.set_xscale("log")
ax.set_xlabel(r"Re $\beta$")
ax.set_ylabel(r"Im $\beta$")
fig.tight_layout()
fig.savefig(sys.argv[2] if len(sys.argv) > 2 else "rapidities.png", dpi=150)
