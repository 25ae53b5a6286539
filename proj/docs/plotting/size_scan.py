"""Gap and OSEE against n from a size-scan sweep.csv."""
import sys

import matplotlib.pyplot as plt
import pandas as pd

df = pd.read_csv(sys.argv[1] if len(sys.argv) > 1 else "out/size_scan/sweep.csv")
df = df[df.status == "ok"]
fig, (a, b) = plt.subplots(1, 2, figsize=(8, 3.5))
a.loglog(df.n, df.min_re_beta, "o-")
a.set_xlabel("n")
a.set_ylabel(r"min Re $\beta$")
if "entropy" in df:
    b.plot(df.n, df.entropy, "o-")
b.set_xlabel("n")
b.set_ylabel("S (bits)")
fig.tight_layout()
fig.savefig(sys.argv[2] if len(sys.argv) > 2 else "size_scan.png", dpi=150)
