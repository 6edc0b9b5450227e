# %% [markdown]
# # Certificate sweep over n = 3..10000
#
# Each report checks the certificate, |Q(n)| = n^2 - 1 and
# max Q(n) = n(n-1)(n+2)/2, and whether the surplus run length grew.

# %%
import numpy as np

from selfsum import sweep_certificates

reports = list(sweep_certificates(3, 10000))
print("reports:", len(reports))
print("all passed:", all(r.passed for r in reports))

# %% [markdown]
# The surplus (run length minus z) grows roughly like n^4 / 2.

# %%
n = np.array([r.n for r in reports], dtype=float)
slack = np.array([float(r.slack) for r in reports])
for k in (3, 10, 100, 1000, 10000):
    i = k - 3
    print(f"n={k:>6}  surplus={reports[i].slack:>20}  surplus/(n^4/2)={slack[i] / (n[i] ** 4 / 2):.4f}")

# %% [markdown]
# Large n work as well, up to the 128-bit limit.

# %%
from selfsum import NatOverflowError, build_certificate

print(build_certificate(10**9).run_length)
try:
    build_certificate(6 * 10**9)
except NatOverflowError as exc:
    print("overflow:", exc)
