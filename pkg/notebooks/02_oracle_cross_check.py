# %% [markdown]
# # Brute-force sieve against the closed form
#
# The sieve decides 1, 2, 3, ... in order straight from the defining rule,
# using a subset-sum DP over the members and non-members found so far.

# %%
import numpy as np

from selfsum import build_certificate, compute_q, sieve_to_limit, sieve_until_run
from selfsum.verify import cross_validate

state = sieve_to_limit(4, 40)
print("members    ", state.members().intervals)
print("non-members", state.non_members().intervals)
print("trailing run (start, length):", state.trailing_run, " z =", state.z)

# %% [markdown]
# Membership as a 0/1 strip for n = 3 up to 40; the two gaps are visible.

# %%
flags = sieve_to_limit(3, 40).membership[1:].astype(np.int8)
print("".join(map(str, flags)))

# %%
for n in range(2, 9):
    a, b = sieve_until_run(n), compute_q(n)
    print(n, a.q == b.q, a.all_members_from == b.all_members_from, b.method.value)

# %% [markdown]
# `cross_validate` runs the sieve one full period z past the run onset and
# reports the first disagreement, if any.

# %%
for n in (2, 4, 7):
    r = cross_validate(n)
    print(n, "agrees" if r.oracle_agrees else f"diverges at {r.first_divergence}",
          {k: f"{v * 1e3:.2f} ms" for k, v in r.timings.items()})
