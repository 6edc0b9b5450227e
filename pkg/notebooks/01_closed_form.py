# %% [markdown]
# # Q(n) in constant arithmetic
#
# P(n) is the set of naturals that are sums of n distinct naturals, all
# members or all non-members.  Its complement Q(n) is finite.  This script
# walks through the landmarks for n = 4 and then prints Q(n) for a few n.

# %%
from selfsum import build_certificate, compute_q, verify_certificate

c = build_certificate(4)
for name, value in c.as_dict().items():
    print(f"{name:>10} = {value}")

# %% [markdown]
# Two runs of members start after the second gap: mixed sums of non-members
# cover `U1..T_high` and sums of members cover `U3..U4`.  They overlap, and
# the merged run is far longer than `z`.

# %%
print("runs merge:", c.runs_merge)
print("merged run long enough:", c.long_enough, f"({c.run_length} >= {c.z})")
print("certificate verifies:", verify_certificate(c))

# %%
for n in (3, 4, 5, 10, 40):
    r = compute_q(n)
    print(n, r.q.intervals, "all members from", r.all_members_from)

# %% [markdown]
# n = 2 is the exception: the merged run has length 1 but z = 3, so the
# certificate fails and `compute_q` sieves instead.

# %%
r2 = compute_q(2)
print(r2.method.value, list(r2.q), r2.all_members_from)
