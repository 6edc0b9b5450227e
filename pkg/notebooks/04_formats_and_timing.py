# %% [markdown]
# # Output formats and timing
#
# The same renderings are available from the `selfsum` command line.

# %%
from selfsum import compute_q
from selfsum.cli import run_bench, run_compute, run_member
from selfsum.formats import OutputDocument

print(run_compute(4, "list"), end="")
print(run_compute(10, "intervals"), end="")
print(run_compute(4, "bfile").splitlines()[:4])

doc = OutputDocument.from_result(compute_q(10**6))
print(doc.to_json())
assert OutputDocument.from_json(doc.to_json()) == doc

# %%
print(run_member(4, 33))
print(run_member(4, 20))
print(run_member(4, 10**9))

# %% [markdown]
# compute_q takes about the same time for n = 10 and n = 100000; the sieve
# column shows what the brute-force route costs even at n <= 8.

# %%
print(run_bench([2, 4, 8, 10, 1000, 100000], 200))
