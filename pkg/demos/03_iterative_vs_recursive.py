# %% [markdown]
# # Same listing, no recursion
# The iterative generator keeps one sign per level instead of a call stack and
# produces the identical sequence. Both can be streamed lazily.

# %%
import itertools

from foldgray import GenConfig, iter_iterative, listing_iterative, listing_recursive

for n in range(1, 10):
    for kind in ("stamp", "semi"):
        cfg = GenConfig(n, kind)
        assert listing_iterative(cfg) == listing_recursive(cfg)
print("identical for n <= 9")

# %%
# first piles of a listing too large to hold comfortably
for p in itertools.islice(iter_iterative(GenConfig(16, "stamp")), 8):
    print(p)
