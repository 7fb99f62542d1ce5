# %% [markdown]
# # Rotation Gray code for stamp foldings
# Generate every stamp folding of 5 stamps and show the stamp rotation that
# turns each pile into the next one, including the wrap from last to first.

# %%
from foldgray import GenConfig, find_stamp_rotation, listing_recursive

listing = listing_recursive(GenConfig(5, "stamp"))
print(len(listing), "stamp foldings of order 5")

# %%
for a, b in zip(listing, listing[1:] + listing[:1]):
    rot = find_stamp_rotation(a, b)
    print(f"{a.compact()} -> {b.compact()}   rotate(i={rot.i}, j={rot.j}, k={rot.k})")

# %% [markdown]
# Semi-meanders come from the same tree; only the last level changes.

# %%
semi = listing_recursive(GenConfig(5, "semi"))
print(" ".join(p.compact() for p in semi))
