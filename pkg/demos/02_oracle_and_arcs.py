# %% [markdown]
# # Checking foldings geometrically
# The oracle draws each perforation as an arc above or below the pile and
# rejects crossings. Visibility of the last (and first) stamp decides
# semi-meanders and open meanders.

# %%
from foldgray import Pile, arc_diagram, brute_force_enumerate, is_open_meander, is_semi_meander, is_stamp_folding

for text in ["1234", "2143", "1423"]:
    p = Pile.parse(text)
    arcs = ", ".join(f"{a.stamp}-{a.stamp + 1}:({a.a},{a.b}) {a.side.value}" for a in arc_diagram(p).arcs)
    print(text, "| stamp:", is_stamp_folding(p), "semi:", is_semi_meander(p),
          "open:", is_open_meander(p), "|", arcs)

# %%
for kind in ("stamp", "semi", "open"):
    found = brute_force_enumerate(4, kind)
    print(kind, len(found), " ".join(p.compact() for p in found))

# %%
for kind in ("stamp", "semi", "open"):
    print(kind, [len(brute_force_enumerate(n, kind)) for n in range(1, 9)])
