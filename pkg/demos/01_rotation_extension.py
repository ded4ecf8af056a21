# Rotation-extension on a small graph.
#
# A path P = u ... v can be "rotated" about v: if the mobile end u has a
# neighbour x further along P, dropping the edge before x and adding u-x
# gives another path on the same vertices with a new mobile end.
from seppaths import Graph, derived_path, posa_path
from seppaths.posa import path_neighborhood

# Two triangles sharing vertex 2, plus a pendant vertex hanging off 4.
g = Graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)])

r = posa_path(g)
print("rotation-maximal path:", r.path)
print("fixed end v:", r.fixed_end)
print("derived endpoints S:", sorted(r.endpoints))

# Every endpoint comes with a replayable sequence of exchanges.
for x in sorted(r.endpoints):
    ex = r.parents[x]
    how = "start" if ex is None else f"from {ex.source}: drop {ex.removed_edge}, add {ex.added_edge}"
    print(f"  {x}: {derived_path(r, x)}   ({how})")

# The neighbours of S all sit next to S along the path, so there are at
# most two per endpoint.
s = set(r.endpoints)
print("N_G(S):", sorted(r.boundary))
print("neighbours of S along the path:", sorted(path_neighborhood(r.path, s)))
print(f"|N_G(S)| = {len(r.boundary)} <= 2|S| = {2 * len(s)}")

# Starting from a chosen path reproduces the textbook K4 picture.
from seppaths.generators import clique

r4 = posa_path(clique(4), [0, 1, 2, 3])
print("\nK4 from 0-1-2-3:", sorted(r4.endpoints), "derived path to 2:", derived_path(r4, 2))
