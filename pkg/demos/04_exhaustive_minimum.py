# Exact minima on tiny graphs versus the linear construction.
from seppaths import exhaustive_min_separator, generate_family, separate, TIMEOUT

print(f"{'graph':26s} {'strong':>6s} {'weak':>5s} {'construction':>12s}")
for desc in ["clique(3)", "clique(4)", "clique(5)", "cycle(5)", "path(5)",
             "complete_bipartite(1, 3)", "complete_bipartite(2, 2)", "complete_bipartite(2, 3)",
             "triangles(2)", "clique(6)"]:
    g = generate_family(desc)
    row = []
    for mode in ("strong", "weak"):
        res = exhaustive_min_separator(g, mode, max_millis=5000)
        row.append("t/o" if res is TIMEOUT else str(res[0]))
    print(f"{desc:26s} {row[0]:>6s} {row[1]:>5s} {len(separate(g)[0]):>12d}")
