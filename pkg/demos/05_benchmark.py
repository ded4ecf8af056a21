# A small benchmark sweep, as the `seppaths bench` subcommand would run it.
import sys

from seppaths.bench import run_bench

corpus = [f"clique({n})" for n in (10, 20, 30)]
corpus += [f"gnp({n}, 0.1, seed=1)" for n in (50, 100)]
corpus += ["complete_bipartite(10, 30)", "triangles(13)", "cycle(200)"]

records = run_bench(corpus, "best", sys.stdout, timing=True)
print("all verified:", all(r.verified for r in records))
print("largest size/n:", max(float(r.ratio) for r in records))
