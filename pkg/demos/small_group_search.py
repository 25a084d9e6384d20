"""Search the orbits of small 2-transitive groups on k-subsets for pairwise
transitive designs, and match each hit with a table line."""

import time

from ptdesigns.harness.search import bundled_small_groups, search_small, table_match

for name, make in bundled_small_groups().items():
    G = make()
    t = time.perf_counter()
    hits = search_small(G)
    dt = time.perf_counter() - t
    print(f"{name:14s} degree {G.degree:2d} order {G.order():>9d}  {len(hits)} hit(s)  {dt:5.2f}s")
    for h in hits:
        p = h.params
        print(f"    {p.describe():12s} b={p.b:<3d} mu={p.mu}  rep={h.representative}  "
              f"{', '.join(table_match(p.v, p.k, p.lam, p.mu))}")
