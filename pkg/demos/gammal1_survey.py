"""Which subgroups <tau^i, tau^j sigma^t> of GammaL(1,q) are transitive on GF(q)*?

Counts transitive standard-form triples for a few q and compares the
arithmetic test with the orbits of the group itself.
"""

from collections import Counter

from ptdesigns.constructions import (
    GammaL1Subgroup,
    gammal1_is_transitive,
    gammal1_orbits,
    standard_form_triples,
    zsigmondy_ppd,
)

for p, d in [(2, 4), (3, 3), (2, 6), (3, 4)]:
    tally = Counter()
    for s in standard_form_triples(p, d):
        fast = gammal1_is_transitive(s)
        slow = len(gammal1_orbits(s)) == 1
        assert fast == slow
        tally[fast] += 1
    ppd = sorted(zsigmondy_ppd(p, d)) or "none"
    print(f"q = {p}^{d}: {tally[True]:3d} transitive of {sum(tally.values()):3d} triples; ppd(p,d) = {ppd}")

# A non-transitive example on GF(16): tau^5 has order 3.
s = GammaL1Subgroup(2, 4, 5, 0, 1)
print("orbits of <tau^5, sigma> on GF(16)*:", sorted(len(o) for o in gammal1_orbits(s)))
