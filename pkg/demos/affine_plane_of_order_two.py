"""AG(3,2) under PSL(2,7): a design whose group is not affine.

The 14 planes of AG(3,2) form a 2-(8,4,3) design. Its full automorphism group
is AGL(3,2), but the 2-transitive PSL(2,7) on the 8 points of the projective
line over GF(7) is already pairwise transitive on it.
"""

from ptdesigns.constructions import catalog_row
from ptdesigns.designs import parameters
from ptdesigns.pairwise import classify_block_action, format_certificate, verify

row = catalog_row("Table2:line4")
D, G = row.design, row.group
p = parameters(D)
print(f"{p.describe()} with {D.b} blocks, mu = {p.mu}; |G| = {G.order()}")

report = verify(D, G, "both")
blocks = classify_block_action(D, G)
print(format_certificate(row.tag, p, report, blocks, G.label, G.order(), timing=False))

# The block action is rank 3 and imprimitive: complementary planes pair up.
print("block system:", blocks.block_system)
