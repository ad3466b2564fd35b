"""
Roads between (1, ..., 1) and R
===============================
"""

from rextension.rroad import backward_traverse, phi, road

R = (3, 2, 5, 4, 1)

# phi lowers the first largest coordinate; iterating it always reaches all ones
print(phi(R))
for G in road(R):
    print(G)

# going back up, the active coordinate says which entry to raise next
for G, c in backward_traverse(R):
    marked = ", ".join(f"[{g}]" if i + 1 == c else str(g) for i, g in enumerate(G))
    print(f"({marked})")
