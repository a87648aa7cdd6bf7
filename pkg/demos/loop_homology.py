"""
Tor and Cotor by brute force
============================

Computes the bar homology of the mod 2 cohomology of F4 and the cobar
homology of the stored loop coalgebra, and compares both against the
stored descriptions.  The mismatch in degree 16 is the a16 finding.
"""

from lscat import catalog
from lscat.coalgebra import bar_homology, cobar_homology, compare_dims

N = 18
entry = catalog.get("F4", 2)

tor = bar_homology(entry.algebra, N)
print("Tor dimensions by total degree:", {t: v for t, v in tor.totals().items() if v})
print("derived from the ring:", [f"{c.kind[0]}{c.degree}" for c in entry.derived_loop_coalgebra().cofactors])
print("stored loop coalgebra:", [f"{c.kind[0]}{c.degree}" for c in entry.loop_coalgebra.cofactors])
for d in compare_dims(tor, entry.loop_coalgebra, N):
    print("  ", d)

cotor = cobar_homology(entry.loop_coalgebra, N)
print("\nCotor against the stored E2 page:")
for d in compare_dims(cotor, entry.expected_cotor, N):
    print("  ", d)

# at p = 3 the truncated factor x8 leaves odd classes in Tor
tor3 = bar_homology(catalog.get("F4", 3).algebra, 12)
print("\nodd total degrees at p=3:", sorted({t for (_, t) in tor3.dims if t % 2}))
