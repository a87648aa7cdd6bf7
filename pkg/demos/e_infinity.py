"""
From the E2 page back to the group
==================================

Kills each transpotence pair with its differential and compares the
result with the cohomology ring, for every stored group and prime.
"""

from lscat import catalog
from lscat.coalgebra import apply_differentials, differential_issues

for entry in catalog.entries():
    A = entry.algebra
    N = A.top_degree()
    einf = apply_differentials(entry.expected_cotor, entry.differentials, N)
    same = einf == A.poincare_dims(N)
    diffs = ", ".join(str(d) for d in entry.differentials) or "none"
    print(f"{entry.label:9s} through degree {N:3d}: {'match' if same else 'MISMATCH'}  [{diffs}]")
    for d in entry.differentials:
        for issue in differential_issues(entry.expected_cotor, d):
            print("    note:", issue)
