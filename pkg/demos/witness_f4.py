"""
A certified weight bound for F4 at the prime 2
===============================================

Walks through the five checks behind the module weight bound for F4,
then shows how each check reacts when the witness is tampered with.
"""

from lscat import catalog
from lscat.invariants import verify_witness, wgt
from lscat.steenrod import Op

entry = catalog.get("F4", 2)
A = entry.algebra
print("ring generators:", ", ".join(f"{g.name} (height {g.height})" for g in A.generators))
print("top degree", A.top_degree(), "and weight", wgt(A))

# the class z11 on the loop space side carries Sq4 z11 = x15
z11 = entry.zclasses[0]
mu = A.parse_monomial("x3^3*x5*x23")
cert = verify_witness(A, entry.table, z11, Op(2, 4), "x15", mu, 7)
for name, ok in cert.checks.items():
    print(f"  {name:17s} {ok}  {cert.details[name]}")
print("valid:", cert.valid, "so Mwgt >=", cert.bound)

# drop one factor of x3 from mu: x*mu no longer has maximal weight
short = A.parse_monomial("x3^2*x5*x23")
bad = verify_witness(A, entry.table, z11, Op(2, 4), "x15", short, 7)
print("\nshorter mu valid:", bad.valid, "| nonvanishing:", bad.details["nonvanishing"])

# forget the relation Sq4 z11 = x15 and there is nothing left to certify
plain = z11.without_relation(Op(2, 4), "x15")
print("without the relation:", verify_witness(A, entry.table, plain, Op(2, 4), "x15", mu, 7).valid)

# the same witness at higher levels: strict survival stops at m = 8
for m in (7, 8, 9):
    c = verify_witness(A, entry.table, z11, Op(2, 4), "x15", mu, m, strict=True,
                       differentials=entry.differentials)
    print(f"strict check at m={m}: {c.valid}")
