#!/usr/bin/env python3
"""Crosscap numbers of alternating knots from state surfaces.

Filling the circles of a state with disks and joining them by half-twisted
bands at the crossings gives a surface spanning the alternating knot the
projection carries; its Euler characteristic is circles minus crossings.
The branching run repeatedly turns a smallest face into a state circle and
keeps the best leaves; the crosscap number falls out of the dichotomy
between orientable and non-orientable maximal leaves.
"""

from splicecap import (
    ak_min_genus,
    bundled_table_path,
    connected_sum,
    crosscap_alt,
    equality_report,
    gen_pretzel,
    gen_rational,
    gen_torus,
    ingest_table,
    sigma_from_witness,
    u_minus,
    apply_state,
)

table = {e.name: e.map for e in ingest_table(bundled_table_path())}

print("the three one- and two-crosscap families:")
for l in (2, 3, 4):
    print(f"  torus({l}):      C = {crosscap_alt(gen_torus(l))}")
for m, n in ((1, 2), (2, 2)):
    print(f"  rational({m},{n}):  C = {crosscap_alt(gen_rational(m, n))}")
for p, q, r in ((1, 1, 1), (1, 1, 2)):
    print(f"  pretzel({p},{q},{r}): C = {crosscap_alt(gen_pretzel(p, q, r))}")

print("\nthe doubled 7_4 is the classic non-additive example:")
p74 = table["7_4"]
doubled = connected_sum(p74, None, p74, None)
print("  C(7_4)        =", crosscap_alt(p74))
print("  C(7_4 # 7_4)  =", crosscap_alt(doubled), "(not 3 + 3)")
print("  u-(7_4 # 7_4) =", u_minus(doubled)[0])
r = equality_report(doubled)
print("  crosscap == u-:", r.equal, f"({r.crosscap} vs {r.u_minus})")

print("\nbranching detail for 4_1:")
res = ak_min_genus(table["4_1"])
print(" ", res)

print("\nthe witness state: one circle per kink removal, plus one")
value, witness = u_minus(p74)
state = sigma_from_witness(p74, witness)
print("  circles:", apply_state(p74, state), "=", 1 + witness.ri_count)
print("  chi:", apply_state(p74, state) - p74.n, "= 1 -", value)
