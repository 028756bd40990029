#!/usr/bin/env python3
"""Splice unknotting counts and replayable witnesses.

Every crossing smooths two ways; on a knot projection exactly one of them
keeps a single closed curve.  Descending splice by splice always ends on
the bare circle after n steps, and u_minus counts the cheapest way to get
there when kink removals are free and every other splice costs one.
"""

from splicecap import (
    SmoothingChoice,
    build_map,
    bundled_table_path,
    classify_splice,
    enumerate_descents,
    ingest_table,
    parse_code,
    reduce_ri,
    smooth,
    u_minus,
    u_upper,
    verify_witness,
)

table = {e.name: e.map for e in ingest_table(bundled_table_path())}

trefoil = table["3_1"]
print("descents of the trefoil:")
for name, kind, _ in enumerate_descents(trefoil):
    print(f"  splice at {name}: {kind.value}")

value, witness = u_minus(trefoil)
print("u-(trefoil) =", value)
print("witness:", " / ".join(witness.steps))
print("replay:", verify_witness(trefoil, witness))

# a kinked curve costs nothing: kink removals are free
curl = build_map(parse_code("1+ 1+ 2+ 2+"))
print("u-(double curl) =", u_minus(curl)[0],
      "| reduces to circle:", reduce_ri(curl).n == 0)

# one band splice takes the trefoil to a double curl
after = smooth(trefoil, "1", SmoothingChoice.DISORIENTED)
print("after S- at 1:", after.n, "crossings;",
      classify_splice(trefoil, "1", SmoothingChoice.DISORIENTED).value)

# the bundled table, one line per prime projection
print("\nband counts over the bundled table:")
for name in ("1_1", "3_1", "4_1", "5_1", "5_2", "6_2", "7_4"):
    print(f"  u-({name}) = {u_minus(table[name])[0]}")

# the two-way search (insertions allowed) agrees on small counts
result = u_upper(table["6_2"])
print("\nu(6_2) =", result.value, f"({result.status.value})")
