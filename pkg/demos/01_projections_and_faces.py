#!/usr/bin/env python3
"""Parsing Gauss codes, face structure, and canonical forms.

A knot projection is a 4-valent map on the sphere.  We store one as a set
of crossings with counterclockwise dart slots plus the edge pairing, and we
serialize it as a signed Gauss code: two visits per crossing, one sign.
"""

from splicecap import (
    NotRealizable,
    build_map,
    canonical_key,
    components,
    equivalent,
    extract_code,
    faces,
    mirror_map,
    parse_code,
    render_code,
)

# The standard trefoil projection: visits 1 2 3 1 2 3, uniform signs.
trefoil = build_map(parse_code("1+ 2+ 3+ 1+ 2+ 3+"))
print("trefoil:", trefoil.n, "crossings,", components(trefoil), "component")

# Its five faces: three bigons from the twist region, two triangles.
report = faces(trefoil)
print("face sizes:", report.gon_multiset)
for face in report.faces:
    print("  ", face.gon, "corners at", [c for c, _ in face.corners])

# Not every double-occurrence word draws on the sphere.  The alternating
# pattern 1 2 1 2 has no planar realization at all:
try:
    build_map(parse_code("1+ 2+ 1+ 2+"))
except NotRealizable as exc:
    print("1+ 2+ 1+ 2+ rejected:", exc)

# Canonical keys ignore labels, starting point, direction, and mirror.
relabeled = build_map(parse_code("x+ y+ z+ x+ y+ z+"))
mirrored = mirror_map(trefoil)
print("relabeled equal:", equivalent(trefoil, relabeled))
print("mirror equal:   ", equivalent(trefoil, mirrored))
print("key:", canonical_key(trefoil).decode())

# Codes round-trip through the map.
code = extract_code(trefoil)
print("round trip:", render_code(code), "->",
      equivalent(build_map(code), trefoil))
