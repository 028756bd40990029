"""Splices (crossing smoothings), states, and the inverse insertion moves.

Each crossing admits two planar smoothings: pairing ``0`` joins slots
``{0,1}`` and ``{2,3}``, pairing ``1`` joins ``{1,2}`` and ``{3,0}``.  With a
traversal orientation fixed, exactly one of them reconnects the strands
coherently; that one is the *oriented* (Seifert) splice.  On a knot projection
the oriented splice always splits the curve in two, the disoriented splice
keeps one closed curve, and a disoriented splice at a crossing carrying a
monogon is a kink removal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .curvemap import CurveMap, components
from .errors import DegenerateOnO, InvalidMove, MultiComponentError

__all__ = [
    "SmoothingChoice",
    "SpliceKind",
    "State",
    "smooth",
    "classify_splice",
    "make_state",
    "apply_state",
    "state_chi",
    "is_seifert_state",
    "seifert_genus",
    "ri_plus",
    "s_plus",
    "twist_move",
]


class SmoothingChoice(enum.Enum):
    ORIENTED = "oriented"
    DISORIENTED = "disoriented"


class SpliceKind(enum.Enum):
    SEIFERT = "Seifert"
    RI_MINUS = "RI-"
    S_MINUS = "S-"


def _arc_partner(slot: int, pairing: int) -> int:
    return slot ^ 1 if pairing == 0 else 3 - slot


def oriented_pairing(m: CurveMap, c: int) -> int:
    """The pairing id of the orientation-respecting smoothing at crossing ``c``."""
    out = m.out_darts
    if out[4 * c] != out[4 * c + 1]:
        return 0
    assert out[4 * c + 1] != out[4 * c + 2], "degenerate in/out pattern"
    return 1


def pairing_for(m: CurveMap, c: int, choice: SmoothingChoice) -> int:
    p = oriented_pairing(m, c)
    return p if choice is SmoothingChoice.ORIENTED else 1 - p


def _smooth_pairing(m: CurveMap, c: int, pairing: int) -> CurveMap:
    """Remove crossing ``c``, reconnecting its four edge ends by ``pairing``."""
    n = m.n
    old = m.opp
    resolved: dict[int, int] = {}
    consumed = set()
    for d in range(4 * n):
        if d >> 2 == c or d in resolved:
            continue
        e = old[d]
        while e >> 2 == c:
            consumed.add(e)
            p = 4 * c + _arc_partner(e & 3, pairing)
            consumed.add(p)
            e = old[p]
        resolved[d] = e
        resolved[e] = d
    # arc/edge cycles living entirely on the removed crossing become circles
    extra = 0
    leftovers = {4 * c + s for s in range(4)} - consumed
    while leftovers:
        start = leftovers.pop()
        extra += 1
        d = start
        while True:
            p = 4 * c + _arc_partner(d & 3, pairing)
            leftovers.discard(p)
            d = old[p]
            assert d >> 2 == c, "leftover cycle escaped the removed crossing"
            if d == start:
                break
            leftovers.discard(d)
    new_index = {i: (i if i < c else i - 1) for i in range(n) if i != c}
    opp = [0] * (4 * (n - 1))
    for d, e in resolved.items():
        nd = 4 * new_index[d >> 2] + (d & 3)
        opp[nd] = 4 * new_index[e >> 2] + (e & 3)
    names = tuple(nm for i, nm in enumerate(m.names) if i != c)
    return CurveMap(opp, names, m.free_circles + extra)


def smooth(m: CurveMap, crossing: str, choice: SmoothingChoice) -> CurveMap:
    """Erase one crossing and reconnect per the chosen splice.

    Crossingless components produced by the splice are absorbed into the
    free-circle counter.  The orientation reference is the map's canonical
    traversal direction on each closed curve.
    """
    c = m.crossing_index(crossing)
    return _smooth_pairing(m, c, pairing_for(m, c, choice))


def classify_splice(m: CurveMap, crossing: str, choice: SmoothingChoice) -> SpliceKind:
    """Sort a splice on a knot projection into Seifert / RI- / S-.

    The oriented choice is a Seifert splice.  The disoriented choice is a
    first Reidemeister reduction exactly when the crossing carries a monogon,
    and is of type S- otherwise.
    """
    if components(m) != 1 or m.n == 0:
        raise MultiComponentError("splice classification needs a knot projection")
    c = m.crossing_index(crossing)
    if choice is SmoothingChoice.ORIENTED:
        return SpliceKind.SEIFERT
    if c in m.monogon_crossings:
        return SpliceKind.RI_MINUS
    return SpliceKind.S_MINUS


# ---------------------------------------------------------------------------
# States


@dataclass(frozen=True)
class State:
    """A smoothing choice at every crossing of a fixed base projection.

    Pairings are stored slot-wise (see module docstring), so a state can be
    applied in any order; ``choices`` reports them relative to the base map's
    traversal orientation.
    """

    base: CurveMap
    pairings: tuple[int, ...]

    def __post_init__(self):
        if len(self.pairings) != self.base.n:
            raise InvalidMove("state must assign a smoothing to every crossing")

    @property
    def choices(self) -> dict[str, SmoothingChoice]:
        out = {}
        for c, name in enumerate(self.base.names):
            ori = oriented_pairing(self.base, c)
            out[name] = (
                SmoothingChoice.ORIENTED
                if self.pairings[c] == ori
                else SmoothingChoice.DISORIENTED
            )
        return out


def make_state(m: CurveMap, choices: dict[str, SmoothingChoice]) -> State:
    if set(choices) != set(m.names):
        raise InvalidMove("state does not cover exactly the crossings of the map")
    pairings = tuple(
        pairing_for(m, c, choices[m.names[c]]) for c in range(m.n)
    )
    return State(m, pairings)


def apply_state(m: CurveMap, state: State) -> int:
    """Number of circles after smoothing every crossing of ``m`` by ``state``."""
    if state.base.opp != m.opp or state.base.names != m.names:
        raise InvalidMove("state was built for a different projection")
    return count_state_circles(m, state.pairings) + m.free_circles


def count_state_circles(m: CurveMap, pairings) -> int:
    """Circles of a total smoothing, given one pairing per crossing index."""
    seen = [False] * (4 * m.n)
    circles = 0
    for d0 in range(4 * m.n):
        if seen[d0]:
            continue
        circles += 1
        d = d0
        while not seen[d]:
            seen[d] = True
            d = 4 * (d >> 2) + _arc_partner(d & 3, pairings[d >> 2])
            seen[d] = True
            d = m.opp[d]
    return circles


def state_chi(n: int, circles: int) -> int:
    """Euler characteristic of the state surface: circles minus crossings."""
    if n < 0 or circles < 1:
        raise InvalidMove("need n >= 0 and at least one circle")
    return circles - n


def is_seifert_state(state: State) -> bool:
    """True exactly when every choice is oriented (the one orientable state)."""
    return all(
        ch is SmoothingChoice.ORIENTED for ch in state.choices.values()
    )


def seifert_genus(m: CurveMap) -> int:
    """Genus of the surface from the all-oriented state (the knot genus for
    alternating diagrams)."""
    if components(m) != 1:
        raise MultiComponentError("Seifert genus needs a knot projection")
    if m.n == 0:
        return 0
    pairings = tuple(oriented_pairing(m, c) for c in range(m.n))
    circles = count_state_circles(m, pairings) + m.free_circles
    g2 = 1 + m.n - circles
    assert g2 % 2 == 0, "parity violation in Seifert circle count"
    return g2 // 2


# ---------------------------------------------------------------------------
# Increasing moves


def _fresh_name(m: CurveMap) -> str:
    used = set(m.names)
    k = m.n + 1
    while str(k) in used:
        k += 1
    return str(k)


def ri_plus(m: CurveMap, dart: tuple[str, int] | None, side: str) -> CurveMap:
    """Insert a kink on the edge of ``dart``, on the given side of travel.

    On the simple closed curve (``dart=None``) the kink is put on a free
    circle.  The disoriented smoothing at the new crossing undoes the move.
    """
    if side not in ("L", "R"):
        raise InvalidMove(f"side must be 'L' or 'R', got {side!r}")
    if dart is None:
        if m.free_circles < 1:
            raise InvalidMove("no free circle to put a kink on")
        # both mirror kinks on a bare circle give the same map
        opp = list(m.opp) + [4 * m.n + k for k in (3, 2, 1, 0)]
        return CurveMap(opp, m.names + (_fresh_name(m),), m.free_circles - 1)
    d = m.dart(*dart)
    o = m.opp[d]
    x = 4 * m.n
    opp = list(m.opp) + [0, 0, 0, 0]
    if side == "R":
        # loop edge joins slots 1 and 2ccw of the new crossing
        opp[d] = x + 0
        opp[x + 0] = d
        opp[x + 2] = x + 1
        opp[x + 1] = x + 2
        opp[x + 3] = o
        opp[o] = x + 3
    else:
        opp[d] = x + 0
        opp[x + 0] = d
        opp[x + 2] = x + 3
        opp[x + 3] = x + 2
        opp[x + 1] = o
        opp[o] = x + 1
    return CurveMap(opp, m.names + (_fresh_name(m),), m.free_circles)


def _face_of(m: CurveMap) -> dict[int, int]:
    face_of = {}
    for i, orbit in enumerate(m.face_orbits):
        for d in orbit:
            face_of[d] = i
    return face_of


def _insert_band(m: CurveMap, d1: int, d2: int) -> CurveMap:
    """Cut the edges of two co-face darts and join all four ends through one
    new crossing placed in the common face.  The slot layout makes the
    disoriented smoothing of the new crossing the exact inverse."""
    o1, o2 = m.opp[d1], m.opp[d2]
    x = 4 * m.n
    opp = list(m.opp) + [0, 0, 0, 0]

    def join(a: int, b: int) -> None:
        opp[a] = b
        opp[b] = a

    join(d1, x + 1)
    join(o1, x + 0)
    join(o2, x + 2)
    join(d2, x + 3)
    return CurveMap(opp, m.names + (_fresh_name(m),), m.free_circles)


def s_plus(m: CurveMap, dart1: tuple[str, int], dart2: tuple[str, int]) -> CurveMap:
    """Join two arcs on a common face by one new crossing (a half-twist band).

    Inverse of an S- splice: the disoriented smoothing at the new crossing
    restores the input.  Requires the arcs to be traversed compatibly, else
    the band would cut the curve into a two-component link.
    """
    if m.n == 0:
        raise DegenerateOnO(
            "no distinct arcs on the simple closed curve; use ri_plus"
        )
    d1 = m.dart(*dart1)
    d2 = m.dart(*dart2)
    if d1 == d2:
        raise InvalidMove("need two distinct darts")
    face_of = _face_of(m)
    if face_of[d1] != face_of[d2]:
        raise InvalidMove("darts do not lie on a common face")
    if m.out_darts[d1] != m.out_darts[d2]:
        raise InvalidMove(
            "a band joining oppositely traversed arcs would cut the curve "
            "into a two-component link"
        )
    out = _insert_band(m, d1, d2)
    assert components(out) == components(m), "band insertion changed components"
    return out


def twist_move(
    m: CurveMap,
    dart1: tuple[str, int],
    dart2: tuple[str, int],
    i: int,
    variant: str = "A",
) -> CurveMap:
    """Insert a twist region of ``i`` crossings joining two co-face arcs.

    Implemented literally as its definition: ``i - 1`` kink insertions
    coiling one arc into the common face, then one band insertion joining
    the coil to the other arc.  Undoing it therefore always costs a single
    S- splice plus kink removals.  The region's parity is dictated by how
    the curve runs along the two arcs: compatibly traversed arcs take odd
    regions, oppositely traversed arcs take even ones (each kink flips the
    coiled arc's direction, and the final band needs compatible arcs).
    ``variant`` chooses which of the two arcs is coiled: ``A`` coils the
    second, ``B`` the first.
    """
    if i < 1:
        raise InvalidMove("twist region needs at least one crossing")
    if variant not in ("A", "B"):
        raise InvalidMove(f"variant must be 'A' or 'B', got {variant!r}")
    if m.n == 0:
        raise DegenerateOnO("no arcs available on the simple closed curve")
    if variant == "B":
        dart1, dart2 = dart2, dart1
    d1 = m.dart(*dart1)
    d2 = m.dart(*dart2)
    if d1 == d2:
        raise InvalidMove("need two distinct darts")
    face_of = _face_of(m)
    if face_of[d1] != face_of[d2]:
        raise InvalidMove("darts do not lie on a common face")
    matched = m.out_darts[d1] == m.out_darts[d2]
    if (i % 2 == 1) != matched:
        raise InvalidMove(
            "twist region parity does not fit these arcs: compatibly "
            "traversed arcs take odd regions, opposite ones take even"
        )
    cur = m
    band_src = dart2
    for _ in range(i - 1):
        cur, band_src = _coil_into_face(cur, dart1, band_src)
    return s_plus(cur, dart1, band_src)


def _coil_into_face(
    m: CurveMap, target: tuple[str, int], arc: tuple[str, int]
) -> tuple[CurveMap, tuple[str, int]]:
    """Put one kink on the edge of ``arc`` with its loop bulging into the
    face shared with ``target``; returns the new map and the loop arc's dart
    on that face."""
    for side, outer_slot in (("L", 2), ("R", 1)):
        cand = ri_plus(m, arc, side)
        new_name = cand.names[-1]
        face_of = _face_of(cand)
        if face_of[cand.dart(new_name, outer_slot)] == face_of[cand.dart(*target)]:
            return cand, (new_name, outer_slot)
    raise AssertionError("kink loop landed in neither face of the arc")
