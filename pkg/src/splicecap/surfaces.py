"""State surfaces: Euler characteristics, the minimal-genus branching
algorithm for alternating diagrams, and crosscap numbers.

A state surface spans the alternating knot carried by a projection; its
Euler characteristic is the circle count of the state minus the crossing
count, and only the all-oriented (Seifert) state is orientable.  The
branching algorithm repeatedly turns a smallest face into a state circle
(faces with one or two corners force their splices, triangles fork into the
circle-forming and the all-opposite choices) and keeps the best leaves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curvemap import CurveMap, O_KEY, components, label_sort_key
from .errors import InvalidMove, MultiComponentError
from .search import Witness, reduce_ri, u_minus
from .splices import (
    SmoothingChoice,
    SpliceKind,
    State,
    _smooth_pairing,
    classify_splice,
    oriented_pairing,
    seifert_genus,
)

__all__ = [
    "AKResult",
    "PartialState",
    "ak_min_genus",
    "crosscap_alt",
    "sigma_from_witness",
    "check_upper_bound",
    "equality_report",
    "EqualityReport",
]


@dataclass(frozen=True)
class AKResult:
    """Outcome of the minimal-genus branching run.

    ``crosscap`` is ``1 - chi_max`` when some maximal leaf is non-orientable,
    else ``2 * genus + 1`` (every maximal leaf was the Seifert state).
    ``branch_count`` totals the leaves evaluated, summed over independently
    solved connected pieces.
    """

    chi_max: int
    nonorientable_at_max: bool
    crosscap: int
    genus: int
    branch_count: int


def _component_submap(m: CurveMap, crossings: tuple[int, ...]) -> CurveMap:
    dense = {c: j for j, c in enumerate(crossings)}
    opp = [0] * (4 * len(crossings))
    for c in crossings:
        for s in range(4):
            e = m.opp[4 * c + s]
            opp[4 * dense[c] + s] = 4 * dense[e >> 2] + (e & 3)
    return CurveMap(opp, tuple(m.names[c] for c in crossings), 0)


def _circle_pairing(corner_dart: int) -> int:
    """The pairing whose smoothing arc runs along this face corner.

    Orbit dart ``(c, s)`` stands for the corner between slots ``s-1`` and
    ``s``; the circle-forming splice joins exactly those two slots.
    """
    return 0 if (corner_dart & 3) % 2 == 1 else 1


def _smallest_face(m: CurveMap) -> tuple[int, ...]:
    best = None
    best_key = None
    for orbit in m.face_orbits:
        key = (
            len(orbit),
            sorted(label_sort_key(m.names[d >> 2]) for d in orbit),
        )
        if best_key is None or key < best_key:
            best, best_key = orbit, key
    assert best is not None
    return best


def _forced_pairings(orbit: tuple[int, ...], m: CurveMap, opposite: bool):
    """Pairings per crossing name turning the face into a state circle (or
    all the other way); ``None`` if the corners demand conflicting arcs."""
    chosen: dict[str, int] = {}
    for d in orbit:
        name = m.names[d >> 2]
        p = _circle_pairing(d)
        if opposite:
            p = 1 - p
        if chosen.setdefault(name, p) != p:
            return None
    return chosen


@dataclass(frozen=True)
class PartialState:
    """Working state of one branch: the map still to be smoothed, the state
    circles committed so far, the splices already chosen, and whether any of
    them differed from the base projection's oriented pairing."""

    remaining: CurveMap
    circles: int
    choices: tuple[tuple[str, int], ...]
    any_disoriented: bool

    def advance(self, chosen: dict[str, int], base_pairing: dict[str, int]):
        """Apply forced pairings; circles freed by the splices are banked."""
        cur = self.remaining
        flag = self.any_disoriented
        for name in sorted(chosen, key=label_sort_key):
            if chosen[name] != base_pairing[name]:
                flag = True
            cur = _smooth_pairing(cur, cur.crossing_index(name), chosen[name])
        return PartialState(
            CurveMap(cur.opp, cur.names, 0),
            self.circles + cur.free_circles,
            self.choices + tuple(sorted(chosen.items())),
            flag,
        )


def _start_state(m: CurveMap) -> PartialState:
    return PartialState(CurveMap(m.opp, m.names, 0), m.free_circles, (), False)


def _explore(state: PartialState, base_pairing: dict[str, int]):
    """Maximal total circle yield over the branch tree of one state.

    Returns ``(circles, flag, leaves)`` where ``flag`` says whether some
    maximal leaf involves a choice differing from the base projection's
    oriented pairing.
    """
    m = state.remaining
    if m.n == 0:
        return state.circles, state.any_disoriented, 1
    comps = m.graph_components
    if len(comps) > 1:
        # disconnected remainders are solved independently: circle yields
        # add, disoriented flags among maximizers combine by OR
        total, flag, leaves = state.circles, state.any_disoriented, 0
        for crossings in comps:
            sub = PartialState(_component_submap(m, crossings), 0, (), False)
            sub_best, sub_flag, sub_leaves = _explore(sub, base_pairing)
            total += sub_best
            flag = flag or sub_flag
            leaves += sub_leaves
        return total, flag, leaves

    orbit = _smallest_face(m)
    assert len(orbit) <= 3, "a connected spherical projection has a <=3-gon"
    branch_choices = [_forced_pairings(orbit, m, opposite=False)]
    if len(orbit) == 3:
        branch_choices.append(_forced_pairings(orbit, m, opposite=True))
    best = None
    best_flag = False
    leaves = 0
    for chosen in branch_choices:
        if chosen is None:
            continue
        circles, sub_flag, sub_leaves = _explore(
            state.advance(chosen, base_pairing), base_pairing
        )
        leaves += sub_leaves
        if best is None or circles > best:
            best, best_flag = circles, sub_flag
        elif circles == best:
            best_flag = best_flag or sub_flag
    assert best is not None, "every branch of a triangle was inconsistent"
    return best, best_flag, leaves


def ak_min_genus(m: CurveMap) -> AKResult:
    """Run the minimal-genus branching over all smallest-face splices.

    The input is a knot projection (its alternating diagram is implied; all
    quantities here are independent of the over/under pattern).

    The main run yields the maximal Euler characteristic.  Whether a
    non-orientable state attains it cannot be read off one run (face
    tie-breaks may funnel into the Seifert leaf), so each crossing is also
    anchored once at its disoriented smoothing and the branching maximizes
    the rest; that decides the dichotomy exactly.
    """
    if components(m) != 1:
        raise MultiComponentError("minimal-genus run needs a knot projection")
    genus = seifert_genus(m)
    if m.n == 0:
        return AKResult(1, False, 1, 0, 1)
    base = {m.names[c]: oriented_pairing(m, c) for c in range(m.n)}
    circles, _, leaves = _explore(_start_state(m), base)
    chi_max = circles - m.n
    chi_seifert = 1 - 2 * genus
    best_nonseifert = None
    for c in range(m.n):
        anchored = _smooth_pairing(m, c, 1 - base[m.names[c]])
        sub_circles, _, sub_leaves = _explore(_start_state(anchored), base)
        leaves += sub_leaves
        chi = sub_circles - m.n
        if best_nonseifert is None or chi > best_nonseifert:
            best_nonseifert = chi
    assert best_nonseifert is not None
    assert chi_max == max(chi_seifert, best_nonseifert), (
        "branching max must equal the best state"
    )
    flag = best_nonseifert == chi_max
    crosscap = 1 - chi_max if flag else 2 * genus + 1
    return AKResult(chi_max, flag, crosscap, genus, leaves)


def crosscap_alt(m: CurveMap) -> int:
    """Crosscap number of the alternating knot carried by the projection.

    Zero exactly for projections that are kink-closures of the bare circle
    (the unknot convention); otherwise the minimal-genus run decides.
    """
    if components(m) != 1:
        raise MultiComponentError("crosscap needs a knot projection")
    if reduce_ri(m).canonical_key == O_KEY:
        return 0
    return ak_min_genus(m).crosscap


def sigma_from_witness(p: CurveMap, w: Witness) -> State:
    """The state a pure-descent witness induces on its base projection.

    Crossings consumed by band splices keep that disoriented smoothing;
    crossings consumed by kink removals take the other (oriented) smoothing.
    The resulting circle count is one plus the witness's kink-removal count.
    """
    pair_by_name: dict[str, int] = {}
    cur = p
    for line in w.steps:
        parts = line.split()
        if parts[0] not in ("S-", "RI-") or len(parts) != 2:
            raise InvalidMove(f"not a pure-descent step: {line!r}")
        name = parts[1]
        kind = classify_splice(cur, name, SmoothingChoice.DISORIENTED)
        want = SpliceKind.S_MINUS if parts[0] == "S-" else SpliceKind.RI_MINUS
        if kind is not want:
            raise InvalidMove(f"step {line!r} misclassifies the splice ({kind.value})")
        c = cur.crossing_index(name)
        dis = 1 - oriented_pairing(cur, c)
        pair_by_name[name] = dis if parts[0] == "S-" else 1 - dis
        cur = _smooth_pairing(cur, c, dis)
    if cur.canonical_key != O_KEY:
        raise InvalidMove("witness does not end at the simple closed curve")
    if set(pair_by_name) != set(p.names):
        raise InvalidMove("witness does not consume every crossing of the base")
    return State(p, tuple(pair_by_name[nm] for nm in p.names))


@dataclass(frozen=True)
class EqualityReport:
    crosscap: int
    u_minus: int

    @property
    def equal(self) -> bool:
        return self.crosscap == self.u_minus


def check_upper_bound(m: CurveMap) -> bool:
    """Self-test: the crosscap number never exceeds the splice unknotting
    count."""
    return crosscap_alt(m) <= u_minus(m)[0]


def equality_report(m: CurveMap) -> EqualityReport:
    return EqualityReport(crosscap_alt(m), u_minus(m)[0])
