"""Knot and link projections as 4-valent combinatorial maps on the sphere.

A projection is stored as a set of crossings, each with four dart slots in
counterclockwise cyclic order, plus a fixed-point-free involution ``opp``
pairing darts into edges.  Crossingless components ("free circles") are held
as a counter; their placement among the faces is never needed by any
quantity computed here.

Dart arithmetic: crossing ``c`` owns darts ``4c .. 4c+3``; ``slot = dart & 3``.
Traversal goes straight through a crossing (slot ``k`` enters, ``k+2`` exits),
and the face permutation is ``dart -> rot(opp(dart))`` with ``rot`` the next
counterclockwise slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import MultiComponentError, NotRealizable, ParseError

__all__ = [
    "SignedGaussCode",
    "CurveMap",
    "Face",
    "FaceReport",
    "parse_code",
    "render_code",
    "parse_record",
    "build_map",
    "extract_code",
    "faces",
    "components",
    "canonical_key",
    "equivalent",
    "interleaved",
    "mirror_map",
    "O_MAP",
    "O_KEY",
]


def rot(d: int) -> int:
    """Next counterclockwise dart at the same crossing."""
    return (d & ~3) | ((d + 1) & 3)


def rot_inv(d: int) -> int:
    return (d & ~3) | ((d - 1) & 3)


def rot2(d: int) -> int:
    """Straight through the crossing: the opposite slot."""
    return (d & ~3) | ((d + 2) & 3)


def label_sort_key(label: str) -> tuple:
    """Natural order: numeric labels numerically, others lexicographically."""
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


# ---------------------------------------------------------------------------
# Signed Gauss codes


@dataclass(frozen=True)
class SignedGaussCode:
    """Double-occurrence words with a sign per crossing.

    ``components`` holds one word per closed curve; each word is a sequence of
    ``(label, sign)`` with ``sign`` in ``{+1, -1}``.  Both occurrences of a
    label carry the same sign.  ``free_circles`` counts crossingless
    components.
    """

    components: tuple[tuple[tuple[str, int], ...], ...]
    free_circles: int = 0

    def __post_init__(self):
        seen: dict[str, list[int]] = {}
        for word in self.components:
            if not word:
                raise ParseError("empty component word")
            for label, sign in word:
                if sign not in (1, -1):
                    raise ParseError(f"bad sign {sign!r} on label {label!r}")
                seen.setdefault(label, []).append(sign)
        for label, signs in seen.items():
            if len(signs) != 2:
                raise ParseError(
                    f"label {label!r} occurs {len(signs)} time(s), expected exactly 2"
                )
            if signs[0] != signs[1]:
                raise ParseError(f"label {label!r} carries inconsistent signs")
        if self.free_circles < 0:
            raise ParseError("negative free circle count")

    @property
    def n(self) -> int:
        return sum(len(w) for w in self.components) // 2


def parse_code(text: str) -> SignedGaussCode:
    """Parse one line of Gauss-code tokens.

    Components are separated by ``|``; the token ``O`` denotes a crossingless
    circle; every other token is ``<label><sign>`` with ``label`` in
    ``[A-Za-z0-9_]+`` and ``sign`` one of ``+-``.
    """
    segments = [seg.strip() for seg in text.split("|")]
    words: list[tuple[tuple[str, int], ...]] = []
    free = 0
    if not any(seg for seg in segments):
        raise ParseError("empty Gauss code")
    for seg in segments:
        tokens = seg.split()
        if not tokens:
            raise ParseError("empty component between '|' separators")
        if all(t == "O" for t in tokens):
            free += len(tokens)
            continue
        word = []
        for tok in tokens:
            if tok == "O":
                raise ParseError("free circle token 'O' mixed into a crossing word")
            label, sign_ch = tok[:-1], tok[-1:]
            if sign_ch not in "+-" or not label:
                raise ParseError(f"malformed token {tok!r}")
            if not all(ch.isalnum() or ch == "_" for ch in label):
                raise ParseError(f"bad label in token {tok!r}")
            word.append((label, 1 if sign_ch == "+" else -1))
        words.append(tuple(word))
    return SignedGaussCode(tuple(words), free)


def render_code(code: SignedGaussCode) -> str:
    """Inverse of :func:`parse_code` (modulo whitespace)."""
    parts = [
        " ".join(f"{label}{'+' if s > 0 else '-'}" for label, s in word)
        for word in code.components
    ]
    parts.extend("O" for _ in range(code.free_circles))
    if not parts:
        raise ParseError("cannot render an empty code")
    return " | ".join(parts)


def parse_record(line: str) -> tuple[str, SignedGaussCode]:
    """Parse a ``name: tokens`` record line."""
    if ":" not in line:
        raise ParseError(f"record line missing ':': {line!r}")
    name, rest = line.split(":", 1)
    name = name.strip()
    if not name:
        raise ParseError("record with empty name")
    return name, parse_code(rest)


# ---------------------------------------------------------------------------
# The map itself


class CurveMap:
    """Immutable spherical 4-valent map with a free-circle counter.

    ``opp`` is the edge involution on darts, ``names[c]`` the external label of
    crossing ``c``.  Construction checks the spherical invariant
    ``V - E + F = 2`` on every connected sub-map and raises
    :class:`NotRealizable` otherwise.
    """

    def __init__(self, opp, names=None, free_circles: int = 0):
        opp = tuple(opp)
        if len(opp) % 4:
            raise NotRealizable("dart count not a multiple of four")
        n = len(opp) // 4
        if names is None:
            names = tuple(str(i + 1) for i in range(n))
        else:
            names = tuple(names)
        if len(names) != n or len(set(names)) != n:
            raise NotRealizable("crossing names must be unique, one per crossing")
        if free_circles < 0:
            raise NotRealizable("negative free circle count")
        for d, e in enumerate(opp):
            if not 0 <= e < 4 * n or opp[e] != d or e == d:
                raise NotRealizable("opp is not a fixed-point-free involution")
        self.opp = opp
        self.n = n
        self.names = names
        self.free_circles = free_circles
        self._check_spherical()

    # -- construction helpers ------------------------------------------------

    def _check_spherical(self) -> None:
        for crossings in self.graph_components:
            darts = [4 * c + s for c in crossings for s in range(4)]
            f = 0
            seen = set()
            for d in darts:
                if d in seen:
                    continue
                f += 1
                while d not in seen:
                    seen.add(d)
                    d = rot(self.opp[d])
            v = len(crossings)
            if v - 2 * v + f != 2:
                raise NotRealizable(
                    f"connected sub-map has V-E+F = {v - 2 * v + f}, expected 2"
                )

    # -- basic structure -----------------------------------------------------

    @cached_property
    def graph_components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the underlying 4-valent graph (crossing sets)."""
        comps = []
        unseen = set(range(self.n))
        while unseen:
            start = min(unseen)
            stack = [start]
            comp = {start}
            unseen.discard(start)
            while stack:
                c = stack.pop()
                for s in range(4):
                    c2 = self.opp[4 * c + s] >> 2
                    if c2 in unseen:
                        unseen.discard(c2)
                        comp.add(c2)
                        stack.append(c2)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @cached_property
    def circuits(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of the traversal successor ``d -> rot2(opp(d))``.

        Each closed curve yields two orbits, one per traversal direction;
        orbit entries are exit darts in traversal order.
        """
        orbits = []
        seen = [False] * (4 * self.n)
        for d0 in range(4 * self.n):
            if seen[d0]:
                continue
            orbit = []
            d = d0
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = rot2(self.opp[d])
            orbits.append(tuple(orbit))
        return tuple(orbits)

    @cached_property
    def curve_components(self) -> tuple[tuple[int, ...], ...]:
        """One traversal circuit per closed curve (the direction with the least dart)."""
        chosen = []
        claimed = set()
        for orbit in self.circuits:
            if orbit[0] in claimed:
                continue
            # the reverse direction uses exactly the opp-partners as exit darts
            claimed.update(self.opp[d] for d in orbit)
            chosen.append(orbit)
        return tuple(chosen)

    @cached_property
    def out_darts(self) -> tuple[bool, ...]:
        """Exit-dart flags for the canonical traversal direction of each curve."""
        flags = [False] * (4 * self.n)
        for orbit in self.curve_components:
            for d in orbit:
                flags[d] = True
        return tuple(flags)

    @cached_property
    def face_orbits(self) -> tuple[tuple[int, ...], ...]:
        orbits = []
        seen = [False] * (4 * self.n)
        for d0 in range(4 * self.n):
            if seen[d0]:
                continue
            orbit = []
            d = d0
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = rot(self.opp[d])
            orbits.append(tuple(orbit))
        return tuple(orbits)

    @cached_property
    def monogon_crossings(self) -> frozenset[int]:
        return frozenset(
            orbit[0] >> 2 for orbit in self.face_orbits if len(orbit) == 1
        )

    # -- addressing ----------------------------------------------------------

    @cached_property
    def _index_of(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def crossing_index(self, name: str) -> int:
        try:
            return self._index_of[name]
        except KeyError:
            from .errors import InvalidMove

            raise InvalidMove(
                f"unknown crossing {name!r} (have {', '.join(self.names)})"
            ) from None

    def dart(self, name: str, slot: int) -> int:
        if not 0 <= slot <= 3:
            raise ParseError(f"slot {slot} out of range 0..3")
        return 4 * self.crossing_index(name) + slot

    def dart_name(self, d: int) -> str:
        return f"{self.names[d >> 2]}.{d & 3}"

    # -- equality ------------------------------------------------------------

    @cached_property
    def canonical_key(self) -> bytes:
        return _canonical_key(self)

    def __repr__(self) -> str:
        if self.n == 0:
            return f"CurveMap(O x {self.free_circles})"
        return f"CurveMap({render_code(extract_code(self))!r})"


O_MAP = CurveMap((), (), 1)


# ---------------------------------------------------------------------------
# Code <-> map


def _alternating_phases(code: SignedGaussCode) -> list[int]:
    """Phase per component making over/under strictly alternate along every
    word (over exactly at even position + phase).

    Every spherical projection admits such an assignment (checkerboard
    coloring), so an inconsistency here already proves non-realizability.
    """
    occ: dict[str, list[tuple[int, int]]] = {}
    for ci, word in enumerate(code.components):
        for pos, (label, _) in enumerate(word):
            occ.setdefault(label, []).append((ci, pos))
    k = len(code.components)
    phase = [-1] * k
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(k)}
    for (c1, p1), (c2, p2) in occ.values():
        # the two strands at a crossing must take opposite over/under roles
        need = (p1 + p2 + 1) & 1
        adj[c1].append((c2, need))
        adj[c2].append((c1, need))
    for root in range(k):
        if phase[root] != -1:
            continue
        phase[root] = 0
        stack = [root]
        while stack:
            a = stack.pop()
            for b, need in adj[a]:
                want = phase[a] ^ need
                if phase[b] == -1:
                    phase[b] = want
                    stack.append(b)
                elif phase[b] != want:
                    raise NotRealizable(
                        "no alternating over/under assignment exists "
                        "(parity obstruction); the code has no spherical "
                        "realization"
                    )
    return phase


def build_map(code: SignedGaussCode) -> CurveMap:
    """Realize a signed Gauss code as a spherical map.

    The sign of a crossing is its sense in the alternating diagram carried by
    the projection (the projection fixes that diagram up to mirror, and a
    global sign flip is exactly the mirror image).  The first visit to a
    crossing enters slot 0 and leaves at slot 2; the slot of the second
    entry is decoded from the sign and the over/under roles of the two
    visits.  Raises :class:`NotRealizable` when the induced map is not
    spherical.
    """
    phases = _alternating_phases(code)
    index: dict[str, int] = {}
    order: list[str] = []
    first_over: dict[str, bool] = {}
    visits_per_component: list[list[tuple[int, int]]] = []
    for ci, word in enumerate(code.components):
        visits = []
        for pos, (label, sign) in enumerate(word):
            over = (pos + phases[ci]) & 1 == 0
            if label not in index:
                index[label] = len(order)
                order.append(label)
                first_over[label] = over
                entry = 0
            else:
                # the local frame of (first passage, second passage) turns
                # counterclockwise iff sign and first-visit-over agree
                ccw = (sign > 0) == first_over[label]
                entry = 1 if ccw else 3
            visits.append((index[label], entry))
        visits_per_component.append(visits)
    n = len(order)
    opp = [-1] * (4 * n)
    for visits in visits_per_component:
        k = len(visits)
        for i, (c, entry) in enumerate(visits):
            exit_dart = 4 * c + ((entry + 2) & 3)
            c2, entry2 = visits[(i + 1) % k]
            entry_dart = 4 * c2 + entry2
            if opp[exit_dart] != -1 or opp[entry_dart] != -1:
                raise NotRealizable("inconsistent visit structure")
            opp[exit_dart] = entry_dart
            opp[entry_dart] = exit_dart
    return CurveMap(opp, tuple(order), code.free_circles)


def extract_code(m: CurveMap) -> SignedGaussCode:
    """Read a signed Gauss code back off a map (inverse of :func:`build_map`)."""
    first_entry: dict[int, int] = {}
    ccw: dict[int, bool] = {}
    occ: dict[int, list[tuple[int, int]]] = {}
    words: list[list[int]] = []
    for ci, orbit in enumerate(m.curve_components):
        word = []
        for pos, d in enumerate(orbit):
            arrival = m.opp[d]
            c, t = arrival >> 2, arrival & 3
            if c not in first_entry:
                first_entry[c] = t
            else:
                delta = (t - first_entry[c]) & 3
                ccw[c] = delta == 1
            occ.setdefault(c, []).append((ci, pos))
            word.append(c)
        words.append(word)
    # recover the alternating over/under roles (component phases)
    k = len(words)
    phase = [-1] * k
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(k)}
    for (c1, p1), (c2, p2) in occ.values():
        need = (p1 + p2 + 1) & 1
        adj[c1].append((c2, need))
        adj[c2].append((c1, need))
    for root in range(k):
        if phase[root] != -1:
            continue
        phase[root] = 0
        stack = [root]
        while stack:
            a = stack.pop()
            for b, need in adj[a]:
                want = phase[a] ^ need
                assert phase[b] in (-1, want), "spherical map lost alternation"
                if phase[b] == -1:
                    phase[b] = want
                    stack.append(b)
    signs: dict[int, int] = {}
    for c, ((c1, p1), _) in occ.items():
        over_first = (p1 + phase[c1]) & 1 == 0
        signs[c] = 1 if ccw[c] == over_first else -1
    # cosmetic: mirror any graph component whose least crossing came out '-'
    for comp in m.graph_components:
        if signs[comp[0]] < 0:
            for c in comp:
                signs[c] = -signs[c]
    comps = tuple(
        tuple((m.names[c], signs[c]) for c in word) for word in words
    )
    return SignedGaussCode(comps, m.free_circles)


# ---------------------------------------------------------------------------
# Faces


@dataclass(frozen=True)
class Face:
    """One face: its gon count and cyclic (crossing, corner) incidences.

    Corner ``k`` of a crossing sits between slots ``k`` and ``k+1 mod 4``.
    """

    gon: int
    corners: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class FaceReport:
    faces: tuple[Face, ...]
    free_circles: int

    @property
    def gon_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(f.gon for f in self.faces))


def faces(m: CurveMap) -> FaceReport:
    out = []
    for orbit in m.face_orbits:
        corners = tuple((m.names[d >> 2], (d - 1) & 3) for d in orbit)
        out.append(Face(len(orbit), corners))
    return FaceReport(tuple(out), m.free_circles)


def components(m: CurveMap) -> int:
    """Number of closed curves, free circles included."""
    return len(m.curve_components) + m.free_circles


def interleaved(m: CurveMap, c1: str, c2: str) -> bool:
    """Whether the traversal meets the two crossings in the pattern abab.

    The alternative patterns aabb / abba return ``False``.  Requires a
    single-component map and two distinct crossings.
    """
    if components(m) != 1 or m.n == 0:
        raise MultiComponentError("interleavement needs a single closed curve")
    i1, i2 = m.crossing_index(c1), m.crossing_index(c2)
    if i1 == i2:
        from .errors import InvalidMove

        raise InvalidMove("interleaved() needs two distinct crossings")
    seq = [d >> 2 for d in m.curve_components[0]]
    pos1 = [i for i, c in enumerate(seq) if c == i1]
    between = sum(1 for i, c in enumerate(seq) if c == i2 and pos1[0] < i < pos1[1])
    return between == 1


# ---------------------------------------------------------------------------
# Canonical form


def _canonical_key(m: CurveMap) -> bytes:
    comp_keys = sorted(
        _component_key(m, crossings) for crossings in m.graph_components
    )
    head = f"n{m.n}o{m.free_circles}"
    return ";".join([head] + comp_keys).encode()


def _component_key(m: CurveMap, crossings: tuple[int, ...]) -> str:
    dense = {c: i for i, c in enumerate(crossings)}
    nn = len(crossings)
    opp = [0] * (4 * nn)
    for c in crossings:
        for s in range(4):
            e = m.opp[4 * c + s]
            opp[4 * dense[c] + s] = 4 * dense[e >> 2] + (e & 3)
    # count curves in this component
    seen = [False] * (4 * nn)
    circuits = 0
    for d0 in range(4 * nn):
        if seen[d0]:
            continue
        circuits += 1
        d = d0
        while not seen[d]:
            seen[d] = True
            d = rot2(opp[d])
    if circuits == 2:
        seq = _curve_canon(opp, nn)
    else:
        seq = _rooted_canon(opp, nn)
    return f"c{nn}:" + ",".join(map(str, seq))


def _curve_canon(opp: list[int], n: int) -> tuple[int, ...]:
    """Minimal traversal encoding of a one-curve map over all starts,
    directions, and reflections.

    Token stream: first visit to a crossing emits ``4L``; the second visit
    emits ``4L + 1`` or ``4L + 2`` by the sense of the second strand, with the
    two senses swapped under reflection.
    """
    total = 2 * n
    best: list[int] | None = None
    for start in range(4 * n):
        for flip in (0, 1):
            seq: list[int] = []
            labels: dict[int, int] = {}
            entries: dict[int, int] = {}
            cur = start
            abort = False
            for i in range(total):
                arrival = opp[cur]
                c, t = arrival >> 2, arrival & 3
                if c not in labels:
                    labels[c] = len(labels)
                    entries[c] = t
                    tok = 4 * labels[c]
                else:
                    delta = (t - entries[c]) & 3
                    plus = (delta == 1) ^ flip
                    tok = 4 * labels[c] + (1 if plus else 2)
                if best is not None:
                    b = best[i]
                    if tok > b:
                        abort = True
                        break
                    if tok < b:
                        best = None  # strictly better; finish this walk fresh
                seq.append(tok)
                cur = rot2(arrival)
            if not abort and (best is None or seq < best):
                best = seq
    assert best is not None
    return tuple(best)


def _rooted_canon(opp: list[int], n: int) -> tuple[int, ...]:
    """Minimal rooted relabeling of a general connected map.

    Darts are renumbered by a deterministic traversal (rotation first, then
    edge involution); the encoding lists the relabeled rotation and involution
    images.  Minimized over all roots and both global orientations.
    """
    total = 4 * n
    best: tuple[int, ...] | None = None
    for root in range(total):
        for orient in (0, 1):
            step = rot if orient == 0 else rot_inv
            new = {root: 0}
            order = [root]
            i = 0
            while i < len(order):
                d = order[i]
                i += 1
                for nb in (step(d), opp[d]):
                    if nb not in new:
                        new[nb] = len(order)
                        order.append(nb)
            enc = []
            for d in order:
                enc.append(new[step(d)])
                enc.append(new[opp[d]])
            cand = tuple(enc)
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def canonical_key(m: CurveMap) -> bytes:
    """Opaque key equal exactly for maps related by sphere homeomorphism,
    relabeling, traversal reversal, or mirror reflection."""
    return m.canonical_key


O_KEY = O_MAP.canonical_key


def equivalent(a: CurveMap, b: CurveMap) -> bool:
    return a.canonical_key == b.canonical_key


def mirror_map(m: CurveMap) -> CurveMap:
    """The mirror image: every crossing's cyclic slot order reversed."""

    def ref(d: int) -> int:
        return (d & ~3) | ((-d) & 3)

    opp = [0] * (4 * m.n)
    for d in range(4 * m.n):
        opp[ref(d)] = ref(m.opp[d])
    return CurveMap(opp, m.names, m.free_circles)
