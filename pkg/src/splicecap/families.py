"""Twist-region families, connected sums, prime factorization, and the
classifier of projections by their splice unknotting count.

The three generated families are closures of vertical twist columns:

* torus ``T(l)``: one column of ``2l - 1`` crossings, braid-closed;
* rational ``R(m, n)``: a torus column of ``2n - 1`` crossings with a
  ``2m``-crossing clasp attached across one of its bigons;
* pretzel ``P(p, q, r)``: three columns of ``2p``, ``2q - 1``, ``2r - 1``
  crossings, pretzel-closed.

Crossing counts are ``2l - 1``, ``2m + 2n - 1`` and ``2p + 2q + 2r - 2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .curvemap import (
    CurveMap,
    SignedGaussCode,
    build_map,
    components,
    extract_code,
    label_sort_key,
    O_KEY,
)
from .errors import InvalidMove, MultiComponentError

__all__ = [
    "FamilySpec",
    "Torus",
    "Rational",
    "Pretzel",
    "Sum",
    "ClassLabel",
    "ClassKind",
    "gen_family",
    "gen_torus",
    "gen_rational",
    "gen_pretzel",
    "connected_sum",
    "decompose_prime",
    "is_prime",
    "classify_projection",
    "match_family",
]


# ---------------------------------------------------------------------------
# Family specifications


@dataclass(frozen=True)
class Torus:
    l: int

    def __post_init__(self):
        if self.l < 2:
            raise InvalidMove("torus family needs l >= 2")

    @property
    def crossings(self) -> int:
        return 2 * self.l - 1

    def __str__(self) -> str:
        return f"Torus({self.l})"


@dataclass(frozen=True)
class Rational:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 2:
            raise InvalidMove("rational family needs m >= 1, n >= 2")

    @property
    def crossings(self) -> int:
        return 2 * self.m + 2 * self.n - 1

    def __str__(self) -> str:
        return f"Rational({self.m},{self.n})"


@dataclass(frozen=True)
class Pretzel:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 1:
            raise InvalidMove("pretzel family needs p, q, r >= 1")

    @property
    def crossings(self) -> int:
        return 2 * (self.p + self.q + self.r) - 2

    def __str__(self) -> str:
        return f"Pretzel({self.p},{self.q},{self.r})"


@dataclass(frozen=True)
class Sum:
    parts: tuple

    @property
    def crossings(self) -> int:
        return sum(p.crossings for p in self.parts)

    def __str__(self) -> str:
        return " # ".join(str(p) for p in self.parts)


FamilySpec = Torus | Rational | Pretzel | Sum


# ---------------------------------------------------------------------------
# Column gadgets
#
# A twist column of k crossings, drawn upright, uses slots
# 0 = NE, 1 = NW, 2 = SW, 3 = SE at every crossing (counterclockwise), with
# crossing i's SW/SE joined to crossing i+1's NW/NE.  The loose ends are the
# top crossing's NW/NE and the bottom crossing's SW/SE.


def _column(opp: list[int], first: int, k: int) -> tuple[int, int, int, int]:
    """Wire a chain of ``k`` crossings starting at index ``first``; returns
    the loose ends (top-left, top-right, bottom-left, bottom-right)."""
    for i in range(k - 1):
        a = 4 * (first + i)
        b = 4 * (first + i + 1)
        opp[a + 2] = b + 1
        opp[b + 1] = a + 2
        opp[a + 3] = b + 0
        opp[b + 0] = a + 3
    top = 4 * first
    bot = 4 * (first + k - 1)
    return top + 1, top + 0, bot + 2, bot + 3


def _join(opp: list[int], a: int, b: int) -> None:
    opp[a] = b
    opp[b] = a


def gen_torus(l: int) -> CurveMap:
    """The (2, 2l-1)-torus knot projection: one braid-closed twist column."""
    k = Torus(l).crossings
    opp = [-1] * (4 * k)
    tl, tr, bl, br = _column(opp, 0, k)
    _join(opp, tl, bl)
    _join(opp, tr, br)
    return CurveMap(opp)


def gen_rational(m: int, n: int) -> CurveMap:
    """The (2m, 2n-1)-rational knot projection: a clasp of 2m crossings
    against a twist row of 2n-1 crossings (the double-twist shape)."""
    spec = Rational(m, n)
    a = [str(i + 1) for i in range(2 * m)]
    b = [str(2 * m + i + 1) for i in range(2 * n - 1)]
    word = a + b + a + b[::-1]
    code = SignedGaussCode((tuple((lab, 1) for lab in word),))
    out = build_map(code)
    assert out.n == spec.crossings and components(out) == 1
    return out


def gen_pretzel(p: int, q: int, r: int) -> CurveMap:
    """The (2p, 2q-1, 2r-1)-pretzel knot projection: three pretzel-closed
    twist columns."""
    spec = Pretzel(p, q, r)
    return _pretzel_columns((2 * p, 2 * q - 1, 2 * r - 1), expect=spec.crossings)


def _pretzel_columns(cols: tuple[int, ...], expect: int | None = None) -> CurveMap:
    """Pretzel closure of vertical twist columns (a curation helper too)."""
    total = sum(cols)
    if expect is not None:
        assert total == expect
    opp = [-1] * (4 * total)
    ends = []
    first = 0
    for k in cols:
        ends.append(_column(opp, first, k))
        first += k
    ncols = len(cols)
    for j in range(ncols):
        tl_next = ends[(j + 1) % ncols][0]
        bl_next = ends[(j + 1) % ncols][2]
        _join(opp, ends[j][1], tl_next)   # top-right to next top-left
        _join(opp, ends[j][3], bl_next)   # bottom-right to next bottom-left
    m = CurveMap(opp)
    if components(m) != 1:
        raise MultiComponentError(
            f"pretzel closure of columns {cols} is not a knot projection"
        )
    return m


def gen_family(spec: FamilySpec) -> CurveMap:
    """Standard projection of a family member (single component, spherical)."""
    if isinstance(spec, Torus):
        return gen_torus(spec.l)
    if isinstance(spec, Rational):
        return gen_rational(spec.m, spec.n)
    if isinstance(spec, Pretzel):
        return gen_pretzel(spec.p, spec.q, spec.r)
    if isinstance(spec, Sum):
        out = gen_family(spec.parts[0])
        for part in spec.parts[1:]:
            out = connected_sum(out, None, gen_family(part), None)
        return out
    raise InvalidMove(f"unknown family spec {spec!r}")


# ---------------------------------------------------------------------------
# Connected sums and prime factorization


def _word_and_edges(m: CurveMap) -> tuple[list[tuple[str, int]], list[int]]:
    code = extract_code(m)
    word = list(code.components[0])
    # edge traversed after visit i is the exit dart at position i of the walk
    return word, list(m.curve_components[0])


def _rotate_after_lowest(word: list[tuple[str, int]]) -> list[tuple[str, int]]:
    lowest = min((lab for lab, _ in word), key=label_sort_key)
    k = next(i for i, (lab, _) in enumerate(word) if lab == lowest)
    return word[k + 1 :] + word[: k + 1]


def connected_sum(
    p1: CurveMap,
    dart1: tuple[str, int] | None,
    p2: CurveMap,
    dart2: tuple[str, int] | None,
) -> CurveMap:
    """Connected sum of two knot projections at chosen basepoint arcs.

    The basepoint arc of each factor is the edge of the given dart; by
    default, the arc following the first visit to the lowest-labeled
    crossing.  Realized as word concatenation at the basepoints, crossings
    relabeled ``1..n1+n2``.
    """
    for p in (p1, p2):
        if components(p) != 1:
            raise MultiComponentError("connected sum needs knot projections")
    if p1.n == 0:
        return _relabel(p2)
    if p2.n == 0:
        return _relabel(p1)
    w1 = _cut_word(p1, dart1)
    w2 = _cut_word(p2, dart2)
    relabeled: list[tuple[str, int]] = []
    mapping: dict[tuple[int, str], str] = {}
    for which, w in ((1, w1), (2, w2)):
        for lab, sign in w:
            key = (which, lab)
            if key not in mapping:
                mapping[key] = str(len(mapping) + 1)
            relabeled.append((mapping[key], sign))
    code = SignedGaussCode((tuple(relabeled),), p1.free_circles + p2.free_circles)
    return build_map(code)


def _relabel(m: CurveMap) -> CurveMap:
    if m.n == 0:
        return m
    return build_map(extract_code(m))


def _cut_word(m: CurveMap, dart: tuple[str, int] | None) -> list[tuple[str, int]]:
    """The factor's word cut open at the chosen basepoint arc."""
    word, exits = _word_and_edges(m)
    if dart is None:
        return _rotate_after_lowest(word)
    d = m.dart(*dart)
    edge = {d, m.opp[d]}
    for i, e in enumerate(exits):
        if e in edge:
            return word[i + 1 :] + word[: i + 1]
    raise InvalidMove("basepoint dart not found on the traversal")


def _sub_factor(m: CurveMap, orbit: list[int], s: int, length: int) -> CurveMap:
    """Close off the traversal stretch ``s .. s+length-1`` as its own map."""
    k = len(orbit)
    crossings = sorted({m.opp[orbit[(s + i) % k]] >> 2 for i in range(length)})
    dense = {c: j for j, c in enumerate(crossings)}
    entry_in = m.opp[orbit[s % k]]
    exit_out = orbit[(s + length) % k]
    opp = [-1] * (4 * len(crossings))

    def tr(d: int) -> int:
        return 4 * dense[d >> 2] + (d & 3)

    for c in crossings:
        for slot in range(4):
            d = 4 * c + slot
            if d in (entry_in, exit_out):
                continue
            e = m.opp[d]
            if e in (entry_in, exit_out) or (e >> 2) not in dense:
                continue
            opp[tr(d)] = tr(e)
    opp[tr(entry_in)] = tr(exit_out)
    opp[tr(exit_out)] = tr(entry_in)
    names = tuple(m.names[c] for c in crossings)
    return CurveMap(opp, names, 0)


def decompose_prime(m: CurveMap) -> list[CurveMap]:
    """Maximal connected-sum factorization of a knot projection.

    Returns prime factors in canonical-key order; the simple closed curve
    factors into nothing.  A factor is cut off wherever a stretch of the
    traversal closes over its own crossings, i.e. some rotation of the Gauss
    word divides into two label-disjoint halves.
    """
    if components(m) != 1:
        raise MultiComponentError("prime decomposition needs a knot projection")
    factors: list[CurveMap] = []

    def split(m: CurveMap) -> None:
        if m.n == 0:
            return
        orbit = list(m.curve_components[0])
        word = [m.opp[d] >> 2 for d in orbit]
        k = len(word)
        for s in range(k):
            seen: set[int] = set()
            closed = 0
            for length in range(1, k):
                lab = word[(s + length - 1) % k]
                if lab in seen:
                    closed += 1
                else:
                    seen.add(lab)
                if closed == len(seen):
                    split(_sub_factor(m, orbit, s, length))
                    split(_sub_factor(m, orbit, s + length, k - length))
                    return
        factors.append(m)

    split(m)
    factors.sort(key=lambda f: f.canonical_key)
    return factors


def is_prime(m: CurveMap) -> bool:
    """Prime: not the simple closed curve and not a nontrivial sum."""
    if m.n == 0:
        return False
    return len(decompose_prime(m)) == 1


# ---------------------------------------------------------------------------
# Classification


class ClassKind(enum.Enum):
    U0 = 0
    U1 = 1
    U2 = 2
    U_AT_LEAST_3 = 3


@dataclass(frozen=True)
class ClassLabel:
    kind: ClassKind
    detail: tuple = ()

    @property
    def index(self) -> int:
        return self.kind.value

    def __str__(self) -> str:
        if not self.detail:
            return self.kind.name
        return f"{self.kind.name}({' # '.join(str(d) for d in self.detail)})"


@lru_cache(maxsize=None)
def _family_keys_by_count(n: int) -> dict[bytes, FamilySpec]:
    """Canonical keys of all family members with exactly ``n`` crossings."""
    out: dict[bytes, FamilySpec] = {}
    specs: list[FamilySpec] = []
    if n >= 3 and n % 2 == 1:
        specs.append(Torus((n + 1) // 2))
    for m in range(1, n // 2 + 1):
        rest = n - 2 * m
        if rest >= 3 and rest % 2 == 1:
            specs.append(Rational(m, (rest + 1) // 2))
    for p in range(1, n // 2 + 1):
        for q in range(1, n // 2 + 1):
            rr = n + 2 - 2 * p - 2 * q
            if rr >= 2 and rr % 2 == 0:
                specs.append(Pretzel(p, q, rr // 2))
    for spec in specs:
        key = gen_family(spec).canonical_key
        out.setdefault(key, spec)
    return out


def match_family(q: CurveMap) -> FamilySpec | None:
    """The family member equivalent to a kink-free projection, if any."""
    if q.n == 0:
        return None
    return _family_keys_by_count(q.n).get(q.canonical_key)


def classify_projection(m: CurveMap) -> ClassLabel:
    """Theorem-style class of a knot projection by splice unknotting count.

    ``U0`` for kink-closures of the simple circle; ``U1`` for the torus
    family closure; ``U2`` for rational or pretzel members and sums of two
    torus members; everything else needs at least three non-kink splices.
    """
    from .search import reduce_ri

    if components(m) != 1:
        raise MultiComponentError("classification needs a knot projection")
    q = reduce_ri(m)
    if q.canonical_key == O_KEY:
        return ClassLabel(ClassKind.U0)
    factors = []
    for f in decompose_prime(q):
        f = reduce_ri(f)
        if f.canonical_key != O_KEY:
            factors.append(f)
    if not factors:
        return ClassLabel(ClassKind.U0)
    if len(factors) == 1:
        spec = match_family(factors[0])
        if isinstance(spec, Torus):
            return ClassLabel(ClassKind.U1, (spec,))
        if isinstance(spec, (Rational, Pretzel)):
            return ClassLabel(ClassKind.U2, (spec,))
        return ClassLabel(ClassKind.U_AT_LEAST_3)
    if len(factors) == 2:
        s1, s2 = (match_family(f) for f in factors)
        if isinstance(s1, Torus) and isinstance(s2, Torus):
            return ClassLabel(ClassKind.U2, (s1, s2))
    return ClassLabel(ClassKind.U_AT_LEAST_3)
