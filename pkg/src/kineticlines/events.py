"""Enumeration of k-collinearity events.

An event is a pair (line, time): at that exact time, at least three scene
points lie on the line, they do not all coincide, and the member set is
not collinear at every time. Events are maximal: members are every scene
point on the line at that time. Enumeration classifies all triples,
expands each triple root to the maximal member set, filters degeneracies,
deduplicates on (canonical time, member set), and sorts by exact time.

brute_force_events re-derives the same list from scratch for small scenes
and shares only the exact-number layer with the enumeration path, so the
two act as independent implementations of one contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .exact_numbers import (
    AlgebraicTime,
    QuadValue,
    compare_times,
    solve_quadratic,
)
from .kinematics import (
    KineticPoint,
    Scene,
    TimeLike,
    TripleKind,
    classify_triple,
    position_at,
)

__all__ = [
    "CollinearityEvent",
    "BoundAudit",
    "enumerate_events",
    "count_k_collinearities",
    "always_collinear_groups",
    "audit_bounds",
    "brute_force_events",
]


@dataclass(frozen=True)
class CollinearityEvent:
    """One maximal (line, time) collinearity event.

    members are the ids of every point on the line at the event time,
    sorted. anchors are the first two members (in sorted order) with
    distinct positions there; they span the event line. tangential is set
    when some member triple only touches collinearity at this time (a
    double root). contains_subcollision is set when some, but not all,
    members coincide at the event time.
    """

    time: AlgebraicTime
    members: tuple[str, ...]
    k: int
    anchors: tuple[str, str]
    tangential: bool
    contains_subcollision: bool

    def __post_init__(self):
        if self.k != len(self.members):
            raise ValueError("k must equal the member count")

    def to_json(self) -> dict:
        return {
            "time": self.time.to_json(),
            "members": list(self.members),
            "k": self.k,
            "anchors": list(self.anchors),
            "tangential": self.tangential,
            "contains_subcollision": self.contains_subcollision,
        }


def _event_order(e1: CollinearityEvent, e2: CollinearityEvent) -> int:
    c = compare_times(e1.time, e2.time)
    if c:
        return c
    if e1.members == e2.members:
        return 0
    return -1 if e1.members < e2.members else 1


def _sorted_events(events: Iterable[CollinearityEvent]) -> list[CollinearityEvent]:
    return sorted(events, key=cmp_to_key(_event_order))


class _TripleClassifier:
    """Memoized classify_triple keyed by sorted point ids; classification
    is permutation invariant, so the sorted key is safe."""

    def __init__(self):
        self._cache: dict[tuple[str, str, str], object] = {}

    def __call__(self, a: KineticPoint, b: KineticPoint, c: KineticPoint):
        key = tuple(sorted((a.id, b.id, c.id)))
        hit = self._cache.get(key)
        if hit is None:
            hit = classify_triple(a, b, c)
            self._cache[key] = hit
        return hit


@dataclass(frozen=True)
class _EventShape:
    anchors: tuple[str, str]
    contains_subcollision: bool


class _EnumerationState:
    """Per-triple discovery accumulator with a deterministic reduction.

    Triples may be processed in any order or split across several states
    and merged afterwards; the finalized output is identical either way,
    because every derived quantity is a pure function of (time, members).
    """

    def __init__(self, scene: Scene, classifier: Optional[_TripleClassifier] = None):
        self.scene = scene
        self.classify = classifier if classifier is not None else _TripleClassifier()
        self._positions: dict[AlgebraicTime, dict[str, tuple[QuadValue, QuadValue]]] = {}
        self._members: dict[tuple[AlgebraicTime, str, str], tuple[str, ...]] = {}
        self._shapes: dict[tuple[AlgebraicTime, tuple[str, ...]], Optional[_EventShape]] = {}
        self.discoveries: dict[tuple[AlgebraicTime, tuple[str, ...]], bool] = {}

    def positions_at(self, t: AlgebraicTime) -> dict[str, tuple[QuadValue, QuadValue]]:
        cached = self._positions.get(t)
        if cached is None:
            cached = {p.id: position_at(p, t) for p in self.scene.points}
            self._positions[t] = cached
        return cached

    def process(self, a: KineticPoint, b: KineticPoint, c: KineticPoint) -> None:
        cls = self.classify(a, b, c)
        if cls.kind is not TripleKind.COLLINEAR_AT:
            return
        for t in cls.times:
            positions = self.positions_at(t)
            anchor = _first_distinct_pair((a.id, b.id, c.id), positions)
            if anchor is None:
                # all three coincide here; some triple with two distinct
                # members on the same line discovers the event instead
                continue
            members = self._expand(anchor, t, positions)
            key = (t, members)
            if self._shape(key, positions) is None:
                continue
            self.discoveries[key] = self.discoveries.get(key, False) or cls.tangential

    def _expand(
        self,
        anchor: tuple[str, str],
        t: AlgebraicTime,
        positions: dict[str, tuple[QuadValue, QuadValue]],
    ) -> tuple[str, ...]:
        memo_key = (t, anchor[0], anchor[1])
        cached = self._members.get(memo_key)
        if cached is None:
            pu = positions[anchor[0]]
            pv = positions[anchor[1]]
            cached = tuple(
                sorted(
                    pid
                    for pid, pw in positions.items()
                    if _orientation(pu, pv, pw).is_zero()
                )
            )
            self._members[memo_key] = cached
        return cached

    def _shape(
        self,
        key: tuple[AlgebraicTime, tuple[str, ...]],
        positions: dict[str, tuple[QuadValue, QuadValue]],
    ) -> Optional[_EventShape]:
        """Anchors and degeneracy flags for a candidate event, or None when
        the member set is filtered out (all coincident, or collinear at
        every time). Computed once per (time, members)."""
        if key in self._shapes:
            return self._shapes[key]
        _, members = key
        member_positions = [positions[m] for m in members]
        distinct = len(set(member_positions))
        shape: Optional[_EventShape] = None
        if distinct > 1:
            anchors = _first_distinct_pair(members, positions)
            assert anchors is not None
            u0 = self.scene.point(anchors[0])
            v0 = self.scene.point(anchors[1])
            always = all(
                self.classify(u0, v0, self.scene.point(w)).kind
                is TripleKind.ALWAYS_COLLINEAR
                for w in members
                if w not in anchors
            )
            if not always:
                shape = _EventShape(anchors, distinct < len(members))
        self._shapes[key] = shape
        return shape

    def merge(self, other: "_EnumerationState") -> None:
        """Fold another state's discoveries in; used to combine partitioned
        runs. Shared keys carry identical derived data by construction."""
        self._positions.update(other._positions)
        self._members.update(other._members)
        self._shapes.update(other._shapes)
        for key, tangential in other.discoveries.items():
            self.discoveries[key] = self.discoveries.get(key, False) or tangential

    def finalize(self, k_min: int) -> list[CollinearityEvent]:
        events = []
        for (t, members), tangential in self.discoveries.items():
            if len(members) < k_min:
                continue
            shape = self._shapes[(t, members)]
            assert shape is not None
            events.append(
                CollinearityEvent(
                    time=t,
                    members=members,
                    k=len(members),
                    anchors=shape.anchors,
                    tangential=tangential,
                    contains_subcollision=shape.contains_subcollision,
                )
            )
        return _sorted_events(events)


def _orientation(pa, pb, pc) -> QuadValue:
    return (pb[0] - pa[0]) * (pc[1] - pa[1]) - (pb[1] - pa[1]) * (pc[0] - pa[0])


def _first_distinct_pair(
    ids: Sequence[str], positions: dict[str, tuple[QuadValue, QuadValue]]
) -> Optional[tuple[str, str]]:
    for u, v in combinations(sorted(ids), 2):
        if positions[u] != positions[v]:
            return (u, v)
    return None


def enumerate_events(scene: Scene, k_min: int = 3) -> list[CollinearityEvent]:
    """All collinearity events with at least k_min members, sorted by time
    (ties broken by the member tuple). Deterministic for a given scene."""
    if k_min < 3:
        raise ValueError("k_min must be at least 3")
    state = _EnumerationState(scene)
    for a, b, c in combinations(scene.points, 3):
        state.process(a, b, c)
    return state.finalize(k_min)


def count_k_collinearities(scene: Scene, k: int) -> int:
    """Number of events whose member count is at least k."""
    if k < 3:
        raise ValueError("k must be at least 3")
    return sum(1 for e in enumerate_events(scene, 3) if e.k >= k)


def always_collinear_groups(
    scene: Scene, *, _classifier: Optional[_TripleClassifier] = None
) -> list[tuple[str, ...]]:
    """Maximal point sets (size >= 3) collinear at every time.

    For each pair, collect the companions that stay collinear with it
    forever; a companion set of size >= 3 is automatically a maximal
    group, and distinct groups share at most one point, so deduplicating
    the companion sets is enough.
    """
    classify = _classifier if _classifier is not None else _TripleClassifier()
    groups: set[tuple[str, ...]] = set()
    for a, b in combinations(scene.points, 2):
        companions = [a.id, b.id]
        for w in scene.points:
            if w.id == a.id or w.id == b.id:
                continue
            if classify(a, b, w).kind is TripleKind.ALWAYS_COLLINEAR:
                companions.append(w.id)
        if len(companions) >= 3:
            groups.add(tuple(sorted(companions)))
    return sorted(groups)


@dataclass(frozen=True)
class BoundAudit:
    """Event counts checked against the combinatorial ceilings.

    event_count counts events of size >= k; event_count_3 counts all
    events. bound_3 = 2*C(n,3) applies unconditionally; bound_k =
    floor(2*C(n,3) / C(k,3)) applies when no three points are always
    collinear. triple_incidences sums, over events, the member triples
    that are not always collinear.
    """

    n: int
    k: int
    event_count: int
    event_count_3: int
    triple_incidences: int
    bound_3: int
    bound_k: int
    no_three_always_collinear: bool
    passed: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "event_count": self.event_count,
            "event_count_3": self.event_count_3,
            "triple_incidences": self.triple_incidences,
            "bound_3": self.bound_3,
            "bound_k": self.bound_k,
            "no_three_always_collinear": self.no_three_always_collinear,
            "pass": self.passed,
        }


def audit_bounds(scene: Scene, k: int) -> BoundAudit:
    """Enumerate and check the event counts against both ceilings."""
    if k < 3:
        raise ValueError("k must be at least 3")
    classifier = _TripleClassifier()
    state = _EnumerationState(scene, classifier)
    for a, b, c in combinations(scene.points, 3):
        state.process(a, b, c)
    events = state.finalize(3)
    n = len(scene)
    count_3 = len(events)
    count_k = sum(1 for e in events if e.k >= k)
    bound_3 = 2 * math.comb(n, 3)
    bound_k = (2 * math.comb(n, 3)) // math.comb(k, 3)
    groups = always_collinear_groups(scene, _classifier=classifier)
    no_three_always = not groups
    incidences = 0
    for event in events:
        for trio in combinations(event.members, 3):
            pts = [scene.point(pid) for pid in trio]
            if classifier(*pts).kind is not TripleKind.ALWAYS_COLLINEAR:
                incidences += 1
    passed = count_3 <= bound_3 and (not no_three_always or count_k <= bound_k)
    return BoundAudit(
        n=n,
        k=k,
        event_count=count_k,
        event_count_3=count_3,
        triple_incidences=incidences,
        bound_3=bound_3,
        bound_k=bound_k,
        no_three_always_collinear=no_three_always,
        passed=passed,
    )


# --- independent oracle ----------------------------------------------------
#
# Everything below re-derives events without touching the enumeration path
# above or the kinematics helpers: triple polynomials come from orientation
# samples at three times, positions and orientations are recomputed locally,
# and member sets are grown from anchor pairs per candidate time.


def _bf_static_orientation(
    a: KineticPoint, b: KineticPoint, c: KineticPoint, t: Fraction
) -> Fraction:
    ax, ay = a.pos[0] + t * a.vel[0], a.pos[1] + t * a.vel[1]
    bx, by = b.pos[0] + t * b.vel[0], b.pos[1] + t * b.vel[1]
    cx, cy = c.pos[0] + t * c.vel[0], c.pos[1] + t * c.vel[1]
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _bf_poly(
    a: KineticPoint, b: KineticPoint, c: KineticPoint
) -> tuple[Fraction, Fraction, Fraction]:
    # degree <= 2, so values at t = -1, 0, 1 pin the polynomial down
    f_minus = _bf_static_orientation(a, b, c, Fraction(-1))
    f_zero = _bf_static_orientation(a, b, c, Fraction(0))
    f_plus = _bf_static_orientation(a, b, c, Fraction(1))
    c2 = (f_plus + f_minus) / 2 - f_zero
    c1 = (f_plus - f_minus) / 2
    return (c2, c1, f_zero)


def _bf_position(p: KineticPoint, t: AlgebraicTime) -> tuple[QuadValue, QuadValue]:
    tv = QuadValue.of_time(t)
    return (tv * p.vel[0] + p.pos[0], tv * p.vel[1] + p.pos[1])


def _bf_orientation(pa, pb, pc) -> QuadValue:
    return (pb[0] - pa[0]) * (pc[1] - pa[1]) - (pb[1] - pa[1]) * (pc[0] - pa[0])


def brute_force_events(
    scene: Scene,
    time_candidates: Optional[Iterable[TimeLike]] = None,
    max_points: int = 8,
) -> list[CollinearityEvent]:
    """Oracle re-derivation of the full event list for small scenes.

    Collects every triple root (or uses the supplied candidate times),
    then at each time grows member sets from every anchor pair and applies
    the event filters from first principles. Refuses scenes larger than
    max_points unless the caller raises the cap explicitly.
    """
    n = len(scene)
    if n > max_points:
        raise ValueError(f"scene has {n} points; the oracle cap is {max_points}")

    polys: dict[tuple[str, str, str], tuple[Fraction, Fraction, Fraction]] = {}
    reports: dict[tuple[str, str, str], object] = {}

    def poly_of(pts: Sequence[KineticPoint]):
        key = tuple(sorted(p.id for p in pts))
        if key not in polys:
            ordered = sorted(pts, key=lambda p: p.id)
            polys[key] = _bf_poly(*ordered)
        return polys[key]

    def report_of(pts: Sequence[KineticPoint]):
        key = tuple(sorted(p.id for p in pts))
        if key not in reports:
            reports[key] = solve_quadratic(*poly_of(pts))
        return reports[key]

    times: set[AlgebraicTime] = set()
    if time_candidates is None:
        for trio in combinations(scene.points, 3):
            times.update(report_of(trio).roots)
    else:
        for t in time_candidates:
            times.add(
                t if isinstance(t, AlgebraicTime) else AlgebraicTime.from_rational(Fraction(t))
            )

    events: list[CollinearityEvent] = []
    for t in times:
        positions = {p.id: _bf_position(p, t) for p in scene.points}
        seen: set[tuple[str, ...]] = set()
        for a, b in combinations(scene.points, 2):
            pa, pb = positions[a.id], positions[b.id]
            if pa == pb:
                continue
            members = tuple(
                sorted(
                    pid
                    for pid, pw in positions.items()
                    if _bf_orientation(pa, pb, pw).is_zero()
                )
            )
            if len(members) < 3 or members in seen:
                continue
            seen.add(members)
            member_points = [scene.point(m) for m in members]
            if all(
                poly_of(trio) == (0, 0, 0)
                for trio in combinations(member_points, 3)
            ):
                continue
            anchors = None
            for u, v in combinations(members, 2):
                if positions[u] != positions[v]:
                    anchors = (u, v)
                    break
            assert anchors is not None
            distinct = len({positions[m] for m in members})
            tangential = False
            for trio in combinations(member_points, 3):
                report = report_of(trio)
                if report.double_root and report.roots == (t,):
                    if len({positions[p.id] for p in trio}) > 1:
                        tangential = True
                        break
            events.append(
                CollinearityEvent(
                    time=t,
                    members=members,
                    k=len(members),
                    anchors=anchors,
                    tangential=tangential,
                    contains_subcollision=distinct < len(members),
                )
            )
    return _sorted_events(events)
