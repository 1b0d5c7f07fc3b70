"""Moving points, scenes, and the collinearity classification of a triple.

A kinetic point occupies pos + t * vel at time t. The determinant
det[[x_a(t), y_a(t), 1], [x_b(t), y_b(t), 1], [x_c(t), y_c(t), 1]]
is a polynomial in t of degree at most two; its real roots are the only
moments the triple can be collinear.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .exact_numbers import (
    AlgebraicTime,
    QuadValue,
    RationalLike,
    solve_quadratic,
)

Coord = tuple[Fraction, Fraction]
TimeLike = Union[AlgebraicTime, Fraction, int]


class SceneError(ValueError):
    """Raised when a scene violates the scene contract."""


@dataclass(frozen=True)
class KineticPoint:
    """A labeled point moving with constant velocity."""

    id: str
    pos: Coord
    vel: Coord

    @classmethod
    def make(cls, pid, pos, vel) -> "KineticPoint":
        px, py = pos
        vx, vy = vel
        return cls(str(pid), (Fraction(px), Fraction(py)), (Fraction(vx), Fraction(vy)))


@dataclass
class Scene:
    """A finite set of kinetic points with distinct ids and distinct motions.

    meta is free-form JSON-safe annotation; generators use it to record
    their parameters so verification steps can find them later.
    """

    points: tuple[KineticPoint, ...]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.points = tuple(self.points)
        by_id: dict[str, KineticPoint] = {}
        by_motion: dict[tuple[Coord, Coord], str] = {}
        for pt in self.points:
            if pt.id in by_id:
                raise SceneError(f"duplicate point id {pt.id!r}")
            by_id[pt.id] = pt
            key = (pt.pos, pt.vel)
            if key in by_motion:
                raise SceneError(
                    f"points {by_motion[key]!r} and {pt.id!r} share position and velocity"
                )
            by_motion[key] = pt.id
        self._by_id = by_id

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def point(self, pid: str) -> KineticPoint:
        try:
            return self._by_id[pid]
        except KeyError:
            raise SceneError(f"no point with id {pid!r}") from None


def position_at(point: KineticPoint, t: TimeLike) -> tuple[QuadValue, QuadValue]:
    """Exact planar position pos + t * vel, valid for algebraic times."""
    tv = QuadValue.of_time(t) if isinstance(t, AlgebraicTime) else QuadValue.rational(Fraction(t))
    return (tv * point.vel[0] + point.pos[0], tv * point.vel[1] + point.pos[1])


def position_at_rational(point: KineticPoint, t: RationalLike) -> Coord:
    """Fraction-only fast path of position_at for rational times."""
    t = Fraction(t)
    return (point.pos[0] + t * point.vel[0], point.pos[1] + t * point.vel[1])


def collinearity_polynomial(
    a: KineticPoint, b: KineticPoint, c: KineticPoint
) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (c2, c1, c0) of the triple's collinearity determinant.

    The determinant is expanded as the cross product of the linear-in-t
    difference vectors (a - c) and (b - c), so the degree never exceeds 2.
    """
    ux0, ux1 = a.pos[0] - c.pos[0], a.vel[0] - c.vel[0]
    uy0, uy1 = a.pos[1] - c.pos[1], a.vel[1] - c.vel[1]
    vx0, vx1 = b.pos[0] - c.pos[0], b.vel[0] - c.vel[0]
    vy0, vy1 = b.pos[1] - c.pos[1], b.vel[1] - c.vel[1]
    c0 = ux0 * vy0 - uy0 * vx0
    c1 = ux0 * vy1 + ux1 * vy0 - uy0 * vx1 - uy1 * vx0
    c2 = ux1 * vy1 - uy1 * vx1
    return (c2, c1, c0)


class TripleKind(Enum):
    ALWAYS_COLLINEAR = "always_collinear"
    COLLINEAR_AT = "collinear_at"
    NEVER_COLLINEAR = "never_collinear"


@dataclass(frozen=True)
class TripleClassification:
    """Outcome of classifying one triple of kinetic points.

    times are the exact collinearity moments, ascending, at most two.
    tangential marks a double root: the triple touches collinearity
    without crossing it. coincident_all marks three identical motions,
    which valid scenes reject upstream; it is carried for completeness.
    """

    kind: TripleKind
    times: tuple[AlgebraicTime, ...]
    tangential: bool
    coincident_all: bool


def classify_triple(
    a: KineticPoint, b: KineticPoint, c: KineticPoint
) -> TripleClassification:
    """Classify a triple as always, sometimes, or never collinear."""
    report = solve_quadratic(*collinearity_polynomial(a, b, c))
    coincident = a.pos == b.pos == c.pos and a.vel == b.vel == c.vel
    if report.identically_zero:
        return TripleClassification(TripleKind.ALWAYS_COLLINEAR, (), False, coincident)
    if report.roots:
        return TripleClassification(
            TripleKind.COLLINEAR_AT, report.roots, report.double_root, coincident
        )
    return TripleClassification(TripleKind.NEVER_COLLINEAR, (), False, coincident)


def collision_time(a: KineticPoint, b: KineticPoint) -> Optional[Fraction]:
    """The unique time two distinct kinetic points coincide, or None.

    Distinct points with equal velocities never meet; otherwise the two
    coordinate equations must agree on the same rational t.
    """
    if a.pos == b.pos and a.vel == b.vel:
        raise ValueError("identical kinetic points have no collision time")
    dvx = a.vel[0] - b.vel[0]
    dvy = a.vel[1] - b.vel[1]
    dpx = b.pos[0] - a.pos[0]
    dpy = b.pos[1] - a.pos[1]
    if dvx == 0 and dvy == 0:
        return None
    if dvx != 0:
        t = dpx / dvx
        return t if dvy * t == dpy else None
    if dpx != 0:
        return None
    return dpy / dvy
