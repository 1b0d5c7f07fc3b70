"""What does the set of points collinear with a moving pair look like?

For two points a(t), b(t) gliding along straight lines, collect every
spacetime point (P, t) such that P, a(t), b(t) lie on one line. That set
is a surface in (x, y, t) space, and its shape depends only on how the
two trajectories relate: same velocity, a collision, or neither.
"""

from fractions import Fraction

from kineticlines import KineticPoint, classify_surface, surface_of_pair

F = Fraction


def pt(pair):
    return f"({pair[0]}, {pair[1]})"


def show(title, a, b):
    surf = surface_of_pair(a, b)
    cls = classify_surface(a, b)
    print(f"--- {title}")
    print(f"  a: pos {pt(a.pos)}, vel {pt(a.vel)}")
    print(f"  b: pos {pt(b.pos)}, vel {pt(b.vel)}")
    names = ("x", "x*t", "y", "y*t", "1", "t", "t*t")
    terms = [f"{c}*{n}" for c, n in zip(surf.coefficients(), names) if c != 0]
    print(f"  surface: {' + '.join(terms)} = 0")
    print(f"  kind: {cls.kind.value}")
    if cls.plane is not None:
        print(f"  non-horizontal plane: {' '.join(str(v) for v in cls.plane)}")
    if cls.collision_time is not None:
        print(f"  collision at t = {cls.collision_time}")
    print()


# Same velocity: the connecting line just translates, sweeping a plane.
show(
    "parallel motion",
    KineticPoint.make("a", (0, 0), (1, 1)),
    KineticPoint.make("b", (3, 0), (1, 1)),
)

# A collision: at the meeting time every point of the plane is collinear
# with the pair, so the surface splits into that horizontal slice plus a
# slanted plane through both trajectories.
show(
    "head-on collision at t=2",
    KineticPoint.make("a", (0, 0), (1, 0)),
    KineticPoint.make("b", (2, 0), (0, 0)),
)

# Generic case: skew trajectories sweep a hyperbolic paraboloid. The two
# trajectories belong to one ruling of that saddle; a third point's line
# can only meet the saddle twice, which is why triples of points in
# general position line up at most twice.
show(
    "skew trajectories",
    KineticPoint.make("a", (0, 0), (0, 0)),
    KineticPoint.make("b", (0, 1), (1, 0)),
)
