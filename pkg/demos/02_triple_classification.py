"""When do three moving points line up?

The signed area of the triangle a(t), b(t), c(t) is a quadratic in t, so
a triple is collinear never, once (a grazing touch), twice, or always.
Everything below is exact: times come out as rationals or as quadratic
irrationals in canonical form, never floats.
"""

from kineticlines import KineticPoint, classify_triple, collinearity_polynomial


def show(title, a, b, c):
    c2, c1, c0 = collinearity_polynomial(a, b, c)
    cls = classify_triple(a, b, c)
    print(f"--- {title}")
    print(f"  twice the signed area: ({c2})*t^2 + ({c1})*t + ({c0})")
    print(f"  verdict: {cls.kind.value}")
    for t in cls.times:
        note = " (tangential)" if cls.tangential else ""
        print(f"  collinear at t = {t}  ~ {t.approx():.6f}{note}")
    print()


mk = KineticPoint.make

show(
    "two crossings at rational times",
    mk("a", (0, 0), (0, 0)),
    mk("b", (0, 1), (1, 0)),
    mk("c", (4, 0), (0, 1)),
)

show(
    "two crossings at irrational times",
    mk("a", (0, 0), (0, 0)),
    mk("b", (0, 1), (1, 0)),
    mk("c", (1, 0), (2, 1)),
)

# double root: the moving point touches the line and retreats
show(
    "a single grazing touch",
    mk("a", (0, 0), (0, 0)),
    mk("b", (0, 1), (1, 0)),
    mk("c", (-1, -2), (0, 1)),
)

show(
    "never collinear",
    mk("a", (0, 0), (0, 0)),
    mk("b", (1, 0), (0, 0)),
    mk("c", (0, 1), (1, 0)),
)

# a rigid translation keeps collinear points collinear forever
show(
    "always collinear",
    mk("a", (0, 0), (2, 1)),
    mk("b", (1, 1), (2, 1)),
    mk("c", (3, 3), (2, 1)),
)
