"""Scene generators with known extremal or degenerate behavior.

Families:
  tight / tight_ellipse   n unit-speed (resp. distinct-speed) points whose
                          triples each turn collinear exactly twice, so the
                          event count hits 2*C(n,3).
  no_collinearity         points riding a growing circle; no three are ever
                          collinear and no two ever collide.
  no_collinearity_distinct  stretched variant with pairwise distinct speeds
                          and pairwise non-parallel directions.
  lower_bound             many k-member events: two drifting columns when n
                          is large relative to k, else coincident clusters
                          on a parabola.
  random                  seeded scenes with small rational coordinates.

The circle-based families need irrational data, so those coordinates are
rounded to a dyadic grid at a caller-chosen precision; every generated
scene is exact rational input from there on. verify_tight_certificate
re-checks, per instance and in exact arithmetic, the sign pattern that
forces each triple of a tight scene to have two collinearity times.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .kinematics import KineticPoint, Scene, collinearity_polynomial

__all__ = [
    "ConstructionParams",
    "build_scene",
    "gen_tight",
    "gen_tight_ellipse",
    "gen_no_collinearity",
    "gen_no_collinearity_distinct",
    "gen_lower_bound",
    "gen_random",
    "TightCertificate",
    "verify_tight_certificate",
]

DEFAULT_PRECISION_BITS = 40


def _round_dyadic(x: "mpmath.mpf", bits: int) -> Fraction:
    # round half up onto the grid of denominator 2**bits
    scaled = mpmath.floor(x * (1 << bits) + mpmath.mpf("0.5"))
    return Fraction(int(scaled), 1 << bits)


def _tight_angles(n: int):
    # angles in the fourth quadrant accumulating toward 3*pi/2
    return [3 * mpmath.pi / 2 + mpmath.pi / (4 * i) for i in range(1, n + 1)]


def _tight_points(n: int, bits: int, speed_of) -> list[KineticPoint]:
    points = []
    with mpmath.workprec(bits + 64):
        for i, theta in enumerate(_tight_angles(n), start=1):
            ct, st = mpmath.cos(theta), mpmath.sin(theta)
            chord = ct - st
            s = chord - mpmath.sqrt(chord * chord - 1)
            speed = speed_of(ct)
            points.append(
                KineticPoint.make(
                    f"p{i}",
                    (_round_dyadic(-s * ct, bits), _round_dyadic(-s * st, bits)),
                    (_round_dyadic(speed * ct, bits), _round_dyadic(speed * st, bits)),
                )
            )
    return points


def gen_tight(n: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> Scene:
    """Unit-speed scene whose event count reaches 2*C(n,3), all triples."""
    if n < 3:
        raise ValueError("tight scenes need n >= 3")
    points = _tight_points(n, precision_bits, lambda ct: mpmath.mpf(1))
    return Scene(
        tuple(points),
        meta={
            "construction": "tight",
            "n": n,
            "precision_bits": precision_bits,
            "order_by_angle": [f"p{i}" for i in range(n, 0, -1)],
        },
    )


def gen_tight_ellipse(n: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> Scene:
    """Tight-style scene with pairwise distinct speeds."""
    if n < 3:
        raise ValueError("tight scenes need n >= 3")
    points = _tight_points(n, precision_bits, lambda ct: 1 / (1 - ct / 2))
    return Scene(
        tuple(points),
        meta={
            "construction": "tight_ellipse",
            "n": n,
            "precision_bits": precision_bits,
            "order_by_angle": [f"p{i}" for i in range(n, 0, -1)],
        },
    )


def _circle_param(i: int) -> tuple[Fraction, Fraction]:
    # rational point on the unit circle from the tangent half-angle s
    s = Fraction(i + 1, i)
    x = (1 - s * s) / (1 + s * s)
    y = 2 * s / (1 + s * s)
    return x, y


def gen_no_collinearity(n: int) -> Scene:
    """Points on the unit circle rotating outward: position p, velocity p
    turned a quarter turn, so |p + t v|^2 = 1 + t^2 for every point and
    all n stay on a common circle at every time. No event ever occurs and
    no two points ever meet."""
    if n < 1:
        raise ValueError("n must be positive")
    points = []
    for i in range(1, n + 1):
        x, y = _circle_param(i)
        points.append(KineticPoint.make(f"p{i}", (x, y), (y, -x)))
    return Scene(tuple(points), meta={"construction": "no_collinearity", "n": n})


def gen_no_collinearity_distinct(n: int) -> Scene:
    """Ellipse variant of gen_no_collinearity: x is stretched by 2, so the
    points ride x^2/4 + y^2 = 1 + t^2. Speeds are pairwise distinct
    (|v|^2 = 1 + 3 y^2 with distinct y^2) and directions are pairwise
    non-parallel."""
    if n < 1:
        raise ValueError("n must be positive")
    points = []
    for i in range(1, n + 1):
        x, y = _circle_param(i)
        points.append(KineticPoint.make(f"p{i}", (2 * x, y), (2 * y, -x)))
    return Scene(tuple(points), meta={"construction": "no_collinearity_distinct", "n": n})


def gen_lower_bound(n: int, k: int) -> Scene:
    """Scene with many events of k or more members.

    With n >= k*k: k families of n//k points on the columns x=0 and x=1,
    family i drifting at (0, i-1). Family points pass each other inside
    each column, and every coincidence spot pairs with every spot on the
    other column to give a k-member event. Leftover points (n mod k) are
    omitted and counted in meta["discarded_points"].

    With k <= n < k*k: n//k clusters of coincident points on the parabola
    y = x^2, point j moving at (j, j^2) with j unique across the scene.
    At t=0 each pair of cluster sites spans a line holding two whole
    clusters. No three points are ever always collinear in this regime.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if n < k:
        raise ValueError("n must be at least k")
    points = []
    if n >= k * k:
        m = n // k
        for fam in range(1, k + 1):
            side, idx = ("a", fam) if fam <= k // 2 else ("b", fam - k // 2)
            x = Fraction(0) if side == "a" else Fraction(1)
            for j in range(1, m + 1):
                points.append(
                    KineticPoint.make(
                        f"{side}{idx}_{j}", (x, Fraction(j)), (Fraction(0), Fraction(fam - 1))
                    )
                )
        meta = {
            "construction": "lower_bound",
            "regime": "two_line",
            "n": n,
            "k": k,
            "per_family": m,
            "discarded_points": n - m * k,
        }
    else:
        clusters = n // k
        base, rem = divmod(n, clusters)
        sizes = [base + 1] * rem + [base] * (clusters - rem)
        j = 0
        for ci, size in enumerate(sizes, start=1):
            site = (Fraction(ci), Fraction(ci * ci))
            for _ in range(size):
                j += 1
                points.append(
                    KineticPoint.make(f"c{ci}_{j}", site, (Fraction(j), Fraction(j * j)))
                )
        meta = {
            "construction": "lower_bound",
            "regime": "cluster",
            "n": n,
            "k": k,
            "cluster_sizes": sizes,
            "discarded_points": 0,
        }
    return Scene(tuple(points), meta=meta)


def gen_random(n: int, seed: int, coord_bound: int = 100) -> Scene:
    """Seeded scene with coordinates num/den, |num| <= coord_bound and
    den <= 4. Motions (position, velocity) are redrawn on collision with
    an earlier point's motion, so the scene is always valid."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = _random.Random(seed)

    def coord():
        return Fraction(rng.randint(-coord_bound, coord_bound), rng.randint(1, 4))

    points = []
    motions = set()
    for i in range(1, n + 1):
        while True:
            pos = (coord(), coord())
            vel = (coord(), coord())
            if (pos, vel) not in motions:
                motions.add((pos, vel))
                break
        points.append(KineticPoint.make(f"p{i}", pos, vel))
    return Scene(
        tuple(points),
        meta={"construction": "random", "n": n, "seed": seed, "coord_bound": coord_bound},
    )


CONSTRUCTION_KINDS = (
    "lower_bound",
    "no_collinearity",
    "no_collinearity_distinct",
    "random",
    "tight",
    "tight_ellipse",
)


@dataclass(frozen=True)
class ConstructionParams:
    """Validated request for one generated scene.

    k applies to lower_bound only; precision_bits to the tight family;
    seed and coord_bound to random. Inapplicable settings are ignored.
    """

    name: str
    n: int
    k: Optional[int] = None
    precision_bits: int = DEFAULT_PRECISION_BITS
    seed: int = 0
    coord_bound: int = 100

    def __post_init__(self):
        if self.name not in CONSTRUCTION_KINDS:
            raise ValueError(
                f"unknown construction {self.name!r}; choose from {CONSTRUCTION_KINDS}"
            )
        if self.name == "lower_bound":
            if self.k is None:
                raise ValueError("lower_bound requires k")
        elif self.k is not None:
            raise ValueError(f"construction {self.name!r} does not take k")

    def build(self) -> Scene:
        if self.name == "tight":
            return gen_tight(self.n, self.precision_bits)
        if self.name == "tight_ellipse":
            return gen_tight_ellipse(self.n, self.precision_bits)
        if self.name == "no_collinearity":
            return gen_no_collinearity(self.n)
        if self.name == "no_collinearity_distinct":
            return gen_no_collinearity_distinct(self.n)
        if self.name == "lower_bound":
            assert self.k is not None
            return gen_lower_bound(self.n, self.k)
        return gen_random(self.n, self.seed, self.coord_bound)


def build_scene(
    name: str,
    n: int,
    *,
    k: Optional[int] = None,
    seed: int = 0,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    coord_bound: int = 100,
) -> Scene:
    """Dispatch by family name; `k` is required for lower_bound."""
    return ConstructionParams(
        name=name,
        n=n,
        k=k,
        precision_bits=precision_bits,
        seed=seed,
        coord_bound=coord_bound,
    ).build()


@dataclass(frozen=True)
class TightCertificate:
    """Exact-arithmetic sign check that every triple of a tight scene turns
    collinear exactly twice: each triple polynomial must be genuinely
    quadratic, nonzero at t=0, and have the opposite sign at t = +/-T, so
    it owns one root on each side of zero and both inside (-T, T)."""

    passed: bool
    triples_checked: int
    failing_triples: tuple[tuple[str, str, str], ...]


def verify_tight_certificate(scene: Scene, big_time: int = 1 << 20) -> TightCertificate:
    order = scene.meta.get("order_by_angle")
    if scene.meta.get("construction") not in ("tight", "tight_ellipse") or not order:
        raise ValueError("scene was not produced by a tight construction")
    pts = [scene.point(pid) for pid in order]
    failing = []
    checked = 0
    from itertools import combinations

    for a, b, c in combinations(pts, 3):
        checked += 1
        c2, c1, c0 = collinearity_polynomial(a, b, c)
        at_plus = (c2 * big_time + c1) * big_time + c0
        at_minus = (c2 * big_time - c1) * big_time + c0
        ok = (
            c2 != 0
            and c0 != 0
            and (at_plus > 0) == (at_minus > 0) == (c0 < 0)
            and at_plus != 0
            and at_minus != 0
        )
        if not ok:
            failing.append((a.id, b.id, c.id))
    return TightCertificate(
        passed=not failing,
        triples_checked=checked,
        failing_triples=tuple(failing),
    )
