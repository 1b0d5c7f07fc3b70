from fractions import Fraction

from hypothesis import strategies as st

from kineticlines import CollinearityEvent, KineticPoint, Scene


def rationals(bound: int = 50, max_den: int = 12):
    return st.fractions(
        min_value=Fraction(-bound), max_value=Fraction(bound), max_denominator=max_den
    )


def coords(bound: int = 20, max_den: int = 8):
    return st.tuples(rationals(bound, max_den), rationals(bound, max_den))


def kinetic_points(label: str):
    return st.builds(lambda pos, vel: KineticPoint.make(label, pos, vel), coords(), coords())


def triples():
    """Three points with pairwise distinct motions, as a valid scene would hold."""
    return st.tuples(kinetic_points("a"), kinetic_points("b"), kinetic_points("c")).filter(
        lambda t: len({(p.pos, p.vel) for p in t}) == 3
    )


def event_key(e: CollinearityEvent):
    return (str(e.time), e.members, e.anchors, e.tangential, e.contains_subcollision)


def serialized(events):
    return [event_key(e) for e in events]


def make_scene(*specs) -> Scene:
    return Scene(
        tuple(KineticPoint.make(pid, pos, vel) for pid, pos, vel in specs)
    )
