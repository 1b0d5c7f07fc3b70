"""Draw a scene as SVG snapshots.

Renders the 16-point lower-bound scene a moment before, at, and after its
burst of simultaneous 4-member lines, plus one frame per event of a small
crossing scene. Frames land in ./demo_frames next to wherever you run
this from.
"""

from fractions import Fraction
from pathlib import Path

from kineticlines import (
    KineticPoint,
    Scene,
    gen_lower_bound,
    render_at_events,
    render_scene,
)

out = Path("demo_frames")
out.mkdir(exist_ok=True)

scene = gen_lower_bound(16, 4)
times = [Fraction(-1, 2), Fraction(0), Fraction(1, 2)]
for t, svg in zip(times, render_scene(scene, times)):
    path = out / f"grid_t_{t.numerator}_{t.denominator}.svg"
    path.write_text(svg)
    print(f"wrote {path}")

crossing = Scene(
    (
        KineticPoint.make("a", (0, 0), (0, 0)),
        KineticPoint.make("b", (0, 1), (1, 0)),
        KineticPoint.make("c", (4, 0), (0, 1)),
    )
)
events, svgs = render_at_events(crossing)
for i, (event, svg) in enumerate(zip(events, svgs)):
    path = out / f"crossing_event{i}_k{event.k}.svg"
    path.write_text(svg)
    print(f"wrote {path}  (event at t = {event.time})")
