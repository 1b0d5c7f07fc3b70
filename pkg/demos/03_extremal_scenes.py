"""Scenes at both ends of the spectrum.

Among n points in general position, every triple lines up at most twice,
so a scene sees at most 2*C(n,3) distinct collinearity events. The tight
family actually reaches that ceiling; the circle family never produces a
single event; the lower-bound family mass-produces events with many
members at once.
"""

import json
import math

from kineticlines import (
    audit_bounds,
    count_k_collinearities,
    enumerate_events,
    gen_lower_bound,
    gen_no_collinearity,
    gen_tight,
    verify_tight_certificate,
)

print("tight family: every one of the C(n,3) triples lines up twice")
for n in range(3, 8):
    scene = gen_tight(n)
    events = enumerate_events(scene)
    cert = verify_tight_certificate(scene)
    print(
        f"  n={n}: {len(events):3d} events of {2 * math.comb(n, 3):3d} possible,"
        f" certificate {'ok' if cert.passed else 'FAILED'}"
    )

print()
print("circle family: same speeds, shared growing circle, zero events")
for n in (6, 12):
    scene = gen_no_collinearity(n)
    print(f"  n={n}: {len(enumerate_events(scene))} events")

print()
print("lower-bound family: many simultaneous 4-member lines at t=0")
scene = gen_lower_bound(16, 4)
events = enumerate_events(scene, k_min=4)
at_zero = [e for e in events if e.time.as_fraction() == 0]
print(f"  n=16, k=4: {count_k_collinearities(scene, 4)} events with >= 4 members")
print(f"  of those, {len(at_zero)} happen at t=0, for example:")
for e in at_zero[:3]:
    print(f"    t={e.time}  members={', '.join(e.members)}")

print()
print("audit: counts stay under the proven ceilings")
report = audit_bounds(scene, 4)
print(json.dumps(report.to_json(), indent=2, sort_keys=True))
