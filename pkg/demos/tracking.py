"""Recovering the monodromy from samples alone.

The tracker only sees point clouds: it walks each coordinate loop, matches
consecutive fibers by optimal assignment and reads off how the base fiber
was permuted. Here the samples come from exact maps, so the answer can be
compared with the algebraic sigma. A too-coarse walk is refused.
"""

import numpy as np

from nval import sigma_generators, single
from nval.errors import ResolutionTooCoarse
from nval.tracker import FiberSampler, TrackerConfig, empirical_partition, sampler_from_map, track_loop

examples = {
    "circle n=4, d=2": single(4, [[2]]),
    "torus m=2": single(2, [[1, 0], [3, 4]]),
    "torus m=3": single(3, [[1, 2], [4, -1]]),
}
cfg = TrackerConfig(samples_per_loop=512)
for name, f in examples.items():
    ep = empirical_partition(sampler_from_map(f), cfg)
    exact = sigma_generators(f).generators
    print(f"{name}: tracked {[str(g) for g in ep.generators]}, exact {[str(g) for g in exact]}, "
          f"{ep.components} component(s)")

# any callable works as a sampler, e.g. a hand-written 3-valued circle map
s = FiberSampler(1, 3, lambda t: np.array([[(t[0] + k) / 3] for k in range(3)]))
print("\nhand-written sampler:", track_loop(s, 1, cfg))

try:
    track_loop(sampler_from_map(single(2, [[1]])), 1, TrackerConfig(samples_per_loop=2))
except ResolutionTooCoarse as exc:
    print("two samples per loop:", exc)
