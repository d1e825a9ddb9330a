"""A continuous frame sampled by quadrature.

F(t) = (cos t, sin t) on [0, 2 pi) with Lebesgue measure is tight with bound
pi.  The midpoint rule integrates cos^2 and sin^2 exactly once there are at
least three nodes, so the discretised frame keeps the same bounds.
"""
import math

import numpy as np

from retroframes import Frame, canonical_dual, classify, optimal_bounds, uniform_quadrature

for m in (3, 4, 8, 16, 64):
    space = uniform_quadrature(0.0, 2 * math.pi, m)
    t = np.array(space.labels)
    f = Frame(space, np.column_stack([np.cos(t), np.sin(t)]))
    b = optimal_bounds(f)
    print(f"m={m:>3}: bounds=({b.lower:.15f}, {b.upper:.15f}), error={max(abs(b.lower - math.pi), abs(b.upper - math.pi)):.1e}")

c = classify(f)
print("tight:", c.is_tight, " Parseval:", c.is_parseval)
print("canonical dual is F / pi:", np.allclose(canonical_dual(f).vectors, f.vectors / math.pi))

# Weighting by 1 + cos(2t)/2 favours the first axis: bounds become 3 pi/4 and 5 pi/4
skewed = Frame(space.__class__(space.labels, space.weights * (1 + 0.5 * np.cos(2 * t))), f.vectors)
print("skewed weights bounds:", optimal_bounds(skewed))
