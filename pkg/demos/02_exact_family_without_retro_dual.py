"""An exact family whose biorthogonal partners never span.

F(w) = e_{w+1} + e_1 for w = 1..n-1 lives in R^n.  Each F(w) is outside the
span of the others, so biorthogonal families exist; yet every such family has
only n-1 members and misses a direction.  The diagnostics find that
direction explicitly.
"""
import numpy as np

from retroframes import (
    Frame,
    analysis_lower_bound,
    check_biorthogonality,
    distance_profile,
    exactness_profile,
    min_norm_biorthogonal,
    retro_dual_verdict,
)

n = 6
eye = np.eye(n)
f = Frame.from_vectors(eye[1:] + eye[0])

print("distance of each F(w) to the others:", exactness_profile(f).round(4))

g = min_norm_biorthogonal(f)
print("least-norm biorthogonal family:\n", g.vectors.round(4))
print("biorthogonality residual:", check_biorthogonality(f, g).max_residual)
print("a0, b0 of that family:", analysis_lower_bound(g))

v = retro_dual_verdict(f)
print("verdict:", v.verdict.value)
print("witness:", v.witness.round(4))
print(v.note)

# The hand-picked partner G(w) = e_{w+1} is biorthogonal too; e_1 is never reached
shifted = Frame.from_vectors(eye[1:])
print("shifted partner biorthogonal:", check_biorthogonality(f, shifted).holds)
print("dist(e1, span G(1..k)):", distance_profile(shifted, eye[0]).distances)
print("verdict with shifted partner:", retro_dual_verdict(f, candidate=shifted).verdict.value)
