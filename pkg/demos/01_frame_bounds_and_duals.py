"""Frame bounds and duals of a redundant family.

The family {e1, e1, e2, e3} is a frame for R^3 with optimal bounds 1 and 2.
Because it is redundant it has many duals; we build the canonical one, check
two hand-written alternatives, and sample a few more at random.
"""
import numpy as np

from retroframes import (
    Frame,
    alternate_duals,
    canonical_dual,
    classify,
    frame_operator,
    optimal_bounds,
    verify_hilbert_dual,
)

eye = np.eye(3)
f = Frame.from_vectors(np.vstack([eye[:1], eye]))

print("frame operator:\n", frame_operator(f))
b = optimal_bounds(f)
print(f"optimal bounds: lower={b.lower}, upper={b.upper}")
print("classification:", classify(f).as_dict())

# S^-1 halves the duplicated vector and leaves the rest alone
canon = canonical_dual(f)
print("canonical dual:\n", canon.vectors)

# Any split of e1 between the two copies reconstructs as well
for name, vecs in {
    "zero then e1": np.vstack([np.zeros((1, 3)), eye]),
    "thirds": np.vstack([eye[:1] / 3, 2 * eye[:1] / 3, eye[1:]]),
}.items():
    rep = verify_hilbert_dual(f, f.with_vectors(vecs))
    print(f"{name:>13}: is_dual={rep.is_dual}, residual={rep.reconstruction_residual:.2e}")

# Random duals: canonical dual plus a component in the kernel of synthesis
for i, g in enumerate(alternate_duals(f, 4, seed=1)):
    rep = verify_hilbert_dual(f, g)
    print(f"dual {i}: residual={rep.reconstruction_residual:.1e}, first two rows={g.vectors[:2].round(3).tolist()}")

# An orthonormal basis is exact: its canonical dual is the only one
print("duals of an orthonormal basis:", len(alternate_duals(Frame.from_vectors(eye), 4)))
