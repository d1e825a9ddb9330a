"""A dual that exists at every truncation while its lower bound decays.

F(w) = w^2 e_w and G(w) = e_w / w^2 are biorthogonal.  On R^n the analysis map
of G is bounded below by a0 = n^-4, positive for every n but tending to zero.
"""
import numpy as np

from retroframes import analysis_lower_bound, check_biorthogonality, retro_dual_verdict
from retroframes.scenarios import inverse_squared_basis, squared_weights_basis

print(f"{'n':>4} {'a0':>12} {'n^-4':>12} verdict")
for n in (2, 4, 8, 16, 32):
    f, g = squared_weights_basis(n), inverse_squared_basis(n)
    assert check_biorthogonality(f, g).holds
    a0, _ = analysis_lower_bound(g)
    v = retro_dual_verdict(f, candidate=g)
    print(f"{n:>4} {a0:>12.4e} {n ** -4.0:>12.4e} {v.verdict.value}")

# the least-norm construction recovers the same partner
f = squared_weights_basis(8)
from retroframes import min_norm_biorthogonal

print("least-norm partner equals e_w / w^2:",
      np.allclose(min_norm_biorthogonal(f).vectors, inverse_squared_basis(8).vectors))
