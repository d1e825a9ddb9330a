"""Canonical and alternate dual frames, and dual-pair verification."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from . import numerics
from .errors import NotAFrame, SpaceMismatch
from .frames import DEFAULT_TOL, Frame, FrameBounds, frame_operator, optimal_bounds

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualPairReport:
    reconstruction_residual: float
    g_bounds: FrameBounds
    is_dual: bool

    def as_dict(self) -> dict:
        return {
            "reconstruction_residual": self.reconstruction_residual,
            "g_bounds": self.g_bounds.as_dict(),
            "is_dual": self.is_dual,
        }


def _require_frame(f: Frame, tol: float) -> None:
    b = optimal_bounds(f)
    if b.lower <= tol:
        raise NotAFrame(f"lower frame bound {b.lower:.3g} <= tol {tol:.3g}")


def _require_same_space(f: Frame, g: Frame) -> None:
    if f.space != g.space:
        raise SpaceMismatch("frames are indexed by different measure spaces")
    if f.dim != g.dim:
        raise SpaceMismatch(f"ambient dimensions differ: {f.dim} vs {g.dim}")


def canonical_dual(f: Frame, tol: float = DEFAULT_TOL) -> Frame:
    """The family ``S^{-1} F(w)`` with ``S`` the frame operator of ``f``."""
    _require_frame(f, tol)
    s = frame_operator(f)
    return f.with_vectors(np.linalg.solve(s, f.vectors.T).T)


def reconstruction_operator(f: Frame, g: Frame) -> np.ndarray:
    """Matrix of ``x -> sum_i mu_i <x, G_i> F_i``."""
    _require_same_space(f, g)
    return f.vectors.T @ (f.weights[:, None] * g.vectors.conj())


def verify_hilbert_dual(f: Frame, g: Frame, tol: float = DEFAULT_TOL) -> DualPairReport:
    """Check that ``g`` reconstructs through ``f`` and is itself a frame.

    The residual is the largest ``norm(R e_j - e_j)`` over the standard basis,
    ``R`` being the synthesis-after-analysis map above.
    """
    r = reconstruction_operator(f, g)
    dev = r - np.eye(f.dim)
    residual = float(np.max(np.linalg.norm(dev, axis=0)))
    gb = optimal_bounds(g)
    return DualPairReport(residual, gb, bool(residual <= tol and gb.lower > tol))


def dual_perturbation_space(f: Frame) -> np.ndarray:
    """Orthonormal basis (columns, length m) of coefficient vectors ``c`` with
    ``sum_i mu_i c_i F_i = 0``.

    Adding ``c conj(z)^T``-type rank-one terms built from these directions to a
    dual never changes the reconstruction map.
    """
    synthesis = f.vectors.T * f.weights[None, :]
    return numerics.null_space(synthesis)


def alternate_duals(
    f: Frame,
    count: int,
    seed: int = 0,
    magnitude: float = 1.0,
    tol: float = DEFAULT_TOL,
) -> list[Frame]:
    """Canonical dual followed by ``count - 1`` randomly perturbed duals.

    Perturbations ``H`` satisfy ``sum_i mu_i <x, H_i> F_i = 0`` for all ``x``,
    so every member reconstructs.  When that space is trivial (``f`` exact)
    or ``magnitude`` is 0 only the canonical dual is returned.
    """
    canon = canonical_dual(f, tol)
    if count < 1:
        return []
    null = dual_perturbation_space(f)
    if null.shape[1] == 0 or magnitude == 0:
        if null.shape[1] == 0:
            log.info("frame is exact: the canonical dual is the only dual")
        return [canon]

    rng = np.random.default_rng(seed)
    complex_field = f.field == "complex"
    out = [canon]
    k, n = null.shape[1], f.dim
    for _ in range(count - 1):
        c = rng.standard_normal((k, n))
        if complex_field:
            c = c + 1j * rng.standard_normal((k, n))
        # conj(H) = N C  =>  sum_i mu_i F_i conj(H_i)^T = (F^T diag(mu) N) C = 0
        h = (null @ c).conj()
        h *= magnitude / max(np.linalg.norm(h), np.finfo(float).tiny)
        if not complex_field:
            h = h.real
        out.append(canon.with_vectors(canon.vectors + h))
    return out
