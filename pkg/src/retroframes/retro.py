"""Biorthogonal systems and retro-dual diagnostics.

Given a family ``F`` and a set ``omega0`` of exempt measure points, a dual
candidate ``G`` must satisfy ``<G(w0), F(w)> = delta(w0, w)`` for every
``w0`` outside ``omega0`` and every ``w``, and must itself satisfy a lower
frame inequality (its analysis map is bounded below).  On a finite
truncation these turn into rank and least-squares questions, answered here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import numerics
from .errors import DimensionMismatch, FrameError, Infeasible, SpaceMismatch
from .frames import (
    DEFAULT_TOL,
    Frame,
    FrameBounds,
    analysis_matrix,
    removal_distances,
)


@dataclass(frozen=True)
class OmegaSubset:
    """Measure-point labels exempt from the biorthogonality condition."""

    excluded: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "excluded", frozenset(self.excluded))

    def indices(self, f: Frame) -> list[int]:
        unknown = self.excluded.difference(f.labels)
        if unknown:
            raise FrameError(f"omega0 labels not in the measure space: {sorted(map(str, unknown))}")
        return [i for i, w in enumerate(f.labels) if w in self.excluded]


def _omega(omega0) -> OmegaSubset:
    if omega0 is None:
        return OmegaSubset()
    if isinstance(omega0, OmegaSubset):
        return omega0
    return OmegaSubset(frozenset(omega0))


@dataclass(frozen=True)
class BiorthReport:
    rows: tuple  # labels w0 of the checked rows, i.e. the points outside omega0
    residual_matrix: np.ndarray
    max_residual: float
    holds: bool

    def as_dict(self) -> dict:
        return {
            "rows": list(self.rows),
            "residual_matrix": self.residual_matrix.tolist(),
            "max_residual": self.max_residual,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class DistanceProfile:
    x: np.ndarray
    distances: np.ndarray

    def as_dict(self) -> dict:
        return {"x": _vector_out(self.x), "distances": self.distances.tolist()}


class Verdict(str, enum.Enum):
    DUAL_CONFIRMED = "DUAL_CONFIRMED"
    NO_DUAL_WITNESS = "NO_DUAL_WITNESS"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class RetroVerdict:
    verdict: Verdict
    biorth: BiorthReport
    candidate_bounds: FrameBounds
    witness: np.ndarray | None
    rank_deficit: int
    truncation_dim: int
    attainable_rank: int
    span_gaps: np.ndarray
    candidate: Frame
    note: str

    @property
    def a0(self) -> float:
        return self.candidate_bounds.lower

    @property
    def b0(self) -> float:
        return self.candidate_bounds.upper

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "max_biorth_residual": self.biorth.max_residual,
            "a0": self.a0,
            "b0": self.b0,
            "rank_deficit": self.rank_deficit,
            "witness": None if self.witness is None else _vector_out(self.witness),
            "truncation_dim": self.truncation_dim,
            "attainable_rank": self.attainable_rank,
            "span_gaps": self.span_gaps.tolist(),
            "note": self.note,
        }


def _vector_out(v: np.ndarray) -> list:
    if np.iscomplexobj(v):
        return [[float(z.real), float(z.imag)] for z in v]
    return [float(z) for z in v]


def _require_same_space(f: Frame, g: Frame) -> None:
    if f.space != g.space or f.dim != g.dim:
        raise SpaceMismatch("F and G must share measure space and dimension")


def gram(g: Frame, f: Frame) -> np.ndarray:
    """``M[a, b] = <G(w_a), F(w_b)>``."""
    return g.vectors @ f.vectors.conj().T


def check_biorthogonality(
    f: Frame, g: Frame, omega0=None, tol: float = DEFAULT_TOL
) -> BiorthReport:
    """Residuals ``|<G(w0), F(w)> - delta(w0, w)|`` for ``w0`` outside ``omega0``."""
    _require_same_space(f, g)
    skip = set(_omega(omega0).indices(f))
    rows = [i for i in range(len(f)) if i not in skip]
    m = gram(g, f) - np.eye(len(f))
    res = np.abs(m[rows])
    worst = float(res.max()) if res.size else 0.0
    return BiorthReport(tuple(f.labels[i] for i in rows), res, worst, worst <= tol)


def min_norm_biorthogonal(f: Frame, omega0=None, tol: float = DEFAULT_TOL) -> Frame:
    """Smallest-norm ``G`` biorthogonal to ``f`` off ``omega0``; zero on ``omega0``.

    Each ``G(w0)`` solves ``<g, F(w)> = delta(w0, w)`` for all ``w`` in the
    least-norm sense, so it lies in the span of ``F``.  Raises Infeasible for
    the first ``w0`` whose system is inconsistent, which happens exactly when
    ``F(w0)`` lies in the span of the other vectors.
    """
    skip = set(_omega(omega0).indices(f))
    m, n = len(f), f.dim
    # <g, F(w)> = sum_j g_j conj(F(w)_j), i.e. conj(V) @ g
    a = f.vectors.conj()
    out = np.zeros((m, n), dtype=complex if f.field == "complex" else float)
    for i in range(m):
        if i in skip:
            continue
        e = np.zeros(m)
        e[i] = 1.0
        sol = numerics.min_norm_solve(a, e)
        if sol.residual > tol:
            raise Infeasible(
                f"no G({f.labels[i]!r}) is biorthogonal to F: F({f.labels[i]!r}) lies "
                f"in the span of the other vectors (residual {sol.residual:.3g})",
                label=f.labels[i],
                index=i,
            )
        out[i] = sol.x
    return f.with_vectors(out)


def exactness_profile(f: Frame) -> np.ndarray:
    """Distance of each ``F(w_i)`` to the span of the rest; exact iff all positive."""
    return removal_distances(f)


def distance_profile(g: Frame, x, depth: int | None = None) -> DistanceProfile:
    """``dist(x, L_k)`` for the nested spans ``L_k = span{G(w_1..w_k)}``, in label order."""
    x = np.asarray(x)
    if x.ndim != 1 or x.shape[0] != g.dim:
        raise DimensionMismatch(f"x of shape {x.shape} does not live in dimension {g.dim}")
    if depth is None:
        depth = len(g)
    if not 1 <= depth <= len(g):
        raise DimensionMismatch(f"depth must be in 1..{len(g)}, got {depth}")
    v = g.vectors
    d = np.array([numerics.distance_to_span(x, list(v[:k])) for k in range(1, depth + 1)])
    return DistanceProfile(x, d)


def analysis_lower_bound(g: Frame) -> tuple[float, float]:
    """``(a0, b0)``: squared extreme singular values of the weighted analysis map.

    ``a0 > 0`` certifies that ``y -> {<y, G(w)>}`` is bounded below on this
    truncation.
    """
    s = numerics.singular_values(analysis_matrix(g))
    b0 = float(s[0] ** 2)
    a0 = float(s[-1] ** 2) if len(g) >= g.dim else 0.0
    return a0, b0


def _witness(g: Frame) -> np.ndarray:
    _, _, vh = np.linalg.svd(analysis_matrix(g), full_matrices=True)
    y = vh[-1].conj()
    lead = np.flatnonzero(np.abs(y) > 1e-12)
    if lead.size:
        y = y * (abs(y[lead[0]]) / y[lead[0]])
    if g.field == "real":
        y = y.real
    return y


def retro_dual_verdict(
    f: Frame,
    omega0=None,
    candidate: Frame | None = None,
    tol: float = DEFAULT_TOL,
) -> RetroVerdict:
    """Decide, at this truncation, whether ``f`` has a retro dual off ``omega0``.

    DUAL_CONFIRMED: the candidate is biorthogonal and bounded below.

    NO_DUAL_WITNESS: the candidate is biorthogonal, a nonzero ``y`` is
    orthogonal to every ``G(w)``, and no biorthogonal completion can span the
    space.  Biorthogonal candidates differ from the least-norm one only by
    components orthogonal to ``span F`` on constrained rows, which leaves
    their rank fixed, so the best attainable rank is ``min(n, m)``; a witness
    is conclusive when that is below ``n``.  This is a statement about the
    finite truncation only.

    INCONCLUSIVE: anything else; ``rank_deficit`` and ``span_gaps`` (distance
    of each standard basis vector to ``span G``) are attached.
    """
    om = _omega(omega0)
    g = candidate if candidate is not None else min_norm_biorthogonal(f, om, tol)
    _require_same_space(f, g)
    n, m = f.dim, len(f)

    biorth = check_biorthogonality(f, g, om, tol)
    a0, b0 = analysis_lower_bound(g)
    bounds = FrameBounds(min(a0, b0), b0)
    rank = numerics.numerical_rank(g.vectors)
    attainable = min(n, m)
    eye = np.eye(n)
    gaps = np.array([numerics.distance_to_span(eye[j], list(g.vectors)) for j in range(n)])
    witness = _witness(g) if a0 <= tol else None

    if biorth.holds and a0 > tol:
        verdict = Verdict.DUAL_CONFIRMED
        note = f"biorthogonal candidate bounded below with a0={a0:.6g} at dimension {n}"
    elif biorth.holds and witness is not None and attainable < n:
        verdict = Verdict.NO_DUAL_WITNESS
        note = (
            f"finite-truncation evidence at dimension {n}: {m} measure points cannot "
            f"support a bounded-below analysis map; witness y has <y, G(w)> = 0 for all w"
        )
    else:
        verdict = Verdict.INCONCLUSIVE
        why = "candidate not biorthogonal" if not biorth.holds else "candidate not bounded below"
        note = f"{why}; rank deficit {n - rank}, attainable rank {attainable} of {n}"

    return RetroVerdict(
        verdict=verdict,
        biorth=biorth,
        candidate_bounds=bounds,
        witness=witness,
        rank_deficit=n - rank,
        truncation_dim=n,
        attainable_rank=attainable,
        span_gaps=gaps,
        candidate=g,
        note=note,
    )


def biorthogonal_completions(f: Frame) -> np.ndarray:
    """Orthonormal basis (columns) of the freedom left in each constrained ``G(w0)``.

    Any ``G(w0) + P z`` with ``P`` the projector onto these columns stays
    biorthogonal; the columns span the orthogonal complement of ``span F``.
    """
    return numerics.null_space(f.vectors.conj())
