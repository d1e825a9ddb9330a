"""Measure spaces, frames, frame operators and frame bounds.

A frame here is a finite family ``F(w_1), ..., F(w_m)`` in ``K^n`` indexed by
a measure space with positive point weights ``mu(w_i)``.  The integral
``int |<x, F(w)>|^2 dmu(w)`` becomes the weighted sum
``sum_i mu_i |<x, F_i>|^2``; inner products are linear in the first slot,
``<x, y> = sum_j x_j conj(y_j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import numpy as np

from . import numerics
from .errors import DimensionMismatch, FrameError, InvalidInterval

DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class MeasureSpace:
    labels: tuple
    weights: np.ndarray

    def __post_init__(self):
        labels = tuple(self.labels)
        weights = np.array(self.weights, dtype=float)
        weights.setflags(write=False)
        if len(labels) < 1:
            raise FrameError("measure space needs at least one point")
        if weights.shape != (len(labels),):
            raise DimensionMismatch(
                f"{len(labels)} labels but weights of shape {weights.shape}"
            )
        if len(set(labels)) != len(labels):
            raise FrameError("measure-point labels must be unique")
        if not np.all(np.isfinite(weights)) or np.any(weights <= 0):
            raise FrameError("weights must be finite and strictly positive")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def counting(cls, m: int, labels: Sequence[Hashable] | None = None) -> "MeasureSpace":
        """Counting measure on ``m`` points labelled ``1..m`` unless given."""
        if labels is None:
            labels = range(1, m + 1)
        return cls(tuple(labels), np.ones(m))

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, MeasureSpace):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.weights, other.weights)

    def __hash__(self):
        return hash((self.labels, self.weights.tobytes()))

    @property
    def total(self) -> float:
        return float(self.weights.sum())

    def index_of(self, label) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class Frame:
    """A family of vectors, one per point of ``space``, stored as rows."""

    space: MeasureSpace
    vectors: np.ndarray
    field: str = "real"

    def __post_init__(self):
        if self.field not in ("real", "complex"):
            raise FrameError(f"field must be 'real' or 'complex', not {self.field!r}")
        dtype = float if self.field == "real" else complex
        v = np.asarray(self.vectors)
        if self.field == "real" and np.iscomplexobj(v):
            if np.any(v.imag != 0):
                raise FrameError("complex entries in a real frame")
            v = v.real
        v = np.array(v, dtype=dtype)
        if v.ndim != 2:
            raise DimensionMismatch(f"vectors must be a 2-d array, got shape {v.shape}")
        if v.shape[0] != len(self.space):
            raise DimensionMismatch(
                f"{v.shape[0]} vectors for a measure space of {len(self.space)} points"
            )
        if v.shape[1] < 1:
            raise DimensionMismatch("ambient dimension must be at least 1")
        if not np.all(np.isfinite(v)):
            raise FrameError("frame vectors contain NaN or Inf")
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @classmethod
    def from_vectors(cls, vectors, weights=None, labels=None, field=None) -> "Frame":
        v = np.asarray(vectors)
        if field is None:
            field = "complex" if np.iscomplexobj(v) else "real"
        m = v.shape[0]
        if labels is None:
            labels = range(1, m + 1)
        if weights is None:
            weights = np.ones(m)
        return cls(MeasureSpace(tuple(labels), weights), v, field)

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def labels(self) -> tuple:
        return self.space.labels

    @property
    def weights(self) -> np.ndarray:
        return self.space.weights

    def __len__(self):
        return self.vectors.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Frame):
            return NotImplemented
        return (
            self.field == other.field
            and self.space == other.space
            and np.array_equal(self.vectors, other.vectors)
        )

    def __hash__(self):
        return hash((self.space, self.field, self.vectors.tobytes()))

    def with_vectors(self, vectors) -> "Frame":
        """Same measure space, new vectors (field widened to complex if needed)."""
        v = np.asarray(vectors)
        field = "complex" if (self.field == "complex" or np.iscomplexobj(v)) else "real"
        return Frame(self.space, v, field)

    def subset(self, keep: Iterable[int]) -> "Frame":
        keep = list(keep)
        space = MeasureSpace(
            tuple(self.labels[i] for i in keep), self.weights[keep]
        )
        return Frame(space, self.vectors[keep], self.field)


@dataclass(frozen=True)
class FrameBounds:
    lower: float
    upper: float
    optimal: bool = True

    def __post_init__(self):
        if not (0 <= self.lower <= self.upper):
            raise FrameError(f"invalid bounds ({self.lower}, {self.upper})")

    def as_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "optimal": self.optimal}


@dataclass(frozen=True)
class FrameClass:
    is_bessel: bool
    is_frame: bool
    is_tight: bool
    is_parseval: bool
    is_exact: bool
    bounds: FrameBounds

    def as_dict(self) -> dict:
        return {
            "is_bessel": self.is_bessel,
            "is_frame": self.is_frame,
            "is_tight": self.is_tight,
            "is_parseval": self.is_parseval,
            "is_exact": self.is_exact,
            "bounds": self.bounds.as_dict(),
        }


def analysis_matrix(f: Frame) -> np.ndarray:
    """Weighted analysis matrix; row ``i`` is ``sqrt(mu_i) * conj(F_i)``.

    ``norm(T @ x)**2 == sum_i mu_i |<x, F_i>|^2`` for every ``x``.
    """
    return np.sqrt(f.weights)[:, None] * f.vectors.conj()


def frame_operator(f: Frame) -> np.ndarray:
    """``S = sum_i mu_i F_i F_i^*`` as an ``n x n`` Hermitian matrix."""
    t = analysis_matrix(f)
    s = t.conj().T @ t
    return (s + s.conj().T) / 2


def coefficient_energy(f: Frame, x) -> np.ndarray:
    """``sum_i mu_i |<x, F_i>|^2`` for a vector or for each column of ``x``."""
    y = analysis_matrix(f) @ np.asarray(x)
    return np.sum(np.abs(y) ** 2, axis=0)


def optimal_bounds(f: Frame) -> FrameBounds:
    """Best frame bounds: extreme eigenvalues of the frame operator.

    A vanishing lower bound means the family does not span the space.
    """
    ev = numerics.hermitian_eigenvalues(frame_operator(f))
    upper = max(float(ev[-1]), 0.0)
    lower = min(max(float(ev[0]), 0.0), upper)
    return FrameBounds(lower, upper, optimal=True)


def removal_distances(f: Frame) -> np.ndarray:
    """Distance of each ``F_i`` to the span of all the other vectors."""
    v = f.vectors
    out = np.empty(len(f))
    for i in range(len(f)):
        others = np.delete(v, i, axis=0)
        out[i] = numerics.distance_to_span(v[i], list(others))
    return out


def ceases_to_be_frame(f: Frame, remove: Iterable[int]) -> bool:
    """Whether dropping the indices ``remove`` shrinks the span of the family.

    The reference space is the span of the full family, so families that do
    not span ``K^n`` can still be tested for exactness.
    """
    remove = set(remove)
    keep = [i for i in range(len(f)) if i not in remove]
    full = numerics.numerical_rank(f.vectors)
    if not keep:
        return full > 0
    return numerics.numerical_rank(f.vectors[keep]) < full


def classify(f: Frame, tol: float = DEFAULT_TOL, remove: Iterable[int] | None = None) -> FrameClass:
    """Bessel / frame / tight / Parseval / exact flags with optimal bounds.

    Exactness is tested by single-point removal (``F_i`` outside the span of
    the others, for every ``i``).  Passing ``remove`` instead tests whether
    that particular set of indices is essential.
    """
    b = optimal_bounds(f)
    is_frame = b.lower > tol
    is_tight = is_frame and abs(b.upper - b.lower) <= tol * b.upper
    is_parseval = is_tight and abs(b.upper - 1) <= tol and abs(b.lower - 1) <= tol
    if remove is None:
        is_exact = bool(np.all(removal_distances(f) > tol))
    else:
        is_exact = ceases_to_be_frame(f, remove)
    return FrameClass(
        is_bessel=True,
        is_frame=bool(is_frame),
        is_tight=bool(is_tight),
        is_parseval=bool(is_parseval),
        is_exact=is_exact,
        bounds=b,
    )


def uniform_quadrature(a: float, b: float, m: int) -> MeasureSpace:
    """Midpoint rule on ``[a, b)`` with ``m`` nodes; labels are the nodes."""
    if not (np.isfinite(a) and np.isfinite(b)) or not a < b:
        raise InvalidInterval(f"need a < b, got a={a}, b={b}")
    if m < 1:
        raise InvalidInterval(f"need at least one node, got m={m}")
    h = (b - a) / m
    nodes = a + (np.arange(m) + 0.5) * h
    return MeasureSpace(tuple(float(t) for t in nodes), np.full(m, h))


def basis_vector(n: int, k: int, dtype=float) -> np.ndarray:
    """``chi_k`` in ``K^n``, 1-based like the sequence-space notation."""
    e = np.zeros(n, dtype=dtype)
    e[k - 1] = 1
    return e
