"""JSON frame files.

Layout::

    {"dim": n, "field": "real" | "complex", "labels": [...],
     "weights": [...], "vectors": [[...], ...]}

Complex entries are ``[re, im]`` pairs.  ``weights`` may be omitted (counting
measure) and so may ``labels`` (``1..m``).  Weights are the raw measure
values; the square-root scaling of the analysis map is never stored.
Floats are written with ``repr`` so a file re-parses bit-exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import FrameError, FrameFileError
from .frames import Frame, MeasureSpace


def _scalar_out(z, complex_field: bool):
    if complex_field:
        z = complex(z)
        return [z.real, z.imag]
    return float(z)


def frame_to_dict(f: Frame) -> dict:
    cplx = f.field == "complex"
    return {
        "dim": f.dim,
        "field": f.field,
        "labels": list(f.labels),
        "weights": [float(w) for w in f.weights],
        "vectors": [[_scalar_out(z, cplx) for z in row] for row in f.vectors],
    }


def measure_space_to_dict(space: MeasureSpace) -> dict:
    return {"labels": list(space.labels), "weights": [float(w) for w in space.weights]}


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FrameFileError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _entry(value, where: str, complex_field: bool):
    if complex_field:
        if isinstance(value, list):
            if len(value) != 2:
                raise FrameFileError(f"{where}: complex entry must be [re, im]")
            return complex(_number(value[0], where + "[0]"), _number(value[1], where + "[1]"))
        return complex(_number(value, where))
    if isinstance(value, list):
        raise FrameFileError(f"{where}: [re, im] pair in a real frame")
    return _number(value, where)


def frame_from_dict(d) -> Frame:
    """Parse the frame layout; errors name the offending field."""
    if not isinstance(d, dict):
        raise FrameFileError("top level: expected a JSON object")
    for key in ("dim", "vectors"):
        if key not in d:
            raise FrameFileError(f"missing field '{key}'")
    dim = d["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise FrameFileError(f"dim: expected a positive integer, got {dim!r}")
    field = d.get("field", "real")
    if field not in ("real", "complex"):
        raise FrameFileError(f"field: expected 'real' or 'complex', got {field!r}")
    cplx = field == "complex"

    rows = d["vectors"]
    if not isinstance(rows, list) or not rows:
        raise FrameFileError("vectors: expected a non-empty list of vectors")
    parsed = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise FrameFileError(f"vectors[{i}]: expected a list of {dim} entries")
        parsed.append([_entry(z, f"vectors[{i}][{j}]", cplx) for j, z in enumerate(row)])
    m = len(parsed)

    labels = d.get("labels")
    if labels is None:
        labels = list(range(1, m + 1))
    if not isinstance(labels, list) or len(labels) != m:
        raise FrameFileError(f"labels: expected a list of {m} labels")
    for i, w in enumerate(labels):
        if not isinstance(w, (int, float, str)) or isinstance(w, bool):
            raise FrameFileError(f"labels[{i}]: labels must be strings or numbers")

    weights = d.get("weights")
    if weights is None:
        weights = [1.0] * m
    if not isinstance(weights, list) or len(weights) != m:
        raise FrameFileError(f"weights: expected a list of {m} positive numbers")
    weights = [_number(w, f"weights[{i}]") for i, w in enumerate(weights)]

    try:
        space = MeasureSpace(tuple(labels), np.array(weights))
        return Frame(space, np.array(parsed, dtype=complex if cplx else float), field)
    except FrameError as exc:
        raise FrameFileError(str(exc)) from exc


def loads_frame(text: str, source: str = "<string>") -> Frame:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FrameFileError(
            f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    try:
        return frame_from_dict(d)
    except FrameFileError as exc:
        raise FrameFileError(f"{source}: {exc}") from exc


def load_frame(path) -> Frame:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FrameFileError(f"{path}: {exc.strerror}") from exc
    return loads_frame(text, str(path))


def dumps_frame(f: Frame, indent: int | None = 2) -> str:
    return json.dumps(frame_to_dict(f), indent=indent)


def dump_frame(f: Frame, path) -> None:
    Path(path).write_text(dumps_frame(f) + "\n")
