import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from retroframes import Frame, MeasureSpace
from retroframes.errors import FrameFileError
from retroframes.io import (
    dump_frame,
    dumps_frame,
    frame_from_dict,
    frame_to_dict,
    load_frame,
    loads_frame,
)


def test_counting_measure_default():
    f = frame_from_dict({"dim": 2, "vectors": [[1, 0], [0, 1]]})
    assert f.labels == (1, 2)
    np.testing.assert_array_equal(f.weights, [1, 1])
    assert f.field == "real"


def test_complex_entries():
    f = frame_from_dict({"dim": 2, "field": "complex", "vectors": [[[1, 2], 0], [[0, -1], [3, 0]]]})
    np.testing.assert_array_equal(f.vectors, [[1 + 2j, 0], [-1j, 3]])
    d = frame_to_dict(f)
    assert d["vectors"][0][0] == [1.0, 2.0]


@pytest.mark.parametrize(
    "doc, field",
    [
        ({"vectors": [[1]]}, "dim"),
        ({"dim": 2}, "vectors"),
        ({"dim": 2, "vectors": [[1, 0], [1]]}, "vectors[1]"),
        ({"dim": 1, "vectors": [[True]]}, "vectors[0][0]"),
        ({"dim": 1, "vectors": [[[1, 2]]]}, "vectors[0][0]"),
        ({"dim": 1, "field": "quaternion", "vectors": [[1]]}, "field"),
        ({"dim": 1, "vectors": [[1]], "weights": [1, 2]}, "weights"),
        ({"dim": 1, "vectors": [[1]], "weights": ["a"]}, "weights[0]"),
        ({"dim": 1, "vectors": [[1]], "labels": [[1]]}, "labels[0]"),
    ],
)
def test_malformed_names_field(doc, field):
    with pytest.raises(FrameFileError, match=field.replace("[", r"\[").replace("]", r"\]")):
        frame_from_dict(doc)


def test_semantic_errors_become_file_errors():
    with pytest.raises(FrameFileError, match="positive"):
        frame_from_dict({"dim": 1, "vectors": [[1]], "weights": [0]})
    with pytest.raises(FrameFileError, match="unique"):
        frame_from_dict({"dim": 1, "vectors": [[1], [2]], "labels": ["a", "a"]})


def test_json_syntax_error_reports_line():
    with pytest.raises(FrameFileError, match="line 2"):
        loads_frame('{"dim": 1,\n "vectors": [[1],]}')


def test_missing_file(tmp_path):
    with pytest.raises(FrameFileError):
        load_frame(tmp_path / "absent.json")


finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.lists(finite, min_size=n, max_size=n), min_size=1, max_size=5),
            st.booleans(),
        )
    ),
    st.data(),
)
def test_round_trip_bit_exact(args, data):
    n, rows, cplx = args
    v = np.array(rows)
    if cplx:
        v = v + 1j * v[::-1]
    m = len(rows)
    w = data.draw(st.lists(st.floats(1e-300, 1e300), min_size=m, max_size=m))
    labels = data.draw(
        st.lists(st.one_of(st.integers(-1000, 1000), st.text(max_size=4)), min_size=m, max_size=m, unique=True)
    )
    f = Frame(MeasureSpace(tuple(labels), w), v, "complex" if cplx else "real")
    g = loads_frame(dumps_frame(f))
    assert g == f
    assert g.vectors.tobytes() == f.vectors.tobytes()
    assert g.weights.tobytes() == f.weights.tobytes()


def test_dump_and_load(tmp_path, e3):
    p = tmp_path / "e3.json"
    dump_frame(e3, p)
    assert load_frame(p) == e3
    assert json.loads(p.read_text())["dim"] == 3
