import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rif.construct import projective_plane
from rif.core import make_family
from rif.errors import InvariantViolation, ParseError
from rif.io import FORMAT, dumps, family_to_dict, loads, read_family, write_family


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))), st.data())
def test_roundtrip(nk, data):
    n, k = nk
    sets = data.draw(st.lists(st.sets(st.integers(1, n), min_size=k, max_size=k), max_size=12))
    uniq = sorted({tuple(sorted(s)) for s in sets})
    fam = make_family(n, k, uniq)
    text = dumps(fam)
    again = loads(text)
    assert again == fam
    assert dumps(again) == text
    assert json.loads(text) == family_to_dict(fam)


def test_file_and_stream(tmp_path):
    fam = projective_plane(3)
    path = tmp_path / "pp3.json"
    write_family(fam, path)
    assert read_family(path) == fam
    assert read_family(str(path)) == fam
    buf = io.StringIO()
    write_family(fam, buf)
    buf.seek(0)
    assert read_family(buf) == fam


def test_empty_family_text():
    fam = make_family(4, 2, [])
    assert loads(dumps(fam)) == fam


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"format": "other", "n": 3, "k": 1, "sets": []}',
        f'{{"format": "{FORMAT}", "n": "3", "k": 1, "sets": []}}',
        f'{{"format": "{FORMAT}", "n": 3, "k": true, "sets": []}}',
        f'{{"format": "{FORMAT}", "n": 3, "k": 1, "sets": [[1.5]]}}',
        f'{{"format": "{FORMAT}", "n": 3, "k": 1}}',
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        loads(text)


@pytest.mark.parametrize(
    "sets",
    [
        [[2, 1]],  # members not increasing
        [[1, 3], [1, 2]],  # not canonical order
        [[1, 2], [1, 2]],  # duplicate
        [[1, 2, 3]],  # wrong size
        [[1, 9]],  # out of range
    ],
)
def test_invariant_violations(sets):
    text = json.dumps({"format": FORMAT, "n": 4, "k": 2, "sets": sets})
    with pytest.raises(InvariantViolation):
        loads(text)
