from fractions import Fraction

import pytest

from cdgl import (
    BUNDLED,
    PresentationError,
    load_bundled,
    load_presentation,
    presentation_from_dict,
    save_presentation,
    validate_presentation,
)
from cdgl.serialization import parse_scalar


def test_parse_scalar_exact():
    assert parse_scalar(3, "here") == Fraction(3)
    assert parse_scalar("-7/2", "here") == Fraction(-7, 2)
    assert parse_scalar("4", "here") == Fraction(4)
    for bad in (0.5, True, "1/0", "x", None):
        with pytest.raises(PresentationError):
            parse_scalar(bad, "here")


def test_bundled_examples_load_and_validate():
    for name in BUNDLED:
        p = load_bundled(name)
        assert validate_presentation(p).ok, name


def test_float_literals_rejected(tmp_path):
    # a float anywhere in the JSON is refused at parse time
    path = tmp_path / "bad.alg"
    path.write_text('{"generators": [{"name": "x", "degree": 0}], "weight": 1.5}')
    with pytest.raises(PresentationError):
        load_presentation(str(path))
    # and a float coefficient is refused even if JSON parsing succeeded
    with pytest.raises(PresentationError):
        presentation_from_dict(
            {
                "style": "structure-constants",
                "generators": [{"name": "x", "degree": 0}, {"name": "u", "degree": 1}],
                "differential": {"u": {"x": 0.5}},
            }
        )


def test_malformed_json_reports_location(tmp_path):
    path = tmp_path / "broken.alg"
    path.write_text('{"name": ')
    with pytest.raises(PresentationError, match="line"):
        load_presentation(str(path))


def test_roundtrip_structure_constants(tmp_path):
    p = load_bundled("heisenberg-cone")
    path = tmp_path / "out.alg"
    save_presentation(p, str(path))
    q = load_presentation(str(path))
    assert [g.name for g in q.generators] == [g.name for g in p.generators]
    assert q.table == p.table
    assert q.diff == p.diff
    assert q.claimed_class == p.claimed_class


def test_free_style_parsing():
    doc = {
        "name": "free",
        "style": "free-truncated",
        "generators": [{"name": "x", "degree": 0}, {"name": "u", "degree": 1}],
        "differential": {"u": {"x": "1"}},
        "truncation": 3,
    }
    p = presentation_from_dict(doc)
    assert p.style == "free-truncated"
    assert p.differential(p.gen("u")) == p.gen("x")
    assert validate_presentation(p).ok


def test_unknown_style_and_missing_fields():
    with pytest.raises(PresentationError):
        presentation_from_dict({"style": "weird", "generators": [{"name": "x", "degree": 0}]})
    with pytest.raises(PresentationError):
        presentation_from_dict({"style": "structure-constants"})
    with pytest.raises(PresentationError):
        presentation_from_dict(
            {
                "style": "structure-constants",
                "generators": [{"name": "x", "degree": "zero"}],
            }
        )


def test_duplicate_bracket_entries_rejected():
    doc = {
        "style": "structure-constants",
        "generators": [{"name": "x", "degree": 0}, {"name": "y", "degree": 0}],
        "brackets": [
            {"left": "x", "right": "y", "result": {"x": 1}},
            {"left": "x", "right": "y", "result": {"y": 1}},
        ],
    }
    with pytest.raises(PresentationError):
        presentation_from_dict(doc)
