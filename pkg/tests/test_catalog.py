"""Template schema parsing, serialization round trips, catalog lookup."""

import json

import pytest

from tilebalance.catalog import (
    ENV_CATALOG,
    list_catalog,
    load_template,
    serialize_template,
    template_from_dict,
    template_to_dict,
)
from tilebalance.errors import NotFoundError, ParseError, SchemaError

SQUARE = {
    "name": "sq",
    "type_label": "square",
    "lattice": [[1.0, 0.0], [0.0, 1.0]],
    "vertices": [[0.0, 0.0]],
    "tiles": [[[0, 0, 0], [0, 1, 0], [0, 1, 1], [0, 0, 1]]],
}


def test_round_trip_all_catalog_entries():
    for name, *_ in list_catalog():
        t = load_template(name)
        again = template_from_dict(template_to_dict(t), where=name)
        assert again == t
        assert json.loads(serialize_template(t)) == template_to_dict(t)


def test_load_by_path(tmp_path):
    p = tmp_path / "sq.json"
    p.write_text(json.dumps(SQUARE))
    t = load_template(str(p))
    assert t.name == "sq"
    assert len(t.tiles) == 1


def test_unknown_name_lists_alternatives():
    with pytest.raises(NotFoundError) as ei:
        load_template("no-such-tiling")
    assert "square" in str(ei.value)


def test_parse_error_reports_location(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        load_template(str(p))


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("name"),
    lambda d: d.pop("lattice"),
    lambda d: d.__setitem__("lattice", [[1, 0]]),
    lambda d: d.__setitem__("vertices", [[0.0]]),
    lambda d: d.__setitem__("tiles", []),
    lambda d: d.__setitem__("tiles", [[[0, 0], [0, 1, 0], [0, 1, 1]]]),
    lambda d: d.__setitem__("tiles", [[[5, 0, 0], [0, 1, 0], [0, 1, 1]]]),
    lambda d: d.__setitem__("flat", [[0, 99]]),
    lambda d: d.__setitem__("expected", {"v": "1.5"}),
])
def test_schema_errors(mutate):
    data = json.loads(json.dumps(SQUARE))
    mutate(data)
    with pytest.raises(SchemaError):
        template_from_dict(data)


def test_env_override_changes_catalog(tmp_path, monkeypatch):
    p = tmp_path / "sq.json"
    p.write_text(json.dumps(SQUARE))
    monkeypatch.setenv(ENV_CATALOG, str(tmp_path))
    names = [name for name, *_ in list_catalog()]
    assert names == ["sq"]
    assert load_template("sq").type_label == "square"
    with pytest.raises(NotFoundError):
        load_template("square")


def test_list_catalog_sorted_and_typed():
    rows = list_catalog()
    names = [r[0] for r in rows]
    assert names == sorted(names)
    for name, label, e2e, count in rows:
        assert isinstance(label, str) and isinstance(e2e, bool)
        assert count >= 1
