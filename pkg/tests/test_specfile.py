import json

import pytest

from invfield import SpecError, fixture_names, load_fixture, parse_spec
from invfield.specfile import parse_spec_data, parse_spec_text


def base_spec(**over):
    data = {
        "cyclotomic_order": 1,
        "variables": ["x", "y"],
        "generators": [{"name": "s", "matrix": [[0, 1], [1, 0]]}],
        "irreducibles": [
            {"label": "triv", "degree": 1, "matrices": {"s": [[1]]}},
            {"label": "sign", "degree": 1, "matrices": {"s": [[-1]]}},
        ],
    }
    data.update(over)
    return data


def test_bundled_fixtures():
    names = fixture_names()
    for required in ["trivial", "c2", "c3_1d", "c3reg", "c4reg", "c5", "c7", "q8", "a4perm", "s3std"]:
        assert required in names
    q8 = load_fixture("q8")
    assert len(q8.irreducibles) == 5 and q8.cyclotomic_order == 4
    assert sorted(ir.degree for ir in q8.irreducibles) == [1, 1, 1, 1, 2]
    c5 = load_fixture("c5")
    G = c5.decomposition().group
    assert G.order == 5 and G.n == 2


def test_parse_spec_accepts_paths_and_names(tmp_path):
    p = tmp_path / "swap.json"
    p.write_text(json.dumps(base_spec()))
    spec = parse_spec(p)
    assert spec.name == "swap" and spec.dimension == 2
    assert parse_spec("c2").name == "c2"
    with pytest.raises(SpecError):
        parse_spec(tmp_path / "missing.json")


def test_valid_spec_builds():
    spec = parse_spec_data(base_spec(), "swap")
    dec = spec.decomposition()
    assert dec.group.order == 2
    assert [m.label for m in dec.models] == ["triv", "sign"]


@pytest.mark.parametrize("over,needle", [
    ({"generators": [{"name": "s", "matrix": [[0, 1, 0], [1, 0]]}]}, "'s'"),
    ({"generators": [{"name": "s", "matrix": [[0, 1], [1, 0]]}, {"name": "t", "matrix": [[1]]}]}, "dimension"),
    ({"cyclotomic_order": 0}, "cyclotomic_order"),
    ({"cyclotomic_order": "four"}, "cyclotomic_order"),
    ({"variables": ["x"]}, "variables"),
    ({"variables": ["x", "z"]}, "'z'"),
    ({"generators": []}, "generators"),
    ({"generators": [{"name": "s", "matrix": [[0, "q"], [1, 0]]}]}, "[0][1]"),
    ({"irreducibles": [{"label": "a", "degree": 1, "matrices": {"s": [[1]]}},
                       {"label": "a", "degree": 1, "matrices": {"s": [[-1]]}}]}, "duplicate"),
    ({"irreducibles": [{"label": "a", "degree": 2, "matrices": {"s": [[1]]}}]}, "2x2"),
    ({"irreducibles": [{"label": "a", "degree": 1, "matrices": {}}]}, "lacks"),
    ({"options": {"term_order": "revlex"}}, "term order"),
])
def test_parse_errors(over, needle):
    with pytest.raises(SpecError) as exc:
        parse_spec_data(base_spec(**over), "bad")
    assert needle in str(exc.value)


def test_syntax_error_reports_position():
    with pytest.raises(SpecError) as exc:
        parse_spec_text('{\n  "generators": [\n    [[1]],\n  ]\n}', "broken")
    assert "line 4" in str(exc.value) and "column" in str(exc.value)


def test_incomplete_models_fail_validation():
    spec = parse_spec_data(base_spec(irreducibles=[{"label": "triv", "degree": 1, "matrices": {"s": [[1]]}}]))
    with pytest.raises(SpecError) as exc:
        spec.decomposition()
    assert "squared degrees" in str(exc.value)


def test_non_homomorphism_is_rejected():
    spec = parse_spec_data(base_spec(irreducibles=[
        {"label": "triv", "degree": 1, "matrices": {"s": [[1]]}},
        {"label": "bad", "degree": 1, "matrices": {"s": [[2]]}},
    ]))
    with pytest.raises(SpecError) as exc:
        spec.decomposition()
    assert "homomorphism" in str(exc.value)
