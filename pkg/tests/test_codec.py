import pytest

from zinbiel_lab.catalog import build_family
from zinbiel_lab.codec import (
    algebra_from_dict,
    algebra_to_dict,
    dump_algebra,
    dumps,
    load_algebra,
    loads,
    map_from_dict,
    map_to_dict,
)
from zinbiel_lab.errors import InputError
from zinbiel_lab.maps import GradedLinearMap


def test_catalog_members_survive_json(catalog_algebra):
    assert load_algebra(dump_algebra(catalog_algebra)) == catalog_algebra


def test_layout_of_z35():
    assert algebra_to_dict(build_family("z35")) == {
        "dim_even": 1,
        "dim_odd": 2,
        "name": "z35",
        "products": [
            {"left": "f1", "right": "e1", "result": {"f2": "1"}},
            {"left": "f1", "right": "f1", "result": {"e1": "1"}},
        ],
    }


def test_dumps_is_compact_unless_indented():
    assert dumps({"a": [1, 2]}) == '{"a":[1,2]}'
    assert dumps({"a": 1}, indent=2) == '{\n  "a": 1\n}'


def test_equal_algebras_serialize_identically():
    first = load_algebra('{"dim_even":1,"dim_odd":2,"products":[{"left":"f1","right":"f1","result":{"e1":"2/4"}}]}')
    second = load_algebra('{"dim_even":1,"dim_odd":2,"products":[{"left":"f1","right":"f1","result":{"e1":"1/2","f1":0}}]}')
    assert dump_algebra(first) == dump_algebra(second)


def test_missing_products_means_zero_algebra():
    algebra = algebra_from_dict({"dim_even": 2, "dim_odd": 0})
    assert algebra.is_zero_product()


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"dim_even": -1, "dim_odd": 0},
        {"dim_even": True, "dim_odd": 0},
        {"dim_even": 1},
        {"dim_even": 1, "dim_odd": 0, "products": {}},
        {"dim_even": 1, "dim_odd": 0, "products": [{"left": "e1", "right": "e1"}]},
        {"dim_even": 1, "dim_odd": 0, "products": [{"left": "e2", "right": "e1", "result": {}}]},
        {"dim_even": 1, "dim_odd": 0, "products": [{"left": "e1", "right": "e1", "result": {"e1": "1/0"}}]},
        {"dim_even": 1, "dim_odd": 0, "products": [{"left": "e1", "right": "e1", "result": {"e1": 0.5}}]},
        {"dim_even": 1, "dim_odd": 0, "products": [{"left": "e1", "right": "e1", "result": "e1"}]},
        {
            "dim_even": 1,
            "dim_odd": 0,
            "products": [
                {"left": "e1", "right": "e1", "result": {"e1": 1}},
                {"left": "e1", "right": "e1", "result": {"e1": 2}},
            ],
        },
        {"dim_even": 1, "dim_odd": 1, "products": [{"left": "e1", "right": "e1", "result": {"f1": 1}}]},
    ],
)
def test_malformed_algebras_are_input_errors(data):
    with pytest.raises(InputError):
        algebra_from_dict(data)


def test_malformed_json():
    with pytest.raises(InputError, match="Malformed JSON"):
        loads("{dim_even: 1}")


def test_graded_map_json():
    graded_map = GradedLinearMap.from_rows([[1, "1/2"], [0, 1]], [[-2]])
    assert map_to_dict(graded_map) == {"even": [["1", "1/2"], ["0", "1"]], "odd": [["-2"]]}
    assert map_from_dict(map_to_dict(graded_map)) == graded_map
