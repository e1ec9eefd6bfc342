"""
JSON interchange for algebras and graded maps.

    {"dim_even": n, "dim_odd": m,
     "products": [{"left": "e1", "right": "f1", "result": {"f2": "1/2"}}, ...]}

Products are emitted in basis order of (left, right) with zero products and
zero coefficients omitted, so equal algebras serialize to identical text.
"""

import json
from typing import Any, Mapping, Optional

from .errors import InputError
from .exactla import format_rational, parse_rational
from .maps import GradedLinearMap
from .superalg import BasisLabel, SuperAlgebra


def algebra_to_dict(algebra: SuperAlgebra) -> dict:
    data: dict = {"dim_even": algebra.n, "dim_odd": algebra.m}
    if algebra.name:
        data["name"] = algebra.name
    data["products"] = [
        {
            "left": str(algebra.label(i)),
            "right": str(algebra.label(j)),
            "result": {str(algebra.label(k)): format_rational(v) for k, v in enumerate(coords) if v},
        }
        for (i, j), coords in algebra.products()
    ]
    return data


def _dimension(data: Mapping, key: str) -> int:
    value = data.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InputError(f'"{key}" must be a nonnegative integer, got {value!r}')
    return value


def algebra_from_dict(data: Any) -> SuperAlgebra:
    if not isinstance(data, Mapping):
        raise InputError("An algebra must be a JSON object")
    n = _dimension(data, "dim_even")
    m = _dimension(data, "dim_odd")
    entries = data.get("products", [])
    if not isinstance(entries, list):
        raise InputError('"products" must be a list')
    table: dict = {}
    for entry in entries:
        if not isinstance(entry, Mapping) or not {"left", "right", "result"} <= set(entry):
            raise InputError(f'Each product needs "left", "right" and "result": {entry!r}')
        i = BasisLabel.parse(entry["left"], n, m).position(n)
        j = BasisLabel.parse(entry["right"], n, m).position(n)
        if (i, j) in table:
            raise InputError(f"Duplicate product {entry['left']}{entry['right']}")
        result = entry["result"]
        if not isinstance(result, Mapping):
            raise InputError(f'"result" must be an object of label -> rational, got {result!r}')
        coords = [0] * (n + m)
        for label, value in result.items():
            coords[BasisLabel.parse(label, n, m).position(n)] = parse_rational(value)
        table[(i, j)] = coords
    name = data.get("name", "")
    return SuperAlgebra(n, m, table, name=name if isinstance(name, str) else "")


def map_to_dict(graded_map: GradedLinearMap) -> dict:
    return graded_map.to_dict()


def map_from_dict(data: Any) -> GradedLinearMap:
    return GradedLinearMap.from_dict(data)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"Malformed JSON: {exc}") from exc


def dumps(data: Any, indent: Optional[int] = None) -> str:
    if indent is None:
        return json.dumps(data, separators=(",", ":"), ensure_ascii=False)
    return json.dumps(data, indent=indent, ensure_ascii=False)


def load_algebra(text: str) -> SuperAlgebra:
    return algebra_from_dict(loads(text))


def dump_algebra(algebra: SuperAlgebra, indent: Optional[int] = None) -> str:
    return dumps(algebra_to_dict(algebra), indent)
