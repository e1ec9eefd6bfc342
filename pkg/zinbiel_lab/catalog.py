"""
Constructors for the classified Zinbiel algebras and superalgebras.

Each family is registered with its parameter names, a constraint check that
names the violated inequality, a short description of its multiplication
table, and a builder. Products whose target index falls outside the
declared dimensions are zero.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, Mapping, Optional

from .errors import ConstraintViolation, DimensionMismatch, InputError
from .exactla import Vector, format_rational, parse_rational
from .superalg import SuperAlgebra


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    n: int
    m: int
    params: Dict[str, Fraction] = field(default_factory=dict)

    def __str__(self) -> str:
        params = ",".join(f"{k}={format_rational(v)}" for k, v in sorted(self.params.items()))
        return f"{self.family_id}({self.n}|{self.m}){'[' + params + ']' if params else ''}"


@dataclass(frozen=True)
class Family:
    family_id: str
    citation: str
    params: tuple
    builder: Callable[[int, int, Mapping[str, Fraction]], SuperAlgebra] = field(compare=False, repr=False)
    check: Callable[[int, int], None] = field(compare=False, repr=False)
    fixed_dims: Optional[tuple] = None

    def to_dict(self) -> dict:
        return {
            "family": self.family_id,
            "params": list(self.params),
            "dims": list(self.fixed_dims) if self.fixed_dims else None,
            "citation": self.citation,
        }


def _put(rules: dict, left: str, right: str, target: str, coef) -> None:
    coef = Fraction(coef)
    if coef:
        rules.setdefault((left, right), {})
        rules[(left, right)][target] = rules[(left, right)].get(target, Fraction(0)) + coef


def _rising(alpha: Fraction, start: int, count: int) -> Fraction:
    """prod_{k=0}^{count-1} (alpha + start + k); the empty product is 1."""
    result = Fraction(1)
    for k in range(count):
        result *= alpha + start + k
    return result


def nf2_left_coefficient(alpha: Fraction, i: int, j: int) -> Fraction:
    """Coefficient of f_{i+j} in e_i f_j."""
    return _rising(alpha, j, i - 1) / factorial(i - 1)


def nf2_right_coefficient(alpha: Fraction, i: int, j: int) -> Fraction:
    """Coefficient of f_{i+j} in f_j e_i."""
    return _rising(alpha, j - 1, i) / factorial(i)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def _null_filiform_rules(rules: dict, top: int) -> None:
    for i in range(1, top):
        for j in range(1, top - i + 1):
            _put(rules, f"e{i}", f"e{j}", f"e{i + j}", comb(i + j - 1, j))


def _build_null_filiform_alg(n: int, m: int, params: Mapping) -> SuperAlgebra:
    rules: dict = {}
    _null_filiform_rules(rules, n)
    return SuperAlgebra.from_rules(n, 0, rules, name=f"NullFiliformAlg({n})")


def _build_ng_filiform_alg(n: int, m: int, params: Mapping) -> SuperAlgebra:
    rules: dict = {}
    _null_filiform_rules(rules, n - 1)
    return SuperAlgebra.from_rules(n, 0, rules, name=f"NgFiliformAlg({n})")


def _chain_label(index: int) -> str:
    """Chain position c_index of the null-filiform superalgebra as a graded label."""
    if index % 2 == 0:
        return f"e{index // 2}"
    return f"f{index // 2 + 1}"


def _build_null_filiform_super(n: int, m: int, params: Mapping) -> SuperAlgebra:
    d = n + m
    rules: dict = {}
    for left in range(1, d + 1):
        for right in range(1, d + 1 - left):
            target = left + right
            k, l = left // 2, right // 2
            if left % 2 == 1 and right % 2 == 0:
                coef = comb(k + l, k)
            elif left % 2 == 0 and right % 2 == 0:
                coef = comb(k + l - 1, l)
            elif left % 2 == 1 and right % 2 == 1:
                coef = comb(k + l, l)
            else:
                coef = 0
            _put(rules, _chain_label(left), _chain_label(right), _chain_label(target), coef)
    return SuperAlgebra.from_rules(n, m, rules, name=f"NullFiliformSuper({d})")


def _nf2_rules(n: int, m: int, alpha: Fraction) -> dict:
    rules: dict = {}
    _null_filiform_rules(rules, n - 1)
    for i in range(1, n):
        for j in range(1, m - i + 1):
            _put(rules, f"e{i}", f"f{j}", f"f{i + j}", nf2_left_coefficient(alpha, i, j))
            _put(rules, f"f{j}", f"e{i}", f"f{i + j}", nf2_right_coefficient(alpha, i, j))
    return rules


def _build_nf2(n: int, m: int, params: Mapping) -> SuperAlgebra:
    alpha = params["alpha"]
    return SuperAlgebra.from_rules(n, m, _nf2_rules(n, m, alpha), name=f"NF2^{format_rational(alpha)}({n}|{m})")


def _build_nf1(n: int, m: int, params: Mapping) -> SuperAlgebra:
    rules = _nf2_rules(n, m, Fraction(-1))
    _put(rules, f"e{n}", "f1", "f2", 1)
    _put(rules, "f1", f"e{n}", "f2", -1)
    return SuperAlgebra.from_rules(n, m, rules, name=f"NF1({n}|{m})")


def _build_nf3(n: int, m: int, params: Mapping) -> SuperAlgebra:
    rules = _nf2_rules(n, m, Fraction(2 - m))
    _put(rules, f"e{n}", f"f{m - 1}", f"f{m}", 1)
    return SuperAlgebra.from_rules(n, m, rules, name=f"NF3({n}|{m})")


def _build_nf4(n: int, m: int, params: Mapping) -> SuperAlgebra:
    rules = _nf2_rules(n, m, Fraction(3 - n))
    _put(rules, "f1", f"f{n - 2}", f"e{n - 1}", 1)
    return SuperAlgebra.from_rules(n, m, rules, name=f"NF4({n}|{m})")


def _build_nf5(n: int, m: int, params: Mapping) -> SuperAlgebra:
    rules = _nf2_rules(n, m, Fraction(3 - n))
    _put(rules, f"e{n}", f"f{n - 2}", f"f{n - 1}", 1)
    _put(rules, "f1", f"f{n - 2}", f"e{n - 1}", 1)
    return SuperAlgebra.from_rules(n, m, rules, name=f"NF5({n}|{m})")


def _build_a1(n: int, m: int, params: Mapping) -> SuperAlgebra:
    rules = _nf2_rules(n, 3, Fraction(-1))
    _put(rules, f"e{n}", "f1", "f2", 1)
    _put(rules, f"e{n}", "f2", "f3", 1)
    _put(rules, "f1", f"e{n}", "f2", -1)
    return SuperAlgebra.from_rules(n, 3, rules, name=f"A1({n}|3)")


def _build_a2(n: int, m: int, params: Mapping) -> SuperAlgebra:
    rules = _nf2_rules(5, 3, Fraction(-2))
    _put(rules, "f1", "f3", "e4", 1)
    return SuperAlgebra.from_rules(5, 3, rules, name="A2(5|3)")


def _table(n: int, m: int, name: str, rules: Mapping) -> SuperAlgebra:
    return SuperAlgebra.from_rules(n, m, {pair: dict(target) for pair, target in rules.items()}, name=name)


def direct_sum(first: SuperAlgebra, second: SuperAlgebra, name: str = "") -> SuperAlgebra:
    """Graded direct sum; products between the two summands are zero."""
    n, m = first.n + second.n, first.m + second.m

    def embed(algebra: SuperAlgebra, offset_even: int, offset_odd: int) -> list:
        return [offset_even + p if p < algebra.n else n + offset_odd + p - algebra.n for p in range(algebra.dim)]

    products = {}
    for algebra, positions in ((first, embed(first, 0, 0)), (second, embed(second, first.n, first.m))):
        for (i, j), coords in algebra.products():
            image = [Fraction(0)] * (n + m)
            for k, value in enumerate(coords):
                image[positions[k]] = value
            products[(positions[i], positions[j])] = image
    return SuperAlgebra(n, m, products, name=name or f"{first.name}+{second.name}")


def odd_square_extension(even_algebra: SuperAlgebra, values: Vector, name: str = "") -> SuperAlgebra:
    """Adjoin one odd vector f1 with f1 f1 = v, where v must lie in Ann_L of the even algebra."""
    if even_algebra.m:
        raise InputError(f"Expected a purely even algebra, got odd dimension {even_algebra.m}")
    n = even_algebra.n
    v = tuple(parse_rational(x) for x in values)
    if len(v) != n:
        raise DimensionMismatch(f"f1 f1 needs {n} even coordinates, got {len(v)}")
    for k in range(n):
        if any(even_algebra.multiply_coords(v, tuple(Fraction(int(p == k)) for p in range(n)))):
            raise ConstraintViolation(f"f1 f1 must lie in Ann_L(Z0): v e{k + 1} != 0")
    products = {(i, j): coords + (Fraction(0),) for (i, j), coords in even_algebra.products()}
    if any(v):
        products[(n, n)] = v + (Fraction(0),)
    return SuperAlgebra(n, 1, products, name=name or f"{even_algebra.name}+f1")


# ---------------------------------------------------------------------------
# Constraints
# ---------------------------------------------------------------------------


def _require(condition: bool, family_id: str, inequality: str) -> None:
    if not condition:
        raise ConstraintViolation(f"{family_id} requires {inequality}")


def _check_null_filiform_alg(n: int, m: int) -> None:
    _require(n >= 1, "NullFiliformAlg", "n >= 1")
    _require(m == 0, "NullFiliformAlg", "m = 0")


def _check_ng_filiform_alg(n: int, m: int) -> None:
    _require(n >= 5, "NgFiliformAlg", "n >= 5")
    _require(m == 0, "NgFiliformAlg", "m = 0")


def _check_null_filiform_super(n: int, m: int) -> None:
    _require(n + m >= 1, "NullFiliformSuper", "n + m >= 1")
    _require(m in (n, n + 1), "NullFiliformSuper", "m = n or m = n+1")


def _check_nf(family_id: str) -> Callable[[int, int], None]:
    def check(n: int, m: int) -> None:
        _require(n >= 5, family_id, "n >= 5")
        _require(m > 3, family_id, "m > 3")

    return check


def _check_nf4(n: int, m: int) -> None:
    _check_nf("NF4")(n, m)
    _require(m >= n - 2, "NF4", "m >= n-2")
    _require(m <= 2 * n - 4, "NF4", "m <= 2n-4")


def _check_nf5(n: int, m: int) -> None:
    _check_nf("NF5")(n, m)
    _require(m == n - 1, "NF5", "m = n-1")


def _check_a1(n: int, m: int) -> None:
    _require(n >= 5, "A1", "n >= 5")
    _require(m == 3, "A1", "m = 3")


def _check_fixed(family_id: str, dims: tuple) -> Callable[[int, int], None]:
    def check(n: int, m: int) -> None:
        _require((n, m) == dims, family_id, f"(n, m) = {dims}")

    return check


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


def _fixed(family_id: str, dims: tuple, citation: str, params: tuple, rules: Callable[[Mapping], dict]) -> Family:
    def builder(n: int, m: int, values: Mapping) -> SuperAlgebra:
        return _table(dims[0], dims[1], family_id, rules(values))

    return Family(family_id, citation, params, builder, _check_fixed(family_id, dims), dims)


def _build_z21(values: Mapping) -> dict:
    return {("e1", "e1"): {"e2": 1}}


def _build_z31(n: int, m: int, values: Mapping) -> SuperAlgebra:
    return direct_sum(_table(2, 0, "Z21", _build_z21(values)), SuperAlgebra(1, 0), name="Z31")


def _build_z39(n: int, m: int, values: Mapping) -> SuperAlgebra:
    return odd_square_extension(_table(2, 0, "Z21", _build_z21(values)), (0, 1), name="z39")


FAMILIES: Dict[str, Family] = {
    family.family_id: family
    for family in (
        Family(
            "NullFiliformAlg",
            "null-filiform Zinbiel algebra: e_i e_j = C(i+j-1, j) e_{i+j}",
            (),
            _build_null_filiform_alg,
            _check_null_filiform_alg,
        ),
        Family(
            "NgFiliformAlg",
            "naturally graded filiform Zinbiel algebra: e_i e_j = C(i+j-1, j) e_{i+j} for i+j <= n-1",
            (),
            _build_ng_filiform_alg,
            _check_ng_filiform_alg,
        ),
        Family(
            "NullFiliformSuper",
            "null-filiform Zinbiel superalgebra on a chain c_1..c_d with c_1 odd: "
            "c_{2k+1}c_{2l} = C(k+l,k) c_{2k+2l+1}, c_{2k}c_{2l} = C(k+l-1,l) c_{2k+2l}, "
            "c_{2k+1}c_{2l+1} = C(k+l,l) c_{2k+2l+2}; exists only for (k|k) and (k|k+1)",
            (),
            _build_null_filiform_super,
            _check_null_filiform_super,
        ),
        Family(
            "NF1",
            "filiform superalgebra: NF2 with alpha = -1, e_n f_1 = f_2, f_1 e_n = -f_2",
            (),
            _build_nf1,
            _check_nf("NF1"),
        ),
        Family(
            "NF2",
            "filiform superalgebra: e_i f_j = prod_{k=0}^{i-2}(alpha+j+k)/(i-1)! f_{i+j}, "
            "f_j e_i = prod_{k=0}^{i-1}(alpha+j+k-1)/i! f_{i+j}",
            ("alpha",),
            _build_nf2,
            _check_nf("NF2"),
        ),
        Family(
            "NF3",
            "filiform superalgebra: NF2 with alpha = 2-m, e_n f_{m-1} = f_m",
            (),
            _build_nf3,
            _check_nf("NF3"),
        ),
        Family(
            "NF4",
            "filiform superalgebra: NF2 with alpha = 3-n, f_1 f_{n-2} = e_{n-1}; n-2 <= m <= 2n-4",
            (),
            _build_nf4,
            _check_nf4,
        ),
        Family(
            "NF5",
            "filiform superalgebra: NF2 with alpha = 3-n, e_n f_{n-2} = f_{n-1}, f_1 f_{n-2} = e_{n-1}; m = n-1",
            (),
            _build_nf5,
            _check_nf5,
        ),
        Family(
            "A1",
            "filiform superalgebra with m = 3: NF2 with alpha = -1, e_n f_1 = f_2, e_n f_2 = f_3, f_1 e_n = -f_2",
            (),
            _build_a1,
            _check_a1,
        ),
        Family(
            "A2",
            "filiform superalgebra (5|3): NF2 with alpha = -2, f_1 f_3 = e_4",
            (),
            _build_a2,
            _check_fixed("A2", (5, 3)),
            (5, 3),
        ),
        _fixed("Z21", (2, 0), "2-dim Zinbiel algebra: e1e1 = e2", (), _build_z21),
        Family("Z31", "3-dim Zinbiel algebra: Z21 + C", (), _build_z31, _check_fixed("Z31", (3, 0)), (3, 0)),
        _fixed(
            "Z32",
            (3, 0),
            "3-dim Zinbiel algebra: e1e1 = e2, e1e2 = 1/2 e3, e2e1 = e3",
            (),
            lambda p: {("e1", "e1"): {"e2": 1}, ("e1", "e2"): {"e3": Fraction(1, 2)}, ("e2", "e1"): {"e3": 1}},
        ),
        _fixed(
            "Z33",
            (3, 0),
            "3-dim Zinbiel algebra: e1e2 = e3, e2e1 = -e3",
            (),
            lambda p: {("e1", "e2"): {"e3": 1}, ("e2", "e1"): {"e3": -1}},
        ),
        _fixed(
            "Z34",
            (3, 0),
            "3-dim Zinbiel algebra: e1e1 = e3, e1e2 = e3, e2e2 = beta e3",
            ("beta",),
            lambda p: {("e1", "e1"): {"e3": 1}, ("e1", "e2"): {"e3": 1}, ("e2", "e2"): {"e3": p["beta"]}},
        ),
        _fixed(
            "Z35",
            (3, 0),
            "3-dim Zinbiel algebra: e1e1 = e3, e1e2 = e3, e2e1 = e3",
            (),
            lambda p: {("e1", "e1"): {"e3": 1}, ("e1", "e2"): {"e3": 1}, ("e2", "e1"): {"e3": 1}},
        ),
        _fixed(
            "z31",
            (1, 2),
            "3-dim superalgebra: f1f1 = e1, f2f1 = e1, f2f2 = alpha e1",
            ("alpha",),
            lambda p: {("f1", "f1"): {"e1": 1}, ("f2", "f1"): {"e1": 1}, ("f2", "f2"): {"e1": p["alpha"]}},
        ),
        _fixed(
            "z32",
            (1, 2),
            "3-dim superalgebra: f1f1 = e1, f2f2 = e1",
            (),
            lambda p: {("f1", "f1"): {"e1": 1}, ("f2", "f2"): {"e1": 1}},
        ),
        _fixed("z33", (1, 2), "3-dim superalgebra: f1f1 = e1", (), lambda p: {("f1", "f1"): {"e1": 1}}),
        _fixed(
            "z34",
            (1, 2),
            "3-dim superalgebra: f1f2 = e1, f2f1 = -e1",
            (),
            lambda p: {("f1", "f2"): {"e1": 1}, ("f2", "f1"): {"e1": -1}},
        ),
        _fixed(
            "z35",
            (1, 2),
            "3-dim superalgebra: f1e1 = f2, f1f1 = e1",
            (),
            lambda p: {("f1", "e1"): {"f2": 1}, ("f1", "f1"): {"e1": 1}},
        ),
        _fixed("z36", (1, 2), "3-dim superalgebra: f1e1 = f2", (), lambda p: {("f1", "e1"): {"f2": 1}}),
        _fixed(
            "z37",
            (1, 2),
            "3-dim superalgebra: e1f1 = alpha f2, f1e1 = f2",
            ("alpha",),
            lambda p: {("e1", "f1"): {"f2": p["alpha"]}, ("f1", "e1"): {"f2": 1}},
        ),
        _fixed("z38", (1, 2), "3-dim superalgebra: e1f1 = f2", (), lambda p: {("e1", "f1"): {"f2": 1}}),
        Family("z39", "3-dim superalgebra: e1e1 = e2, f1f1 = e2", (), _build_z39, _check_fixed("z39", (2, 1)), (2, 1)),
    )
}


def family_ids() -> list:
    return list(FAMILIES)


def get_family(family_id: str) -> Family:
    try:
        return FAMILIES[family_id]
    except KeyError:
        raise InputError(f"Unknown family {family_id!r}; see `catalog list`") from None


def catalog_index() -> list:
    """Every registered family in registry order."""
    return list(FAMILIES.values())


def family_spec(
    family_id: str,
    n: Optional[int] = None,
    m: Optional[int] = None,
    dim: Optional[int] = None,
    alpha=None,
    beta=None,
) -> FamilySpec:
    """Normalize command-line style input into a FamilySpec."""
    family = get_family(family_id)
    if family.fixed_dims:
        fixed_n, fixed_m = family.fixed_dims
        n = fixed_n if n is None else n
        m = fixed_m if m is None else m
    elif family_id in ("NullFiliformAlg", "NgFiliformAlg"):
        n = dim if n is None else n
        m = 0 if m is None else m
    elif family_id == "NullFiliformSuper" and dim is not None and n is None and m is None:
        n, m = dim // 2, dim - dim // 2
    elif family_id == "A1":
        m = 3 if m is None else m
    if n is None or m is None:
        raise InputError(f"{family_id} needs explicit dimensions (--n/--m or --dim)")
    if dim is not None and n + m != dim:
        raise DimensionMismatch(f"--dim {dim} does not match (n, m) = ({n}, {m})")

    given = {"alpha": alpha, "beta": beta}
    params = {}
    for name in family.params:
        if given[name] is None:
            raise InputError(f"{family_id} needs --{name}")
        params[name] = parse_rational(given[name])
    return FamilySpec(family_id, n, m, params)


def build(spec: FamilySpec) -> SuperAlgebra:
    family = get_family(spec.family_id)
    if spec.n < 0 or spec.m < 0:
        raise ConstraintViolation(f"{spec.family_id} requires nonnegative dimensions")
    family.check(spec.n, spec.m)
    missing = [p for p in family.params if p not in spec.params]
    if missing:
        raise InputError(f"{spec.family_id} needs parameters {', '.join(missing)}")
    return family.builder(spec.n, spec.m, spec.params)


def build_family(family_id: str, **kwargs) -> SuperAlgebra:
    """Shorthand for build(family_spec(family_id, ...))."""
    return build(family_spec(family_id, **kwargs))
