"""
Graded changes of basis, isomorphism checks and invariant batteries.

A GradedLinearMap P has an even block and an odd block; column k of a block
is the image of the k-th basis vector of that parity. transport(A, P) is the
algebra B for which P is an isomorphism A -> B:

    x o_B y = P(P^-1 x  *_A  P^-1 y)
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Mapping, Optional, Sequence

from .catalog import build_family
from .errors import ConstraintViolation, DimensionMismatch, InputError, NotNilpotent, SingularMap
from .exactla import Matrix, Subspace, determinant, format_rational, inverse, parse_rational, rank, unit_vector
from .polysys import family_algebra
from .series import derived_series, even_chain, even_square, full_chain, nilpotency_index, odd_chain
from .spectra import DEFAULT_SAMPLES, DEFAULT_SEED, characteristic_sequence
from .structure import annihilators, graded_dims
from .superalg import SuperAlgebra, SuperElement, is_zinbiel


@dataclass(frozen=True)
class GradedLinearMap:
    even: Matrix
    odd: Matrix

    def __post_init__(self):
        for name, block in (("even", self.even), ("odd", self.odd)):
            if not block.is_square:
                raise DimensionMismatch(f"The {name} block must be square, got {block.rows}x{block.cols}")
            if determinant(block) == 0:
                raise SingularMap(f"The {name} block is singular")

    @property
    def n(self) -> int:
        return self.even.rows

    @property
    def m(self) -> int:
        return self.odd.rows

    @classmethod
    def identity(cls, n: int, m: int) -> "GradedLinearMap":
        return cls(Matrix.identity(n), Matrix.identity(m))

    @classmethod
    def from_rows(cls, even_rows: Sequence[Sequence], odd_rows: Sequence[Sequence]) -> "GradedLinearMap":
        return cls(Matrix.from_rows(even_rows, len(even_rows)), Matrix.from_rows(odd_rows, len(odd_rows)))

    @classmethod
    def from_columns(cls, even_columns: Sequence[Sequence], odd_columns: Sequence[Sequence]) -> "GradedLinearMap":
        """Build from the images of e_1..e_n and f_1..f_m."""
        return cls(
            Matrix.from_columns(even_columns, len(even_columns)),
            Matrix.from_columns(odd_columns, len(odd_columns)),
        )

    @classmethod
    def diagonal(cls, even: Sequence, odd: Sequence) -> "GradedLinearMap":
        def diag(values: Sequence) -> list:
            return [[Fraction(v) if i == j else Fraction(0) for j in range(len(values))] for i, v in enumerate(values)]

        return cls.from_rows(diag(even), diag(odd))

    def apply_coords(self, coords: Sequence) -> tuple:
        if len(coords) != self.n + self.m:
            raise DimensionMismatch(f"Vector of length {len(coords)} for a map of shape ({self.n}|{self.m})")
        return self.even.apply(coords[: self.n]) + self.odd.apply(coords[self.n:])

    def apply(self, x: SuperElement) -> SuperElement:
        return SuperElement(self.even.apply(x.even), self.odd.apply(x.odd))

    def inverse(self) -> "GradedLinearMap":
        return GradedLinearMap(inverse(self.even), inverse(self.odd))

    def compose(self, other: "GradedLinearMap") -> "GradedLinearMap":
        """self o other"""
        if (self.n, self.m) != (other.n, other.m):
            raise DimensionMismatch(f"Cannot compose maps of shapes ({self.n}|{self.m}) and ({other.n}|{other.m})")
        return GradedLinearMap(self.even @ other.even, self.odd @ other.odd)

    def to_dict(self) -> dict:
        def rows(block: Matrix) -> list:
            return [[format_rational(x) for x in row] for row in block.to_rows()]

        return {"even": rows(self.even), "odd": rows(self.odd)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "GradedLinearMap":
        if not isinstance(data, Mapping) or "even" not in data or "odd" not in data:
            raise InputError('A map needs "even" and "odd" blocks')
        blocks = []
        for name in ("even", "odd"):
            rows = data[name]
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise InputError(f'The "{name}" block must be a list of rows')
            blocks.append(Matrix.from_rows([[parse_rational(x) for x in r] for r in rows], len(rows)))
        return cls(*blocks)


def transport(algebra: SuperAlgebra, graded_map: GradedLinearMap) -> SuperAlgebra:
    if (graded_map.n, graded_map.m) != (algebra.n, algebra.m):
        raise DimensionMismatch(
            f"Map of shape ({graded_map.n}|{graded_map.m}) on an algebra of shape ({algebra.n}|{algebra.m})"
        )
    back = graded_map.inverse()
    preimages = [back.apply_coords(unit_vector(algebra.dim, i)) for i in range(algebra.dim)]
    products = {}
    for i, j in cartesian(range(algebra.dim), repeat=2):
        value = algebra.multiply_coords(preimages[i], preimages[j])
        if any(value):
            products[(i, j)] = graded_map.apply_coords(value)
    return SuperAlgebra(algebra.n, algebra.m, products, name=algebra.name)


@dataclass(frozen=True)
class IsoCheck:
    ok: bool
    pair: Optional[tuple] = None
    expected: Optional[SuperElement] = None
    actual: Optional[SuperElement] = None

    def to_dict(self) -> dict:
        data: dict = {"isomorphism": self.ok}
        if not self.ok:
            data["pair"] = [str(label) for label in self.pair]
            data["expected"] = str(self.expected)
            data["actual"] = str(self.actual)
        return data


def is_isomorphism(source: SuperAlgebra, target: SuperAlgebra, graded_map: GradedLinearMap) -> IsoCheck:
    """Exact check that graded_map intertwines the products of source and target."""
    if (source.n, source.m) != (target.n, target.m):
        raise DimensionMismatch(f"Shapes ({source.n}|{source.m}) and ({target.n}|{target.m}) differ")
    moved = transport(source, graded_map)
    for i, j in cartesian(range(target.dim), repeat=2):
        if moved.product(i, j) != target.product(i, j):
            return IsoCheck(
                False,
                (target.label(i), target.label(j)),
                target.element(target.product(i, j)),
                moved.element(moved.product(i, j)),
            )
    return IsoCheck(True)


def random_graded_map(n: int, m: int, rng: random.Random, bound: int = 3) -> GradedLinearMap:
    """Seeded random invertible graded map with small rational entries."""

    def block(size: int) -> Matrix:
        while True:
            candidate = Matrix.from_rows(
                [[Fraction(rng.randint(-bound, bound), rng.randint(1, 2)) for _ in range(size)] for _ in range(size)],
                size,
            )
            if determinant(candidate) != 0:
                return candidate

    return GradedLinearMap(block(n), block(m))


# ---------------------------------------------------------------------------
# Invariant battery
# ---------------------------------------------------------------------------


def _pairing_parts(algebra: SuperAlgebra) -> tuple:
    """Symmetric and antisymmetric parts of (f_a, f_b) -> f_a f_b, as even coordinate vectors."""
    n = algebra.n
    odd = list(algebra.odd_positions())
    sym, anti = {}, {}
    for a, i in enumerate(odd):
        for b, j in enumerate(odd):
            ij, ji = algebra.product(i, j)[:n], algebra.product(j, i)[:n]
            sym[(a, b)] = tuple(x + y for x, y in zip(ij, ji))
            anti[(a, b)] = tuple(x - y for x, y in zip(ij, ji))
    return sym, anti


def _pairing_ranks(algebra: SuperAlgebra, part: dict) -> tuple:
    """(dim of the image span, rank of the flattening Z1 -> Hom(Z1, Z0))."""
    n, m = algebra.n, algebra.m
    if not n or not m:
        return (0, 0)
    image = Subspace.span(part.values(), n).dim
    flat = Matrix.from_rows([sum((part[(a, b)] for b in range(m)), ()) for a in range(m)], m * n)
    return (image, rank(flat))


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


@dataclass(frozen=True)
class Battery:
    items: tuple

    def names(self) -> list:
        return [name for name, _ in self.items]

    def get(self, name: str):
        for key, value in self.items:
            if key == name:
                return value
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {name: _jsonable(value) for name, value in self.items}


def invariant_battery(algebra: SuperAlgebra, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> Battery:
    """Graded-isomorphism invariants in a fixed order."""
    ann = annihilators(algebra)
    sym, anti = _pairing_parts(algebra)
    items = [
        ("graded_dims", (algebra.n, algebra.m)),
        ("power_dims", tuple(graded_dims(algebra, term) for term in full_chain(algebra))),
        ("even_chain_dims", tuple(term.dim for term in even_chain(algebra))),
        ("odd_chain_dims", tuple(term.dim for term in odd_chain(algebra))),
        ("nilpotency_index", nilpotency_index(algebra)),
        ("left_annihilator", graded_dims(algebra, ann.left)),
        ("right_annihilator", graded_dims(algebra, ann.right)),
        ("two_sided_annihilator", graded_dims(algebra, ann.two_sided)),
        ("sym_pairing", _pairing_ranks(algebra, sym)),
        ("antisym_pairing", _pairing_ranks(algebra, anti)),
        ("even_square_dim", even_square(algebra).dim),
        ("derived_dims", tuple(term.dim for term in derived_series(algebra))),
    ]
    try:
        sequence = str(characteristic_sequence(algebra, seed=seed, samples=samples).sequence)
    except ConstraintViolation:
        sequence = None
    except NotNilpotent:
        sequence = "not_nilpotent"
    items.append(("characteristic_sequence", sequence))
    return Battery(tuple(items))


@dataclass(frozen=True)
class Distinction:
    distinguishable: bool
    invariant: Optional[str] = None
    values: tuple = ()

    def to_dict(self) -> dict:
        if not self.distinguishable:
            return {"verdict": "inconclusive"}
        return {"verdict": "distinguishable", "invariant": self.invariant, "values": _jsonable(self.values)}


def distinguish(
    first: SuperAlgebra, second: SuperAlgebra, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES
) -> Distinction:
    """One-sided: names the first differing invariant, never claims isomorphism."""
    if first.dim != second.dim:
        raise DimensionMismatch(f"Total dimensions {first.dim} and {second.dim} differ")
    if (first.n, first.m) != (second.n, second.m):
        return Distinction(True, "graded_dims", ((first.n, first.m), (second.n, second.m)))
    left = invariant_battery(first, seed, samples)
    right = invariant_battery(second, seed, samples)
    for (name, a), (_, b) in zip(left.items, right.items):
        if a != b:
            return Distinction(True, name, (a, b))
    return Distinction(False)


@dataclass(frozen=True)
class TransportCheck:
    ok: bool
    samples: int
    failure: Optional[tuple] = None

    def to_dict(self) -> dict:
        data: dict = {"invariant_under_transport": self.ok, "samples": self.samples}
        if self.failure is not None:
            graded_map, name, before, after = self.failure
            data["failure"] = {
                "map": graded_map.to_dict(),
                "invariant": name,
                "values": [_jsonable(before), _jsonable(after)],
            }
        return data


def transport_invariance(
    algebra: SuperAlgebra, samples: int = 20, seed: int = DEFAULT_SEED, scan_samples: int = DEFAULT_SAMPLES
) -> TransportCheck:
    """Transport by seeded random graded maps and compare the Zinbiel verdict and the battery."""
    rng = random.Random(f"{seed}:transport")
    zinbiel = is_zinbiel(algebra).ok
    base = invariant_battery(algebra, seed, scan_samples)
    for _ in range(samples):
        graded_map = random_graded_map(algebra.n, algebra.m, rng)
        moved = transport(algebra, graded_map)
        if is_zinbiel(moved).ok != zinbiel:
            return TransportCheck(False, samples, (graded_map, "zinbiel", zinbiel, not zinbiel))
        battery = invariant_battery(moved, seed, scan_samples)
        for (name, before), (_, after) in zip(base.items, battery.items):
            if before != after:
                return TransportCheck(False, samples, (graded_map, name, before, after))
    return TransportCheck(True, samples)


# ---------------------------------------------------------------------------
# Reduction maps between the (1,2) solution families
# ---------------------------------------------------------------------------


def _nonzero(rng: random.Random) -> Fraction:
    value = Fraction(0)
    while value == 0:
        value = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return value


@dataclass(frozen=True)
class Reduction:
    name: str
    source: str
    target: str
    sampler: Callable[[random.Random], dict] = field(compare=False, repr=False)
    graded_map: Callable[[Mapping], GradedLinearMap] = field(compare=False, repr=False)
    target_algebra: Callable[[Mapping], SuperAlgebra] = field(compare=False, repr=False)

    def source_algebra(self, params: Mapping) -> SuperAlgebra:
        return family_algebra(self.source, params)


def _params(rng: random.Random, *names: str, **fixed) -> dict:
    values = {name: _nonzero(rng) for name in names}
    values.update({k: Fraction(v) for k, v in fixed.items()})
    return values


def _odd_form(p: Mapping, x: Sequence, y: Sequence) -> Fraction:
    return sum((x[i] * y[j] * p[f"l{i + 1}{j + 1}"] for i in range(2) for j in range(2)), Fraction(0))


def _z31_frame(p: Mapping) -> tuple:
    """Odd basis (g1, g2) and g1g1 = q e1 putting family (a) with l12 != l21 into z31 shape."""
    for g1 in ((1, 0), (0, 1), (1, 1)):
        q = _odd_form(p, g1, g1)
        if q:
            break
    else:
        raise ConstraintViolation("Family (a) with an alternating pairing has no z31 form")
    skew = p["l21"] - p["l12"]
    if skew == 0:
        raise ConstraintViolation("Family (a) reduces to z31 only when l12 != l21")
    # g1 g2 = 0 and g2 g1 = g1 g1
    g2 = (-_odd_form(p, g1, (0, 1)) / skew, _odd_form(p, g1, (1, 0)) / skew)
    return g1, g2, q


def _a_to_z31_map(p: Mapping) -> GradedLinearMap:
    g1, g2, q = _z31_frame(p)
    return GradedLinearMap.from_columns([[q]], [list(g1), list(g2)]).inverse()


def _a_to_z31_target(p: Mapping) -> SuperAlgebra:
    g1, g2, q = _z31_frame(p)
    return build_family("z31", alpha=_odd_form(p, g2, g2) / q)


def _sample_a_for_z31(rng: random.Random, l11_zero: bool) -> dict:
    while True:
        values = {"l11": Fraction(0) if l11_zero else _nonzero(rng), "l12": _nonzero(rng), "l21": _nonzero(rng)}
        values["l22"] = Fraction(0) if l11_zero and rng.random() < 0.5 else _nonzero(rng)
        if values["l12"] == values["l21"]:
            continue
        if values["l11"] or values["l22"] or values["l12"] + values["l21"]:
            return values


_SWAP = ((0, 1), (1, 0))

REDUCTIONS = (
    Reduction(
        "phi1",
        "b",
        "(e) with mu -> -mu, mu_p = l12^2/l11",
        lambda rng: _params(rng, "l11", "l12", "mu"),
        lambda p: GradedLinearMap.from_columns([[1]], [[p["l11"] / p["l12"], 0], [1, 1]]),
        lambda p: family_algebra("e", {"mu": -p["mu"], "mu_p": p["l12"] ** 2 / p["l11"]}),
    ),
    Reduction(
        "phi2",
        "c",
        "(g) with mu_p = 0",
        lambda rng: _params(rng, "mu", "mu_p"),
        lambda p: GradedLinearMap.from_columns([[1]], [[p["mu"] / p["mu_p"]] * 2, [1, 0]]),
        lambda p: family_algebra("g", {"mu": p["mu"], "mu_p": 0}),
    ),
    Reduction(
        "phi3",
        "d",
        "(g) with mu_p = nu",
        lambda rng: _params(rng, "mu", "nu", "nu_p"),
        lambda p: GradedLinearMap.from_columns([[1]], [[1, 0], [p["nu_p"] / p["nu"], -p["nu_p"] / p["nu"]]]),
        lambda p: family_algebra("g", {"mu": p["mu"], "mu_p": p["nu"]}),
    ),
    Reduction(
        "f_to_e",
        "f",
        "(e) with the same parameters",
        lambda rng: _params(rng, "mu", "mu_p"),
        lambda p: GradedLinearMap.from_columns([[1]], _SWAP),
        lambda p: family_algebra("e", p),
    ),
    Reduction(
        "h_to_g",
        "h",
        "(g) with the same parameters",
        lambda rng: _params(rng, "mu", "mu_p"),
        lambda p: GradedLinearMap.from_columns([[1]], _SWAP),
        lambda p: family_algebra("g", p),
    ),
    Reduction(
        "a_to_z33",
        "a",
        "z33",
        lambda rng: _params(rng, "l22", l11=0, l12=0, l21=0),
        lambda p: GradedLinearMap.from_columns([[1 / p["l22"]]], _SWAP),
        lambda p: build_family("z33"),
    ),
    Reduction(
        "a_to_z34",
        "a",
        "z34",
        lambda rng: (lambda lam: {"l11": Fraction(0), "l12": lam, "l21": -lam, "l22": Fraction(0)})(_nonzero(rng)),
        lambda p: GradedLinearMap.diagonal([1 / p["l12"]], [1, 1]),
        lambda p: build_family("z34"),
    ),
    Reduction(
        "a_to_z31",
        "a",
        "z31 with alpha = (g2 g2)/l11",
        lambda rng: _sample_a_for_z31(rng, l11_zero=False),
        _a_to_z31_map,
        _a_to_z31_target,
    ),
    Reduction(
        "a_to_z31_l11_zero",
        "a",
        "z31 from l11 = 0",
        lambda rng: _sample_a_for_z31(rng, l11_zero=True),
        _a_to_z31_map,
        _a_to_z31_target,
    ),
    Reduction(
        "e_to_z33",
        "e",
        "z33",
        lambda rng: _params(rng, "mu_p", mu=0),
        lambda p: GradedLinearMap.diagonal([1 / p["mu_p"]], [1, 1]),
        lambda p: build_family("z33"),
    ),
    Reduction(
        "e_to_z35",
        "e",
        "z35",
        lambda rng: _params(rng, "mu", "mu_p"),
        lambda p: GradedLinearMap.diagonal([1 / p["mu_p"]], [1, 1 / (p["mu"] * p["mu_p"])]),
        lambda p: build_family("z35"),
    ),
    Reduction(
        "e_to_z36",
        "e",
        "z36",
        lambda rng: _params(rng, "mu", mu_p=0),
        lambda p: GradedLinearMap.diagonal([1], [1, 1 / p["mu"]]),
        lambda p: build_family("z36"),
    ),
    Reduction(
        "g_to_z37",
        "g",
        "z37 with alpha = mu/mu_p",
        lambda rng: _params(rng, "mu", "mu_p"),
        lambda p: GradedLinearMap.diagonal([1], [1, 1 / p["mu_p"]]),
        lambda p: build_family("z37", alpha=p["mu"] / p["mu_p"]),
    ),
    Reduction(
        "g_to_z38",
        "g",
        "z38",
        lambda rng: _params(rng, "mu", mu_p=0),
        lambda p: GradedLinearMap.diagonal([1], [1, 1 / p["mu"]]),
        lambda p: build_family("z38"),
    ),
)


def reduction_maps() -> dict:
    return {reduction.name: reduction for reduction in REDUCTIONS}


@dataclass(frozen=True)
class ReductionCheck:
    name: str
    ok: bool
    samples: tuple
    failure: Optional[tuple] = None

    def to_dict(self) -> dict:
        data: dict = {
            "reduction": self.name,
            "ok": self.ok,
            "samples": [{k: format_rational(v) for k, v in s.items()} for s in self.samples],
        }
        if self.failure is not None:
            sample, check = self.failure
            data["failure"] = {"sample": {k: format_rational(v) for k, v in sample.items()}, **check.to_dict()}
        return data


def verify_reduction(reduction: Reduction, samples: int = 5, seed: int = DEFAULT_SEED) -> ReductionCheck:
    rng = random.Random(f"{seed}:{reduction.name}")
    drawn = tuple(reduction.sampler(rng) for _ in range(samples))
    for params in drawn:
        check = is_isomorphism(
            reduction.source_algebra(params), reduction.target_algebra(params), reduction.graded_map(params)
        )
        if not check.ok:
            return ReductionCheck(reduction.name, False, drawn, (params, check))
    return ReductionCheck(reduction.name, True, drawn)


def verify_reductions(samples: int = 5, seed: int = DEFAULT_SEED) -> list:
    return [verify_reduction(reduction, samples, seed) for reduction in REDUCTIONS]
