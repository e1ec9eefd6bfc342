"""
Filtrations, the associated graded superalgebra and the natural grading test.

Layer i (starting at 1) is F^i / F^(i+1) with F^i = Z0^i + Z1^i. Layer
representatives are the canonical basis rows of Z0^i (resp. Z1^i) that are
not already spanned by the next term and the representatives chosen before
them. The adapted basis lists even representatives layer by layer, then odd
representatives layer by layer; gr(Z) is expressed in that basis.
"""

from dataclasses import dataclass
from typing import Optional

from .exactla import Subspace, solve_coordinates
from .maps import GradedLinearMap, distinguish, transport
from .series import even_chain, odd_chain
from .spectra import DEFAULT_SAMPLES, DEFAULT_SEED
from .superalg import SuperAlgebra, SuperElement


@dataclass(frozen=True)
class Filtration:
    even_flag: tuple
    odd_flag: tuple

    @property
    def reaches_zero(self) -> bool:
        return self.even_flag[-1].is_zero() and self.odd_flag[-1].is_zero()

    def dims(self) -> dict:
        return {"even": [t.dim for t in self.even_flag], "odd": [t.dim for t in self.odd_flag]}


def filtration(algebra: SuperAlgebra) -> Filtration:
    return Filtration(even_chain(algebra), odd_chain(algebra))


@dataclass(frozen=True)
class GradedLayers:
    layers: tuple
    adapted_basis: GradedLinearMap

    def to_dict(self) -> dict:
        return {"layers": [list(layer) for layer in self.layers], "adapted_basis": self.adapted_basis.to_dict()}


@dataclass(frozen=True)
class GradingViolation:
    i: int
    j: int
    left: SuperElement
    right: SuperElement
    product: SuperElement
    reason: str

    def to_dict(self) -> dict:
        return {
            "layers": [self.i, self.j],
            "left": str(self.left),
            "right": str(self.right),
            "product": str(self.product),
            "reason": self.reason,
        }


@dataclass(frozen=True)
class AssociatedGraded:
    algebra: Optional[SuperAlgebra]
    layers: Optional[GradedLayers]
    violation: Optional[GradingViolation] = None

    @property
    def ok(self) -> bool:
        return self.violation is None


def _term(chain: tuple, index: int, ambient: int) -> Subspace:
    return chain[index] if index < len(chain) else Subspace.zero(ambient)


def _representatives(upper: Subspace, lower: Subspace) -> list:
    chosen: list = []
    for row in upper.vectors():
        if not Subspace.span(lower.vectors() + chosen, upper.ambient_dim).contains(row):
            chosen.append(row)
    return chosen


def associated_graded(algebra: SuperAlgebra) -> AssociatedGraded:
    dim = algebra.dim
    flags = filtration(algebra)
    zero = algebra.element((0,) * dim)
    if not flags.reaches_zero:
        return AssociatedGraded(
            None, None, GradingViolation(0, 0, zero, zero, zero, "the filtration stabilizes above zero")
        )

    count = max(len(flags.even_flag), len(flags.odd_flag)) - 1
    even_reps, odd_reps = [], []
    for i in range(count):
        even_reps.append(_representatives(_term(flags.even_flag, i, dim), _term(flags.even_flag, i + 1, dim)))
        odd_reps.append(_representatives(_term(flags.odd_flag, i, dim), _term(flags.odd_flag, i + 1, dim)))

    def level(i: int) -> Subspace:
        """F^i for 1-based i."""
        return _term(flags.even_flag, i - 1, dim) + _term(flags.odd_flag, i - 1, dim)

    ordered = [(i + 1, row) for i in range(count) for row in even_reps[i]]
    ordered += [(i + 1, row) for i in range(count) for row in odd_reps[i]]
    position = {row: p for p, (_, row) in enumerate(ordered)}
    adapted = GradedLinearMap.from_columns(
        [row[: algebra.n] for _, row in ordered[: algebra.n]],
        [row[algebra.n:] for _, row in ordered[algebra.n:]],
    )

    products = {}
    for a, (i, x) in enumerate(ordered):
        for b, (j, y) in enumerate(ordered):
            value = algebra.multiply_coords(x, y)
            if not any(value):
                continue
            if not level(i + j).contains(value):
                return AssociatedGraded(
                    None,
                    None,
                    GradingViolation(
                        i,
                        j,
                        algebra.element(x),
                        algebra.element(y),
                        algebra.element(value),
                        f"product of layers {i} and {j} leaves F^{i + j}",
                    ),
                )
            if i + j > count:
                continue
            reps = even_reps[i + j - 1] + odd_reps[i + j - 1]
            coeffs = solve_coordinates(reps + level(i + j + 1).vectors(), value)
            image = [0] * dim
            for rep, coef in zip(reps, coeffs):
                image[position[rep]] = coef
            if any(image):
                products[(a, b)] = image

    layers = tuple((len(even_reps[i]), len(odd_reps[i])) for i in range(count))
    gr = SuperAlgebra(algebra.n, algebra.m, products, name=f"gr({algebra.name})" if algebra.name else "gr")
    return AssociatedGraded(gr, GradedLayers(layers, adapted))


@dataclass(frozen=True)
class GradingVerdict:
    status: str
    reason: str = ""
    invariant: Optional[str] = None

    def to_dict(self) -> dict:
        data: dict = {"verdict": self.status, "reason": self.reason}
        if self.invariant:
            data["invariant"] = self.invariant
        return data


def natural_grading_verdict(
    algebra: SuperAlgebra, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES
) -> GradingVerdict:
    graded = associated_graded(algebra)
    if not graded.ok:
        return GradingVerdict("no", graded.violation.reason)
    adapted = transport(algebra, graded.layers.adapted_basis.inverse())
    if adapted == graded.algebra:
        return GradingVerdict("yes", "structure constants coincide in the adapted basis")
    outcome = distinguish(algebra, graded.algebra, seed, samples)
    if outcome.distinguishable:
        return GradingVerdict("no", "an isomorphism invariant differs", outcome.invariant)
    return GradingVerdict("unknown", "no invariant separates the algebra from gr")
