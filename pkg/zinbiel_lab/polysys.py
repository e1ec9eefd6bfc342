"""
Sparse polynomials over the rationals and the generic superidentity system.

Structure constants of a superalgebra with even dimension n0 and odd
dimension n1 are named by variables:

    e_k f_i = sum_j a f_j      f_i e_k = sum_j b f_j
    f_i f_j = sum_k c e_k      e_k e_l = sum_p d e_p   (only when n0 >= 2)

With n0 = 1 the even index is dropped, so the (1,2) pattern uses
a_i_j, b_i_j (for a_i^j, b_i^j) and c_i_j, twelve variables in total.
"""

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Union

from .errors import ConstraintViolation, InputError
from .exactla import format_rational, parse_rational
from .superalg import SuperAlgebra, koszul_sign, residual_coords

SIGN_CONVENTIONS = ("standard", "printed")
DEFAULT_FAMILY_SEED = 20240917


@dataclass(frozen=True, order=True)
class Var:
    kind: str
    indices: tuple

    def __str__(self) -> str:
        return self.kind + "".join(f"_{i}" for i in self.indices)

    @classmethod
    def parse(cls, text: str) -> "Var":
        match = re.fullmatch(r"([abcd])((?:_\d+)+)", text.strip())
        if not match:
            raise InputError(f"Malformed variable name: {text!r}")
        return cls(match.group(1), tuple(int(i) for i in match.group(2)[1:].split("_")))


# A monomial is a tuple of (Var, exponent) pairs sorted by Var.
Monomial = tuple


def _mono_mul(left: Monomial, right: Monomial) -> Monomial:
    powers: Dict[Var, int] = dict(left)
    for var, exp in right:
        powers[var] = powers.get(var, 0) + exp
    return tuple(sorted(powers.items()))


def _mono_degree(mono: Monomial) -> int:
    return sum(exp for _, exp in mono)


def _mono_key(mono: Monomial) -> tuple:
    """Graded lexicographic order: higher degree first, then variables in order."""
    expanded = tuple(var for var, exp in mono for _ in range(exp))
    return (-_mono_degree(mono), expanded)


def _mono_str(mono: Monomial) -> str:
    return "*".join(str(var) if exp == 1 else f"{var}^{exp}" for var, exp in mono)


class Poly:
    """Polynomial with rational coefficients; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None):
        self.terms: Dict[Monomial, Fraction] = {}
        for mono, coef in (terms or {}).items():
            value = Fraction(coef)
            if value:
                self.terms[mono] = value

    @classmethod
    def constant(cls, value) -> "Poly":
        return cls({(): value})

    @classmethod
    def variable(cls, var: Var) -> "Poly":
        return cls({((var, 1),): 1})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((_mono_degree(m) for m in self.terms), default=0)

    def variables(self) -> list:
        return sorted({var for mono in self.terms for var, _ in mono})

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda item: _mono_key(item[0]))

    def __add__(self, other: Union["Poly", int, Fraction]) -> "Poly":
        other = _as_poly(other)
        terms = dict(self.terms)
        for mono, coef in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coef
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return self.scale(-1)

    def __sub__(self, other: Union["Poly", int, Fraction]) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Union["Poly", int, Fraction]) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other: Union["Poly", int, Fraction]) -> "Poly":
        other = _as_poly(other)
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def scale(self, factor) -> "Poly":
        factor = Fraction(factor)
        return Poly({mono: factor * coef for mono, coef in self.terms.items()})

    def eval(self, assignment: Mapping[Var, object]) -> Fraction:
        total = Fraction(0)
        for mono, coef in self.terms.items():
            value = coef
            for var, exp in mono:
                if var not in assignment:
                    raise InputError(f"No value assigned to {var}")
                value *= Fraction(assignment[var]) ** exp
            total += value
        return total

    def normalized(self) -> "Poly":
        """Scalar multiple whose leading coefficient (graded lex) is 1."""
        if self.is_zero():
            return self
        return self.scale(1 / self.sorted_terms()[0][1])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coef in self.sorted_terms():
            sign = "-" if coef < 0 else "+"
            magnitude = abs(coef)
            if not mono:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = _mono_str(mono)
            else:
                body = f"{format_rational(magnitude)}*{_mono_str(mono)}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({self})"


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.constant(value)


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_eval(p: Poly, assignment: Mapping[Var, object]) -> Fraction:
    return p.eval(assignment)


_FACTOR_RE = re.compile(r"^([abcd](?:_\d+)+)(?:\^(\d+))?$")


def parse_poly(text: str) -> Poly:
    """Parse text such as "a_1_1^2 + a_1_2*a_2_1 - 2*b_1_1"."""
    compact = re.sub(r"\s+", "", text or "")
    if not compact:
        raise InputError("Empty polynomial")
    if compact[0] not in "+-":
        compact = "+" + compact
    result = Poly()
    pos = 0
    for match in re.finditer(r"([+-])([^+-]+)", compact):
        if match.start() != pos:
            raise InputError(f"Malformed polynomial: {text!r}")
        pos = match.end()
        coef = Fraction(-1 if match.group(1) == "-" else 1)
        term = Poly.constant(1)
        for factor in match.group(2).split("*"):
            power = _FACTOR_RE.match(factor)
            if power:
                var = Var.parse(power.group(1))
                exp = int(power.group(2) or 1)
                term = term * Poly({((var, exp),): 1})
            else:
                coef *= parse_rational(factor)
        result = result + term.scale(coef)
    if pos != len(compact):
        raise InputError(f"Malformed polynomial: {text!r}")
    return result


# ---------------------------------------------------------------------------
# Generic structure constants
# ---------------------------------------------------------------------------


def _even_index(n0: int, k: int) -> tuple:
    return () if n0 == 1 else (k,)


def slot_variables(n0: int, n1: int, even_products: Optional[bool] = None) -> dict:
    """Map (left position, right position) -> {result position: Var} for every legal slot."""
    if even_products is None:
        even_products = n0 >= 2
    slots: dict = {}
    for k in range(n0):
        for i in range(n1):
            fi = n0 + i
            slots[(k, fi)] = {n0 + j: Var("a", _even_index(n0, k + 1) + (i + 1, j + 1)) for j in range(n1)}
            slots[(fi, k)] = {n0 + j: Var("b", _even_index(n0, k + 1) + (i + 1, j + 1)) for j in range(n1)}
    for i in range(n1):
        for j in range(n1):
            slots[(n0 + i, n0 + j)] = {
                k: Var("c", (i + 1, j + 1) + _even_index(n0, k + 1)) for k in range(n0)
            }
    if even_products:
        for k in range(n0):
            for p in range(n0):
                slots[(k, p)] = {q: Var("d", (k + 1, p + 1, q + 1)) for q in range(n0)}
    return slots


def generic_variables(n0: int, n1: int, even_products: Optional[bool] = None) -> list:
    return sorted(var for slot in slot_variables(n0, n1, even_products).values() for var in slot.values())


def _symbolic_table(n0: int, n1: int, even_products: Optional[bool]) -> dict:
    dim = n0 + n1
    table = {}
    for pair, slot in slot_variables(n0, n1, even_products).items():
        coords = [Poly() for _ in range(dim)]
        for k, var in slot.items():
            coords[k] = Poly.variable(var)
        table[pair] = coords
    return table


def _sym_mul(table: dict, dim: int, x: Sequence[Poly], y: Sequence[Poly]) -> list:
    result = [Poly() for _ in range(dim)]
    for i, xi in enumerate(x):
        if xi.is_zero():
            continue
        for j, yj in enumerate(y):
            if yj.is_zero() or (i, j) not in table:
                continue
            coef = xi * yj
            for k, entry in enumerate(table[(i, j)]):
                if not entry.is_zero():
                    result[k] = result[k] + coef * entry
    return result


def _triple_sign(convention: str, parities: tuple) -> int:
    if convention == "standard":
        return koszul_sign(parities[1], parities[2])
    if convention == "printed":
        return koszul_sign(parities[0], parities[1])
    raise InputError(f"Unknown sign convention {convention!r}; expected one of {SIGN_CONVENTIONS}")


def symbolic_residuals(
    n0: int, n1: int, sign: str = "standard", even_products: Optional[bool] = None
) -> Dict[tuple, list]:
    """(i, j, k) -> residual coordinates as polynomials, for every basis triple in order."""
    shape = SuperAlgebra(n0, n1)
    dim = shape.dim
    table = _symbolic_table(n0, n1, even_products)
    units = [[Poly.constant(1 if a == b else 0) for b in range(dim)] for a in range(dim)]
    residuals = {}
    for i in range(dim):
        for j in range(dim):
            left_ij = _sym_mul(table, dim, units[i], units[j])
            for k in range(dim):
                s = _triple_sign(sign, (shape.parity(i), shape.parity(j), shape.parity(k)))
                left = _sym_mul(table, dim, left_ij, units[k])
                jk = _sym_mul(table, dim, units[j], units[k])
                kj = _sym_mul(table, dim, units[k], units[j])
                inner = [u + v.scale(s) for u, v in zip(jk, kj)]
                right = _sym_mul(table, dim, units[i], inner)
                residuals[(i, j, k)] = [u - v for u, v in zip(left, right)]
    return residuals


def generic_superidentity_system(
    n0: int, n1: int, sign: str = "standard", even_products: Optional[bool] = None
) -> List[Poly]:
    """Distinct normalized residual polynomials, in triple then coordinate order."""
    seen = set()
    system = []
    for coords in symbolic_residuals(n0, n1, sign, even_products).values():
        for poly in coords:
            if poly.is_zero():
                continue
            canonical = poly.normalized()
            if canonical not in seen:
                seen.add(canonical)
                system.append(canonical)
    return system


def algebra_from_assignment(
    n0: int, n1: int, assignment: Mapping[Var, object], even_products: Optional[bool] = None, name: str = ""
) -> SuperAlgebra:
    """Concrete superalgebra whose structure constants are the assigned values (missing variables are 0)."""
    dim = n0 + n1
    products = {}
    for pair, slot in slot_variables(n0, n1, even_products).items():
        coords = [Fraction(0)] * dim
        for k, var in slot.items():
            coords[k] = Fraction(assignment.get(var, 0))
        products[pair] = coords
    return SuperAlgebra(n0, n1, products, name=name)


def assignment_from_algebra(algebra: SuperAlgebra, even_products: Optional[bool] = None) -> dict:
    """Read the generic variables off a concrete table; raises if a forbidden slot is nonzero."""
    slots = slot_variables(algebra.n, algebra.m, even_products)
    assignment = {}
    for pair, _ in algebra.products():
        if pair not in slots:
            raise ConstraintViolation(f"Product {algebra.label(pair[0])}{algebra.label(pair[1])} is outside the pattern")
    for pair, slot in slots.items():
        coords = algebra.product(*pair)
        for k, var in slot.items():
            assignment[var] = coords[k]
    return assignment


@dataclass(frozen=True)
class CrossCheck:
    ok: bool
    samples: int
    failure: Optional[tuple] = None

    def to_dict(self) -> dict:
        data: dict = {"ok": self.ok, "samples": self.samples}
        if self.failure is not None:
            triple, coordinate, symbolic, concrete = self.failure
            data["failure"] = {
                "triple": list(triple),
                "coordinate": coordinate,
                "symbolic": format_rational(symbolic),
                "concrete": format_rational(concrete),
            }
        return data


def cross_validate(n0: int, n1: int, samples: int = 200, seed: int = DEFAULT_FAMILY_SEED) -> CrossCheck:
    """Compare symbolic residuals with concrete residuals on seeded random structure constants."""
    residuals = symbolic_residuals(n0, n1)
    variables = generic_variables(n0, n1)
    rng = random.Random(seed)
    for _ in range(samples):
        assignment = {var: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for var in variables}
        algebra = algebra_from_assignment(n0, n1, assignment)
        units = [tuple(Fraction(int(a == b)) for b in range(algebra.dim)) for a in range(algebra.dim)]
        for (i, j, k), coords in residuals.items():
            s = koszul_sign(algebra.parity(j), algebra.parity(k))
            concrete = residual_coords(algebra, units[i], units[j], units[k], s)
            for p, poly in enumerate(coords):
                value = poly.eval(assignment)
                if value != concrete[p]:
                    labels = tuple(str(algebra.label(t)) for t in (i, j, k))
                    return CrossCheck(False, samples, (labels, str(algebra.label(p)), value, concrete[p]))
    return CrossCheck(True, samples)


# ---------------------------------------------------------------------------
# Solution families of the (1,2) system
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SolutionFamily:
    letter: str
    params: tuple
    nonzero: tuple
    rules: Callable[[Mapping[str, Fraction]], dict] = field(compare=False)
    description: str = ""

    def check_params(self, values: Mapping[str, object]) -> dict:
        missing = [p for p in self.params if p not in values]
        if missing:
            raise InputError(f"Family ({self.letter}) needs parameters {', '.join(missing)}")
        parsed = {p: parse_rational(values[p]) for p in self.params}
        for p in self.nonzero:
            if parsed[p] == 0:
                raise ConstraintViolation(f"Family ({self.letter}) requires {p} != 0")
        return parsed

    def sample(self, rng: random.Random) -> dict:
        values = {}
        for p in self.params:
            value = Fraction(0)
            while value == 0:
                value = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            values[p] = value
        return values


def _family_a(p: Mapping) -> dict:
    return {
        ("f1", "f1"): {"e1": p["l11"]},
        ("f1", "f2"): {"e1": p["l12"]},
        ("f2", "f1"): {"e1": p["l21"]},
        ("f2", "f2"): {"e1": p["l22"]},
    }


def _family_b(p: Mapping) -> dict:
    l11, l12, mu = p["l11"], p["l12"], p["mu"]
    return {
        ("f1", "e1"): {"f1": mu, "f2": -l11 / l12 * mu},
        ("f2", "e1"): {"f1": l12 / l11 * mu, "f2": -mu},
        ("f1", "f1"): {"e1": l11},
        ("f1", "f2"): {"e1": l12},
        ("f2", "f1"): {"e1": l12},
        ("f2", "f2"): {"e1": l12 * l12 / l11},
    }


def _family_c(p: Mapping) -> dict:
    mu, mu_p = p["mu"], p["mu_p"]
    return {
        ("e1", "f1"): {"f1": mu, "f2": -mu * mu / mu_p},
        ("e1", "f2"): {"f1": mu_p, "f2": -mu},
    }


def _family_d(p: Mapping) -> dict:
    mu, nu, nu_p = p["mu"], p["nu"], p["nu_p"]
    return {
        ("e1", "f1"): {"f1": mu, "f2": -mu * nu / nu_p},
        ("e1", "f2"): {"f1": mu * nu_p / nu, "f2": -mu},
        ("f1", "e1"): {"f1": nu, "f2": -nu * nu / nu_p},
        ("f2", "e1"): {"f1": nu_p, "f2": -nu},
    }


def _family_e(p: Mapping) -> dict:
    return {("f1", "e1"): {"f2": p["mu"]}, ("f1", "f1"): {"e1": p["mu_p"]}}


def _family_f(p: Mapping) -> dict:
    return {("f2", "e1"): {"f1": p["mu"]}, ("f2", "f2"): {"e1": p["mu_p"]}}


def _family_g(p: Mapping) -> dict:
    return {("e1", "f1"): {"f2": p["mu"]}, ("f1", "e1"): {"f2": p["mu_p"]}}


def _family_h(p: Mapping) -> dict:
    return {("e1", "f2"): {"f1": p["mu"]}, ("f2", "e1"): {"f1": p["mu_p"]}}


SOLUTION_FAMILIES: Dict[str, SolutionFamily] = {
    family.letter: family
    for family in (
        SolutionFamily("a", ("l11", "l12", "l21", "l22"), (), _family_a, "f_i f_j = l_ij e1"),
        SolutionFamily("b", ("l11", "l12", "mu"), ("l11", "l12"), _family_b, "symmetric odd pairing of rank 1 with f e1"),
        SolutionFamily("c", ("mu", "mu_p"), ("mu_p",), _family_c, "e1 f_i only"),
        SolutionFamily("d", ("mu", "nu", "nu_p"), ("nu", "nu_p"), _family_d, "e1 f_i and f_i e1"),
        SolutionFamily("e", ("mu", "mu_p"), (), _family_e, "f1 e1 = mu f2, f1 f1 = mu_p e1"),
        SolutionFamily("f", ("mu", "mu_p"), (), _family_f, "f2 e1 = mu f1, f2 f2 = mu_p e1"),
        SolutionFamily("g", ("mu", "mu_p"), (), _family_g, "e1 f1 = mu f2, f1 e1 = mu_p f2"),
        SolutionFamily("h", ("mu", "mu_p"), (), _family_h, "e1 f2 = mu f1, f2 e1 = mu_p f1"),
    )
}


def solution_family(letter: str) -> SolutionFamily:
    try:
        return SOLUTION_FAMILIES[letter]
    except KeyError:
        raise InputError(f"Unknown solution family {letter!r}; expected one of {', '.join(SOLUTION_FAMILIES)}") from None


def family_algebra(letter: str, params: Mapping[str, object]) -> SuperAlgebra:
    family = solution_family(letter)
    values = family.check_params(params)
    return SuperAlgebra.from_rules(1, 2, family.rules(values), name=f"({letter})")


@dataclass(frozen=True)
class FamilyCheck:
    letter: str
    ok: bool
    samples: tuple
    failure: Optional[tuple] = None

    def to_dict(self) -> dict:
        data: dict = {
            "family": self.letter,
            "ok": self.ok,
            "samples": [{k: format_rational(v) for k, v in s.items()} for s in self.samples],
        }
        if self.failure is not None:
            sample, poly = self.failure
            data["failure"] = {"sample": {k: format_rational(v) for k, v in sample.items()}, "poly": str(poly)}
        return data


def family_samples(letter: str, count: int, seed: int = DEFAULT_FAMILY_SEED) -> list:
    family = solution_family(letter)
    rng = random.Random(f"{seed}:{letter}")
    return [family.sample(rng) for _ in range(count)]


def verify_family(
    letter: str,
    samples: Optional[Iterable[Mapping[str, object]]] = None,
    count: int = 5,
    seed: int = DEFAULT_FAMILY_SEED,
    system: Optional[List[Poly]] = None,
) -> FamilyCheck:
    """Substitute each sample's structure constants into the (1,2) system."""
    family = solution_family(letter)
    checked = [family.check_params(s) for s in samples] if samples is not None else family_samples(letter, count, seed)
    system = system if system is not None else generic_superidentity_system(1, 2)
    for sample in checked:
        assignment = assignment_from_algebra(family_algebra(letter, sample))
        for poly in system:
            if poly.eval(assignment) != 0:
                return FamilyCheck(letter, False, tuple(checked), (sample, poly))
    return FamilyCheck(letter, True, tuple(checked))


# ---------------------------------------------------------------------------
# Transcribed (1,2) equation list
# ---------------------------------------------------------------------------

REFERENCE_EQUATIONS_1_2 = (
    (("e1", "e1", "f1"), "a_1_1^2 + a_1_1*b_1_1 + a_1_2*a_2_1 + a_2_1*b_1_2"),
    (("e1", "e1", "f1"), "a_1_1*a_1_2 + a_1_2*a_2_2 + a_1_2*b_1_1 + a_2_2*b_1_2"),
    (("e1", "e1", "f2"), "a_1_1*a_2_1 + a_1_1*b_2_1 + a_2_1*a_2_2 + a_2_1*b_2_2"),
    (("e1", "e1", "f2"), "a_1_2*a_2_1 + a_1_2*b_2_1 + a_2_2^2 + a_2_2*b_2_2"),
    (("e1", "f1", "e1"), "a_1_1^2 + a_1_2*a_2_1 - a_1_2*b_2_1 + a_2_1*b_1_2"),
    (("e1", "f1", "e1"), "a_1_1*a_1_2 - a_1_1*b_1_2 + a_1_2*a_2_2 + a_1_2*b_1_1 - a_1_2*b_2_2 + a_2_2*b_1_2"),
    (("e1", "f2", "e1"), "a_1_1*a_2_1 + a_1_1*b_2_1 + a_2_1*a_2_2 - a_2_1*b_1_1 + a_2_1*b_2_2 - a_2_2*b_2_1"),
    (("e1", "f2", "e1"), "a_1_2*a_2_1 + a_1_2*b_2_1 - a_2_1*b_1_2 + a_2_2^2"),
    (("e1", "f1", "f1"), "a_1_1*c_1_1 + a_1_2*c_2_1"),
    (("e1", "f1", "f2"), "a_1_1*c_1_2 + a_1_2*c_2_2"),
    (("e1", "f2", "f1"), "a_2_1*c_1_1 + a_2_2*c_2_1"),
    (("e1", "f2", "f2"), "a_2_1*c_1_2 + a_2_2*c_2_2"),
    (("f1", "e1", "e1"), "b_1_1^2 + b_1_2*b_2_1"),
    (("f1", "e1", "e1"), "b_1_1*b_1_2 + b_1_2*b_2_2"),
    (("f2", "e1", "e1"), "b_1_1*b_2_1 + b_2_1*b_2_2"),
    (("f2", "e1", "e1"), "b_1_2*b_2_1 + b_2_2^2"),
    (("f1", "e1", "f1"), "a_1_1*c_1_1 + a_1_2*c_1_2 + b_1_2*c_1_2 - b_1_2*c_2_1"),
    (("f1", "e1", "f2"), "a_2_1*c_1_1 + a_2_2*c_1_2 - b_1_1*c_1_2 - b_1_2*c_2_2 + b_2_1*c_1_1 + b_2_2*c_1_2"),
    (("f2", "e1", "f1"), "a_1_1*c_2_1 + a_1_2*c_2_2 + b_1_1*c_2_1 + b_1_2*c_2_2 - b_2_1*c_1_1 - b_2_2*c_2_1"),
    (("f2", "e1", "f2"), "a_2_1*c_2_1 + a_2_2*c_2_2 - b_2_1*c_1_2 + b_2_1*c_2_1"),
    (("f1", "f1", "e1"), "a_1_1*c_1_1 + a_1_2*c_1_2 + b_1_1*c_1_1 + b_1_2*c_1_2"),
    (("f1", "f2", "e1"), "a_2_1*c_1_1 + a_2_2*c_1_2 + b_2_1*c_1_1 + b_2_2*c_1_2"),
    (("f2", "f1", "e1"), "a_1_1*c_2_1 + a_1_2*c_2_2 + b_1_1*c_2_1 + b_1_2*c_2_2"),
    (("f2", "f2", "e1"), "a_2_1*c_2_1 + a_2_2*c_2_2 + b_2_1*c_2_1 + b_2_2*c_2_2"),
    (("f1", "f1", "f1"), "a_1_1*c_1_1"),
    (("f1", "f1", "f1"), "a_1_2*c_1_1"),
    (("f1", "f1", "f2"), "a_2_1*c_1_1 - b_1_1*c_1_2 + b_1_1*c_2_1"),
    (("f1", "f1", "f2"), "a_2_2*c_1_1 - b_1_2*c_1_2 + b_1_2*c_2_1"),
    (("f1", "f2", "f1"), "a_1_1*c_1_2 + b_1_1*c_1_2 - b_1_1*c_2_1"),
    (("f1", "f2", "f1"), "a_1_2*c_1_2 + b_1_2*c_1_2 - b_1_2*c_2_1"),
    (("f1", "f2", "f2"), "a_2_1*c_1_2"),
    (("f1", "f2", "f2"), "a_2_2*c_1_2"),
    (("f2", "f1", "f1"), "a_1_1*c_2_1"),
    (("f2", "f1", "f1"), "a_1_2*c_2_1"),
    (("f2", "f1", "f2"), "a_2_1*c_2_1 - b_2_1*c_1_2 + b_2_1*c_2_1"),
    (("f2", "f1", "f2"), "a_2_2*c_2_1 - b_2_2*c_1_2 + b_2_2*c_2_1"),
    (("f2", "f2", "f1"), "a_1_1*c_2_2 + b_2_1*c_1_2 - b_2_1*c_2_1"),
    (("f2", "f2", "f1"), "a_1_2*c_2_2 + b_2_2*c_1_2 - b_2_2*c_2_1"),
    (("f2", "f2", "f2"), "a_2_1*c_2_2"),
    (("f2", "f2", "f2"), "a_2_2*c_2_2"),
)


def reference_equations() -> List[Poly]:
    return [parse_poly(text) for _, text in REFERENCE_EQUATIONS_1_2]


@dataclass(frozen=True)
class MatchReport:
    matched: tuple
    unmatched: tuple
    uncovered: tuple

    @property
    def ok(self) -> bool:
        return not self.unmatched

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "matched": len(self.matched),
            "unmatched": [str(p) for p in self.unmatched],
            "uncovered": [str(p) for p in self.uncovered],
        }


def system_matches_transcription(generated: Sequence[Poly], transcribed: Sequence[Poly]) -> MatchReport:
    """Match transcribed equations against generated ones up to a nonzero scalar."""
    generated_canonical = [p.normalized() for p in generated]
    matched, unmatched, hit = [], [], set()
    for poly in transcribed:
        canonical = poly.normalized()
        if canonical in generated_canonical:
            matched.append(poly)
            hit.add(canonical)
        else:
            unmatched.append(poly)
    uncovered = [p for p, c in zip(generated, generated_canonical) if c not in hit]
    return MatchReport(tuple(matched), tuple(unmatched), tuple(uncovered))


def compare_sign_conventions() -> dict:
    """Match report of the transcribed (1,2) list under each sign convention."""
    transcribed = reference_equations()
    return {
        convention: system_matches_transcription(generic_superidentity_system(1, 2, sign=convention), transcribed)
        for convention in SIGN_CONVENTIONS
    }
