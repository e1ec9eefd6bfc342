"""
Left multiplication operators, Jordan types and characteristic sequences.

The characteristic sequence is a maximum over the infinite set Z0 \\ Z0^2.
It is approximated from below by a deterministic candidate scan: basis
vectors, then pairwise combinations with a fixed set of rational steps, then
a seeded batch of random combinations.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ConstraintViolation, DimensionMismatch, NotHomogeneous, NotNilpotent
from .exactla import Matrix, Subspace, parse_rational, rank, unit_vector
from .series import even_part, even_square, odd_part, product_subspace
from .superalg import SuperAlgebra, SuperElement

DEFAULT_STEPS = ("1", "-1", "2", "-2", "1/2")
DEFAULT_SAMPLES = 200
DEFAULT_SEED = 20240917


@dataclass(frozen=True, order=True)
class CharSequence:
    """Jordan types (C0 | C1), compared lexicographically on (c0, c1)."""

    c0: tuple
    c1: tuple

    def __str__(self) -> str:
        def fmt(parts: tuple) -> str:
            return "(" + ",".join(str(p) for p in parts) + ")"

        return f"({fmt(self.c0)} | {fmt(self.c1)})"

    def to_dict(self) -> dict:
        return {"c0": list(self.c0), "c1": list(self.c1)}


def left_mult_matrices(algebra: SuperAlgebra, x: SuperElement) -> tuple:
    """(M0, M1): L_x restricted to the even part and to the odd part."""
    if (x.n, x.m) != (algebra.n, algebra.m):
        raise DimensionMismatch(f"Element of shape ({x.n},{x.m}) in an algebra of shape ({algebra.n},{algebra.m})")
    if any(x.odd):
        raise NotHomogeneous(f"L_x needs an even element, got {x}")
    n = algebra.n
    columns = [algebra.multiply_coords(x.coords, unit_vector(algebra.dim, j)) for j in range(algebra.dim)]
    m0 = Matrix.from_columns([col[:n] for col in columns[:n]], n)
    m1 = Matrix.from_columns([col[n:] for col in columns[n:]], algebra.m)
    return m0, m1


def jordan_blocks(matrix: Matrix) -> tuple:
    """Jordan block sizes of a nilpotent matrix, read off its rank profile."""
    if not matrix.is_square:
        raise DimensionMismatch("Jordan type of a non-square matrix")
    ranks = [matrix.rows]
    power = matrix
    while ranks[-1] > 0:
        current = rank(power)
        if current == ranks[-1]:
            raise NotNilpotent(f"Rank profile {ranks + [current]} stabilizes above zero")
        ranks.append(current)
        power = power @ matrix
    # at_least[k] = number of blocks of size >= k
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    blocks = []
    for size in range(len(ranks) - 1, 0, -1):
        blocks.extend([size] * (at_least[size - 1] - at_least[size]))
    return tuple(blocks)


def char_sequence_at(algebra: SuperAlgebra, x: SuperElement, square: Optional[Subspace] = None) -> CharSequence:
    if any(x.odd):
        raise NotHomogeneous(f"Characteristic sequences need an even element, got {x}")
    square = square if square is not None else even_square(algebra)
    if square.contains(x.coords):
        raise ConstraintViolation(f"{x} lies in Z0^2")
    m0, m1 = left_mult_matrices(algebra, x)
    return CharSequence(jordan_blocks(m0), jordan_blocks(m1))


def candidate_elements(
    algebra: SuperAlgebra,
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    steps: Sequence = DEFAULT_STEPS,
    square: Optional[Subspace] = None,
) -> list:
    """Even elements outside Z0^2 in scan order, without repeats."""
    n = algebra.n
    square = square if square is not None else even_square(algebra)
    seen = set()
    found = []

    def offer(even: tuple) -> None:
        coords = even + (Fraction(0),) * algebra.m
        if coords in seen or not any(even) or square.contains(coords):
            return
        seen.add(coords)
        found.append(SuperElement.from_coords(coords, n))

    units = [unit_vector(n, i) for i in range(n)]
    for u in units:
        offer(u)
    factors = [parse_rational(s) for s in steps]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for q in factors:
                offer(tuple(a + q * b for a, b in zip(units[i], units[j])))
    rng = random.Random(seed)
    for _ in range(samples if n else 0):
        offer(tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)))
    return found


@dataclass(frozen=True)
class CharacteristicResult:
    sequence: CharSequence
    witness: SuperElement
    shared_witness: bool
    candidates: int

    def to_dict(self) -> dict:
        data = self.sequence.to_dict()
        data["witness"] = str(self.witness)
        data["shared_witness"] = self.shared_witness
        data["candidates"] = self.candidates
        return data


def characteristic_sequence(
    algebra: SuperAlgebra,
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    steps: Sequence = DEFAULT_STEPS,
) -> CharacteristicResult:
    """Maximum of char_sequence_at over the candidate scan (a certified lower bound)."""
    square = even_square(algebra)
    candidates = candidate_elements(algebra, seed, samples, steps, square)
    if not candidates:
        raise ConstraintViolation("The even part lies inside Z0^2; no candidate generators")
    sequences = [char_sequence_at(algebra, x, square) for x in candidates]
    best_index = 0
    for index, seq in enumerate(sequences):
        if seq > sequences[best_index]:
            best_index = index
    top_c0 = max(seq.c0 for seq in sequences)
    top_c1 = max(seq.c1 for seq in sequences)
    best = sequences[best_index]
    return CharacteristicResult(
        sequence=CharSequence(top_c0, top_c1),
        witness=candidates[best_index],
        shared_witness=(best.c0, best.c1) == (top_c0, top_c1),
        candidates=len(candidates),
    )


@dataclass(frozen=True)
class Verdict:
    """Three-valued answer: "yes", "no" or "unknown"."""

    status: str
    witness: Optional[SuperElement] = None
    reason: str = ""

    def to_dict(self) -> dict:
        data: dict = {"verdict": self.status}
        if self.witness is not None:
            data["witness"] = str(self.witness)
        if self.reason:
            data["reason"] = self.reason
        return data


def _scan(algebra: SuperAlgebra, target: CharSequence, check_odd: bool, seed: int, samples: int, steps: Sequence) -> Verdict:
    square = even_square(algebra)
    goal = (target.c0, target.c1) if check_odd else (target.c0,)
    attained = None
    # C(Z) is the maximum, so one candidate above the target settles "no"
    for x in candidate_elements(algebra, seed, samples, steps, square):
        seq = char_sequence_at(algebra, x, square)
        key = (seq.c0, seq.c1) if check_odd else (seq.c0,)
        if key > goal:
            return Verdict("no", x, f"C(x) = {seq} exceeds the target")
        if key == goal and attained is None:
            attained = (x, seq)
    if attained is not None:
        x, seq = attained
        return Verdict("yes", x, f"C(x) = {seq}")
    return Verdict("unknown", reason="no scanned candidate attains the target")


def is_filiform(
    algebra: SuperAlgebra,
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    steps: Sequence = DEFAULT_STEPS,
) -> Verdict:
    """Filiform means C0 = (n-1, 1) and C1 = (m), realised by one generator."""
    n, m = algebra.n, algebra.m
    if n < 2:
        return Verdict("no", reason=f"even dimension {n} < 2")
    square = even_square(algebra)
    if square.dim < n - 2:
        return Verdict("no", reason=f"dim Z0^2 = {square.dim} < n-2 = {n - 2}")
    if m:
        odd_square = product_subspace(algebra, even_part(algebra), odd_part(algebra))
        if odd_square.dim < m - 1:
            return Verdict("no", reason=f"dim Z0Z1 = {odd_square.dim} < m-1 = {m - 1}")
    target = CharSequence((n - 1, 1), (m,) if m else ())
    return _scan(algebra, target, True, seed, samples, steps)


def is_p_filiform(
    algebra: SuperAlgebra,
    p: int,
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    steps: Sequence = DEFAULT_STEPS,
) -> Verdict:
    """C0 = (n-p, 1, ..., 1) on the even part; the odd part is not constrained."""
    n = algebra.n
    if not 0 <= p < n:
        return Verdict("no", reason=f"p = {p} outside 0..{n - 1}")
    square = even_square(algebra)
    if n - p > square.dim + 1:
        return Verdict("no", reason=f"a block of size {n - p} needs dim Z0^2 >= {n - p - 1}, got {square.dim}")
    target = CharSequence((n - p,) + (1,) * p, ())
    return _scan(algebra, target, False, seed, samples, steps)
