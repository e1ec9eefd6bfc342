"""
Core orchestration logic for zinbiel-lab.

AlgebraLab runs one command's worth of computation against the library and
packs the outcome into a LabResult whose payload is ready for JSON output.
Property failures are results, not exceptions; malformed input still raises
InputError for the caller to map to an exit code.
"""

import sys
from typing import Callable, Optional, Sequence

from .catalog import build, catalog_index, family_spec
from .codec import algebra_to_dict
from .config import Config
from .errors import InputError, StructureError
from .graded import associated_graded, filtration, natural_grading_verdict
from .maps import (
    GradedLinearMap,
    distinguish,
    invariant_battery,
    is_isomorphism,
    transport_invariance,
    verify_reductions,
)
from .polysys import (
    SIGN_CONVENTIONS,
    SOLUTION_FAMILIES,
    compare_sign_conventions,
    cross_validate,
    generic_superidentity_system,
    verify_family,
)
from .series import is_null_filiform, nilpotency_index, power_sequence
from .spectra import char_sequence_at, characteristic_sequence, is_filiform
from .structure import (
    annihilators,
    find_left_annihilating_homogeneous,
    minimal_graded_ideal,
    type_n1_structure_check,
)
from .superalg import SuperAlgebra, is_right_supercommutative, is_zinbiel, parse_element


class LabResult:
    """Result of a lab operation."""

    def __init__(self, success: bool, payload, message: str = ""):
        self.success = success
        self.payload = payload
        self.message = message


def _index_value(index: Optional[int]):
    return "not_nilpotent" if index is None else index


class AlgebraLab:
    """Runs checks, constructions and verification suites."""

    def __init__(self, config: Config, log_callback: Optional[Callable[[str], None]] = None):
        self.config = config
        self.log = log_callback or (lambda msg: print(msg, file=sys.stderr, flush=True))

    def _scan_options(self) -> dict:
        return {
            "seed": self.config.seed,
            "samples": self.config.candidate_samples,
            "steps": self.config.get_steps(),
        }

    # -- single-algebra properties -------------------------------------------------

    def check(self, algebra: SuperAlgebra) -> LabResult:
        self.log(f"Checking the superidentity on {algebra.dim ** 3} basis triples")
        verdict = is_zinbiel(algebra)
        if verdict.ok:
            return LabResult(True, verdict.to_dict(), "superidentity holds")
        return LabResult(False, verdict.to_dict(), f"superidentity fails on {verdict.triple}")

    def series(self, algebra: SuperAlgebra) -> LabResult:
        sequence = power_sequence(algebra)
        index = nilpotency_index(algebra)
        payload = sequence.dims()
        payload["nilpotency_index"] = _index_value(index)
        payload["null_filiform"] = is_null_filiform(algebra)
        return LabResult(index is not None, payload, "nilpotent" if index is not None else "not nilpotent")

    def charseq(self, algebra: SuperAlgebra, element: Optional[str] = None) -> LabResult:
        if element is not None:
            x = parse_element(element, algebra.n, algebra.m)
            sequence = char_sequence_at(algebra, x)
            payload = sequence.to_dict()
            payload["witness"] = str(x)
            return LabResult(True, payload, f"C(x) = {sequence}")

        options = self._scan_options()
        self.log(f"Scanning candidate generators (seed {options['seed']}, {options['samples']} samples)")
        result = characteristic_sequence(algebra, **options)
        payload = result.to_dict()
        payload["filiform"] = is_filiform(algebra, **options).to_dict()
        return LabResult(True, payload, f"C(Z) >= {result.sequence}")

    def gr(self, algebra: SuperAlgebra) -> LabResult:
        graded = associated_graded(algebra)
        payload: dict = {"filtration": filtration(algebra).dims()}
        if not graded.ok:
            payload["violation"] = graded.violation.to_dict()
            payload["natural_grading"] = {"verdict": "no", "reason": graded.violation.reason}
            return LabResult(False, payload, graded.violation.reason)

        self.log(f"Associated graded has {len(graded.layers.layers)} layers")
        payload.update(graded.layers.to_dict())
        payload["gr"] = algebra_to_dict(graded.algebra)
        verdict = natural_grading_verdict(algebra, self.config.seed, self.config.candidate_samples)
        payload["natural_grading"] = verdict.to_dict()
        return LabResult(verdict.status == "yes", payload, verdict.reason)

    def structure(self, algebra: SuperAlgebra) -> LabResult:
        payload: dict = {"annihilators": annihilators(algebra).to_dict(algebra)}
        try:
            element = find_left_annihilating_homogeneous(algebra, log=self.log)
            payload["left_annihilating"] = str(element)
            _, certificate = minimal_graded_ideal(algebra)
            payload["minimal_ideal"] = certificate.to_dict()
        except StructureError as e:
            payload["error"] = str(e)
            return LabResult(False, payload, str(e))
        if algebra.m == 1:
            payload["type_n1"] = type_n1_structure_check(algebra)
        payload["right_supercommutative"] = is_right_supercommutative(algebra).ok
        return LabResult(payload.get("type_n1", True), payload)

    def report(self, algebra: SuperAlgebra) -> LabResult:
        """Everything known about one algebra, keyed for rendering."""
        self.log("Computing invariant battery")
        battery = invariant_battery(algebra, self.config.seed, self.config.candidate_samples)
        payload = {
            "name": algebra.name or "(unnamed)",
            "dims": [algebra.n, algebra.m],
            "zinbiel": is_zinbiel(algebra).ok,
            "right_supercommutative": is_right_supercommutative(algebra).ok,
            "null_filiform": is_null_filiform(algebra),
            "invariants": battery.to_dict(),
        }
        if algebra.n >= 2:
            payload["filiform"] = is_filiform(algebra, **self._scan_options()).status
        return LabResult(payload["zinbiel"], payload)

    # -- catalog ------------------------------------------------------------------

    def catalog_build(self, family_id: str, n=None, m=None, dim=None, alpha=None, beta=None) -> SuperAlgebra:
        spec = family_spec(family_id, n=n, m=m, dim=dim, alpha=alpha, beta=beta)
        self.log(f"Building {spec}")
        return build(spec)

    def catalog_list(self) -> LabResult:
        families = catalog_index()
        return LabResult(True, [family.to_dict() for family in families], f"{len(families)} families")

    # -- maps -----------------------------------------------------------------------

    def iso_verify(self, source: SuperAlgebra, target: SuperAlgebra, graded_map: Optional[GradedLinearMap]) -> LabResult:
        """Check a given map; without one, look for an invariant separating the pair."""
        if graded_map is not None:
            check = is_isomorphism(source, target, graded_map)
            return LabResult(check.ok, check.to_dict())
        self.log("No map given; comparing invariants")
        outcome = distinguish(source, target, self.config.seed, self.config.candidate_samples)
        return LabResult(not outcome.distinguishable, outcome.to_dict())

    def transport_check(self, algebra: SuperAlgebra, samples: Optional[int] = None) -> LabResult:
        samples = samples if samples is not None else self.config.transport_samples
        self.log(f"Transporting by {samples} random graded maps")
        check = transport_invariance(algebra, samples, self.config.seed, self.config.candidate_samples)
        return LabResult(check.ok, check.to_dict())

    def reductions(self, samples: Optional[int] = None) -> LabResult:
        samples = samples if samples is not None else self.config.family_samples
        checks = verify_reductions(samples, self.config.seed)
        for check in checks:
            self.log(f"  {check.name}: {'ok' if check.ok else 'FAILED'}")
        return LabResult(all(c.ok for c in checks), [c.to_dict() for c in checks])

    # -- (n0, n1) polynomial systems --------------------------------------------

    def classify_system(self, pattern: Sequence[int], sign: str = "standard", compare: bool = False) -> LabResult:
        n0, n1 = pattern
        if sign not in SIGN_CONVENTIONS:
            raise InputError(f"Unknown sign convention {sign!r}; expected one of {', '.join(SIGN_CONVENTIONS)}")
        system = generic_superidentity_system(n0, n1, sign=sign)
        self.log(f"Generated {len(system)} equations for pattern ({n0},{n1})")
        payload: dict = {"pattern": [n0, n1], "sign": sign, "count": len(system), "equations": [str(p) for p in system]}
        if not compare:
            return LabResult(True, payload)
        if (n0, n1) != (1, 2):
            raise InputError("--compare is only available for pattern 1,2")
        reports = compare_sign_conventions()
        payload["comparison"] = {convention: report.to_dict() for convention, report in reports.items()}
        payload["reproducing"] = [convention for convention, report in reports.items() if report.ok]
        return LabResult(reports[sign].ok, payload)

    def classify_verify(self, family: Optional[str] = None, samples: Optional[int] = None) -> LabResult:
        letters = [family] if family else list(SOLUTION_FAMILIES)
        samples = samples if samples is not None else self.config.family_samples
        system = generic_superidentity_system(1, 2)
        checks = []
        for letter in letters:
            check = verify_family(letter, count=samples, seed=self.config.seed, system=system)
            self.log(f"  family ({letter}): {'ok' if check.ok else 'FAILED'}")
            checks.append(check)
        payload: dict = {"families": [c.to_dict() for c in checks]}
        success = all(c.ok for c in checks)
        if family is None:
            self.log(f"Cross-validating the symbolic system on {self.config.crossval_samples} assignments")
            crosscheck = cross_validate(1, 2, self.config.crossval_samples, self.config.seed)
            payload["cross_validation"] = crosscheck.to_dict()
            success = success and crosscheck.ok
        return LabResult(success, payload)
