"""
Exception types for zinbiel-lab.

Input problems derive from InputError (the CLI exits with code 2 on them);
everything else signals a failed mathematical expectation.
"""


class ZinbielLabError(Exception):
    """Base class for all zinbiel-lab errors."""


class InputError(ZinbielLabError, ValueError):
    """Malformed or inconsistent input data."""


class DimensionMismatch(InputError):
    """Vector, matrix or algebra dimensions do not agree."""


class ConstraintViolation(InputError):
    """A family or construction constraint is not satisfied."""


class NotHomogeneous(InputError):
    """An element with both even and odd components was given where a homogeneous one is required."""


class SingularMap(InputError):
    """A change of basis block is not invertible."""


class NotNilpotent(ZinbielLabError, ArithmeticError):
    """An operator or algebra expected to be nilpotent is not."""


class StructureError(ZinbielLabError):
    """A structural statement that must hold for Zinbiel superalgebras failed."""
