"""
zinbiel-lab - exact arithmetic for Zinbiel superalgebras

Check the superidentity, compute power series, characteristic sequences,
associated graded algebras and annihilators, build the classified families
and verify isomorphisms, all over the rationals.
"""

__version__ = "1.0.0"
__all__ = ["__version__"]
