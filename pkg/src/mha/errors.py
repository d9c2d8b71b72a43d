"""Exception hierarchy.

``InvalidInput`` subclasses map to CLI exit code 2, ``InternalInconsistency``
to exit code 3. Every exception names the definition or identity it concerns
in ``definition`` so reports can quote it.
"""
from __future__ import annotations


class MHAError(Exception):
    definition = ""

    def __init__(self, message: str = "", **details):
        super().__init__(message)
        self.details = details
        for k, v in details.items():
            setattr(self, k, v)


class DimensionMismatch(MHAError, ValueError):
    definition = "shape compatibility"


class ConstructionError(MHAError):
    """A linear construction (solve, counit, antipode) could not be completed."""


class InconsistentSystem(ConstructionError):
    """A linear system has no solution; ``witness`` proves it."""

    definition = "linear system consistency"


class InvalidInput(MHAError):
    pass


class SpecFileError(InvalidInput):
    definition = "spec file format"

    def __init__(self, message: str, line: int | None = None, **details):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, line=line, **details)


class NonAssociative(InvalidInput):
    definition = "associativity of the product"


class DegenerateProduct(InvalidInput):
    definition = "non-degenerate product"


class BadUnit(InvalidInput):
    definition = "two-sided unit"


class NotCoassociative(InvalidInput):
    definition = "coassociativity of the comultiplication"


class NotHomomorphism(InvalidInput):
    definition = "comultiplication is an algebra homomorphism"


class NonUnitalInput(InvalidInput):
    definition = "unital algebra (finite-dimensional multiplier Hopf algebras are unital)"


class InvalidGroup(InvalidInput):
    definition = "group axioms"


class UnderdeterminedSystem(ConstructionError):
    definition = "the sliced integral values span A"


class RightLegNotFull(ConstructionError):
    definition = "right leg of the comultiplication is all of A"


class NotProportional(ConstructionError):
    definition = "left cointegral: a h is a multiple of h"


class LegDeficient(ConstructionError):
    definition = "left leg of the comultiplication of the cointegral is all of A"


class VerificationFailed(ConstructionError):
    pass


class InternalInconsistency(MHAError):
    """A mathematically guaranteed implication failed; always a bug signal."""

    def __init__(self, message: str, stage: str = "", **details):
        super().__init__(f"[{stage}] {message}" if stage else message, stage=stage, **details)
