"""Exception types raised across the package.

Every error derives from :class:`PCMError` (itself a ``ValueError``) so callers
can catch the whole family at once. Locations are reported 1-based, matching
the ``a_ij`` notation used throughout.
"""

from __future__ import annotations


class PCMError(ValueError):
    """Base class for all package errors."""


class NotSquare(PCMError):
    pass


class NonPositiveEntry(PCMError):
    def __init__(self, i: int, j: int, value: float | None = None):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"entry ({i},{j}) must be a positive finite number, got {value!r}")


class DiagonalViolation(PCMError):
    def __init__(self, i: int, value: float):
        self.i, self.value = i, value
        super().__init__(f"diagonal entry ({i},{i}) must be 1, got {value!r}")


class ReciprocityViolation(PCMError):
    def __init__(self, i: int, j: int, product: float):
        self.i, self.j, self.product = i, j, product
        super().__init__(f"a_{i}{j} * a_{j}{i} = {product!r}, expected 1")


class WrongLength(PCMError):
    pass


class TooSmall(PCMError):
    pass


class BadIndices(PCMError):
    pass


class BadPermutation(PCMError):
    pass


class DomainError(PCMError):
    pass


class UnknownRanking(PCMError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class CTOnRanking(PCMError):
    pass


class BadSpec(PCMError):
    pass


class ParseError(PCMError):
    pass
