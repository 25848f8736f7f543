"""Exception types shared across the package.

The split matters for the command-line front end: ``ValidationError``
subclasses map to exit code 2, ``ShelfCapExceeded`` to exit code 3, and
``InternalInconsistency`` is never caught (it signals a bug, not bad input).
"""

from __future__ import annotations


class LLCBoundsError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(LLCBoundsError, ValueError):
    """Rejected input: a hypothesis of the counting rule is violated."""


class NonPositiveDemand(ValidationError):
    """Demand (the a-parameter count) must be a positive integer."""


class NonPositiveBudget(ValidationError):
    """Budget (the b-parameter count) must be a positive integer."""


class NegativeRank(ValidationError):
    """The Fisher-information rank must be a non-negative integer."""


class NonIncreasingPrices(ValidationError):
    """Shelf prices must satisfy 1 <= m_1 < m_2 < ... strictly."""


class NegativeInventory(ValidationError):
    """Shelf inventories must be non-negative integers."""


class NoIntegerPriceInGap(ValidationError):
    """No integer price fits strictly between the neighbouring shelves."""


class InvalidNetworkShape(ValidationError):
    """Layer sizes must satisfy N, H, M >= 1 and 0 <= H* < H."""


class PolynomialWithHiddenUnits(ValidationError):
    """Polynomial activations are supported only when H* = 0."""


class P2RequiresTrueUnits(ValidationError):
    """The duplicated-weight singular point exists only when H* >= 1."""


class RankTooLarge(ValidationError):
    """Reduced-rank regression requires R < min(M, N, H)."""


class DuplicateMonomials(ValidationError):
    """Witness construction needs pairwise distinct exponent tuples."""


class InstanceTooLarge(ValidationError):
    """The brute-force allocation check refuses instances this large."""


class NotFoundWithin(LLCBoundsError):
    """The comparison never flipped within the scanned range."""

    def __init__(self, scan_max: int):
        self.scan_max = scan_max
        super().__init__(
            f"comparison did not flip within H-H* = 1..{scan_max}; "
            "increase scan_max to certify a threshold"
        )


class ShelfCapExceeded(LLCBoundsError):
    """An infinite shelf family was materialized up to its hard cap
    without accumulating enough inventory to meet demand."""


class InternalInconsistency(LLCBoundsError):
    """A closed form and the generic pipeline disagreed.

    This is never a valid state; it indicates an implementation bug.
    """
