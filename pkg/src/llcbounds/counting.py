"""Budget-constrained counting rule for local learning coefficient bounds.

The input is a tuple ``(r, alpha, beta, shelves)``: the rank ``r`` of the
Fisher information matrix, a demand ``alpha`` (number of a-parameters), a
budget ``beta`` (number of b-parameters), and a sequence of shelves, where
shelf ``s`` carries ``n_s`` items at unit price ``m_s`` and the prices are
strictly increasing.  Twice the excess of the bound over ``r/2`` equals the
maximum total number of items purchasable (fractional quantities allowed)
under the demand and budget constraints, bought cheapest shelf first:

* ``L``  -- index of the shelf where collecting stops when the budget is
  ignored (the first prefix whose inventory covers the demand, or the last
  shelf if total inventory falls short);
* ``n_s*`` -- per-shelf purchase counts ignoring the budget (full inventory
  below shelf ``L``, the remaining demand on shelf ``L``);
* ``K``  -- last shelf index whose items can all be paid for within budget.

The resulting bound is::

    lambda = r/2 + | beta / (2 m_1)                                if K = 0
                   | (beta + sum_{s<=K} (m_{K+1} - m_s) n_s*)
                   |      / (2 m_{K+1})                            if 1 <= K <= L-1
                   | (sum_{s<=L} n_s*) / 2                         if K = L

with multiplicity 2 exactly when the budget is exhausted at the moment some
shelf is bought out (``beta = sum_{s<=k} m_s n_s*`` for some ``k``), and 1
otherwise.

All arithmetic is exact; results are :class:`fractions.Fraction` values in
lowest terms.  Every function here is pure and all values are immutable, so
they are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, NamedTuple, Optional, Union

from .errors import (
    NegativeInventory,
    NegativeRank,
    NoIntegerPriceInGap,
    NonIncreasingPrices,
    NonPositiveBudget,
    NonPositiveDemand,
    ShelfCapExceeded,
    ValidationError,
)

DEFAULT_HARD_CAP = 10**6


class Shelf(NamedTuple):
    """One shelf: ``n`` items (inventory) at unit price ``m``.

    ``n = 0`` is legal everywhere; empty shelves never change a bound.
    """

    m: int
    n: int


ShelfLike = Union[Shelf, tuple]


class ShelfSequence:
    """Finite list or lazily generated infinite family of shelves.

    Prices must be strictly increasing (``1 <= m_1 < m_2 < ...``); this is
    checked incrementally as shelves are materialized.  Infinite families are
    described by a deterministic ``generator`` mapping the 1-based index to a
    shelf, with a hard cap on how many shelves may ever be materialized.
    Materialization only appends to an internal cache, and the generator is
    required to be deterministic, so concurrent use is safe.
    """

    def __init__(
        self,
        *,
        shelves: Optional[Iterable[ShelfLike]] = None,
        generator: Optional[Callable[[int], ShelfLike]] = None,
        hard_cap: int = DEFAULT_HARD_CAP,
    ):
        if (shelves is None) == (generator is None):
            raise ValueError("provide exactly one of shelves= or generator=")
        self._generator = generator
        self._hard_cap = hard_cap
        self._cache: list[Shelf] = []
        if shelves is not None:
            raw = list(shelves)
            if not raw:
                raise ValidationError("a finite shelf sequence needs at least one shelf")
            self._gamma: Optional[int] = len(raw)
            for item in raw:
                self._append(item)
        else:
            if hard_cap < 1:
                raise ValueError("hard_cap must be a positive integer")
            self._gamma = None

    @classmethod
    def finite(cls, shelves: Iterable[ShelfLike]) -> "ShelfSequence":
        """Build a finite sequence from ``(m, n)`` pairs or :class:`Shelf`."""
        return cls(shelves=shelves)

    @classmethod
    def infinite(
        cls,
        generator: Callable[[int], ShelfLike],
        hard_cap: int = DEFAULT_HARD_CAP,
    ) -> "ShelfSequence":
        """Build an infinite family from a deterministic 1-based generator."""
        return cls(generator=generator, hard_cap=hard_cap)

    @property
    def gamma(self) -> Optional[int]:
        """Number of shelves, or ``None`` for an infinite family."""
        return self._gamma

    @property
    def is_finite(self) -> bool:
        return self._gamma is not None

    @property
    def hard_cap(self) -> int:
        return self._hard_cap

    def _append(self, item: ShelfLike) -> None:
        shelf = Shelf(*item)
        if shelf.m != int(shelf.m) or shelf.n != int(shelf.n):
            raise ValidationError(f"shelf entries must be integers, got {item!r}")
        index = len(self._cache) + 1
        if shelf.m < 1:
            raise NonIncreasingPrices(f"shelf {index}: price {shelf.m} < 1")
        if self._cache and shelf.m <= self._cache[-1].m:
            raise NonIncreasingPrices(
                f"shelf {index}: price {shelf.m} does not exceed "
                f"previous price {self._cache[-1].m}"
            )
        if shelf.n < 0:
            raise NegativeInventory(f"shelf {index}: inventory {shelf.n} < 0")
        self._cache.append(shelf)

    def shelf(self, s: int) -> Shelf:
        """Return the 1-indexed shelf ``s``, materializing it if needed."""
        if s < 1:
            raise IndexError("shelf indices are 1-based")
        if self._gamma is not None and s > self._gamma:
            raise IndexError(f"shelf {s} out of range (gamma={self._gamma})")
        if self._gamma is None and s > self._hard_cap:
            raise ShelfCapExceeded(
                f"shelf {s} exceeds the materialization cap {self._hard_cap}"
            )
        while len(self._cache) < s:
            assert self._generator is not None
            self._append(self._generator(len(self._cache) + 1))
        return self._cache[s - 1]

    def prefix(self, count: int) -> list[Shelf]:
        """Materialize and return the first ``count`` shelves."""
        if count:
            self.shelf(count)
        return self._cache[:count]


@dataclass(frozen=True)
class ProblemSpec:
    """Input tuple of the counting rule: rank, demand, budget, shelves."""

    r: int
    alpha: int
    beta: int
    shelves: ShelfSequence


class CaseTag(str, Enum):
    """Which branch of the three-case bound applied."""

    BUDGET_EXHAUSTED_ON_FIRST_SHELF = "BudgetExhaustedOnFirstShelf"
    MIDDLE = "Middle"
    ALL_DEMAND_MET = "AllDemandMet"


@dataclass(frozen=True)
class BoundResult:
    """Bound value plus the intermediate quantities that produced it."""

    lambda_bound: Fraction
    multiplicity: int
    L: int
    K: int
    n_star: tuple[int, ...]
    case: CaseTag


def validate_spec(spec: ProblemSpec) -> ProblemSpec:
    """Check the counting rule's hypotheses; return ``spec`` unchanged.

    Finite shelf lists are checked in full.  For infinite families only the
    first shelf is forced here; later shelves are validated as they are
    materialized, so price violations deep in a generated family surface from
    whichever computation first touches them.
    """
    if spec.r < 0:
        raise NegativeRank(f"rank r={spec.r} must be >= 0")
    if spec.alpha < 1:
        raise NonPositiveDemand(f"demand alpha={spec.alpha} must be >= 1")
    if spec.beta < 1:
        raise NonPositiveBudget(f"budget beta={spec.beta} must be >= 1")
    gamma = spec.shelves.gamma
    spec.shelves.prefix(gamma if gamma is not None else 1)
    return spec


def compute_L(spec: ProblemSpec) -> int:
    """Index of the shelf where demand-driven collection stops.

    Returns the least prefix length whose cumulative inventory reaches the
    demand.  A finite family whose total inventory falls short returns its
    length instead.  An infinite family that fails to accumulate the demand
    within its hard cap raises :class:`ShelfCapExceeded`.
    """
    total = 0
    s = 0
    gamma = spec.shelves.gamma
    while gamma is None or s < gamma:
        s += 1
        total += spec.shelves.shelf(s).n
        if total >= spec.alpha:
            return s
    return gamma


def compute_n_star(spec: ProblemSpec, L: int) -> tuple[int, ...]:
    """Per-shelf purchase counts when the budget is ignored.

    Full inventory is taken below shelf ``L``; shelf ``L`` supplies only the
    remaining demand (or everything it has, if total inventory falls short).
    """
    shelves = spec.shelves.prefix(L)
    taken = [shelf.n for shelf in shelves[:-1]]
    remaining = spec.alpha - sum(taken)
    taken.append(min(shelves[-1].n, remaining))
    return tuple(taken)


def compute_K(spec: ProblemSpec, n_star: tuple[int, ...]) -> int:
    """Largest prefix of shelves whose ``n_s*`` items are all affordable."""
    shelves = spec.shelves.prefix(len(n_star))
    cost = 0
    K = 0
    for k, (shelf, taken) in enumerate(zip(shelves, n_star), start=1):
        cost += shelf.m * taken
        if cost > spec.beta:
            break
        K = k
    return K


def compute_bound(spec: ProblemSpec) -> BoundResult:
    """Evaluate the counting rule: bound, multiplicity, and the case taken."""
    validate_spec(spec)
    L = compute_L(spec)
    n_star = compute_n_star(spec, L)
    K = compute_K(spec, n_star)
    shelves = spec.shelves.prefix(L)
    prices = [shelf.m for shelf in shelves]

    if K == 0:
        case = CaseTag.BUDGET_EXHAUSTED_ON_FIRST_SHELF
        excess = Fraction(spec.beta, 2 * prices[0])
    elif K < L:
        case = CaseTag.MIDDLE
        next_price = prices[K]
        numerator = spec.beta + sum(
            (next_price - prices[s]) * n_star[s] for s in range(K)
        )
        excess = Fraction(numerator, 2 * next_price)
    else:
        case = CaseTag.ALL_DEMAND_MET
        excess = Fraction(sum(n_star), 2)

    cost = 0
    multiplicity = 1
    for price, taken in zip(prices, n_star):
        cost += price * taken
        if cost == spec.beta:
            multiplicity = 2
            break

    return BoundResult(
        lambda_bound=Fraction(spec.r, 2) + excess,
        multiplicity=multiplicity,
        L=L,
        K=K,
        n_star=n_star,
        case=case,
    )


def insert_empty_shelf(spec: ProblemSpec, position: int) -> ProblemSpec:
    """Insert a zero-inventory shelf at ``position`` (0 = front, gamma = end).

    The inserted shelf gets the smallest integer price that keeps the price
    chain strictly increasing; if no integer fits in the gap the insertion is
    rejected.  Empty shelves never change the resulting bound, which makes
    this the natural probe for that invariance.
    """
    if not spec.shelves.is_finite:
        raise ValidationError("empty-shelf insertion requires a finite shelf list")
    gamma = spec.shelves.gamma
    assert gamma is not None
    if not 0 <= position <= gamma:
        raise IndexError(f"position must lie in [0, {gamma}]")
    shelves = spec.shelves.prefix(gamma)

    if position == 0:
        if shelves[0].m <= 1:
            raise NoIntegerPriceInGap("no integer price below the first shelf")
        price = 1
    elif position == gamma:
        price = shelves[-1].m + 1
    else:
        price = shelves[position - 1].m + 1
        if price >= shelves[position].m:
            raise NoIntegerPriceInGap(
                f"no integer price strictly between {shelves[position - 1].m} "
                f"and {shelves[position].m}"
            )

    extended = shelves[:position] + [Shelf(price, 0)] + shelves[position:]
    return ProblemSpec(spec.r, spec.alpha, spec.beta, ShelfSequence.finite(extended))
