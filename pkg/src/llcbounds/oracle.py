"""Independent brute-force verifier of the counting rule.

The counting rule's second term is the value of a tiny linear program:
maximize the total purchase ``sum x_s`` subject to one budget constraint
``sum m_s x_s <= beta`` and box constraints ``0 <= x_s <= n_s*``.  With a
single non-box constraint, some optimal vertex has at most one fractional
coordinate, so enumerating, for every shelf ``t`` and every 0-or-cap
assignment of the remaining shelves, the largest feasible ``x_t`` covers all
vertices.  That enumeration is exponential in the number of shelves by
design: it shares no reasoning with the closed-form case analysis it checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence, Union

from . import counting
from .errors import InstanceTooLarge, NonIncreasingPrices, ValidationError

DEFAULT_ENUMERATION_LIMIT = 16

Number = Union[int, Fraction]


@dataclass(frozen=True)
class AllocationInstance:
    """Budgeted fractional allocation: prices, per-shelf caps, budget."""

    prices: tuple[int, ...]
    caps: tuple[Fraction, ...]
    budget: int

    def __post_init__(self):
        if len(self.prices) != len(self.caps):
            raise ValidationError("prices and caps must have equal length")
        if not self.prices:
            raise ValidationError("instance needs at least one shelf")
        previous = 0
        for price in self.prices:
            if price <= previous:
                raise NonIncreasingPrices(
                    f"prices must be strictly increasing positive integers, got {self.prices}"
                )
            previous = price
        if any(cap < 0 for cap in self.caps):
            raise ValidationError("caps must be non-negative")


def make_instance(
    prices: Sequence[int], caps: Sequence[Number], budget: int
) -> AllocationInstance:
    return AllocationInstance(
        prices=tuple(prices),
        caps=tuple(Fraction(cap) for cap in caps),
        budget=budget,
    )


def oracle_max_purchase(
    inst: AllocationInstance, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Fraction:
    """Exact optimum of the allocation LP by vertex enumeration.

    Exponential in the shelf count; refuses instances above ``limit``.
    """
    size = len(inst.prices)
    if size > limit:
        raise InstanceTooLarge(f"{size} shelves exceed the enumeration limit {limit}")

    best = Fraction(0)  # x = 0 is always feasible
    if sum(p * c for p, c in zip(inst.prices, inst.caps)) <= inst.budget:
        best = max(best, sum(inst.caps, Fraction(0)))

    others = list(range(size))
    for t in range(size):
        rest = others[:t] + others[t + 1 :]
        for assignment in product((False, True), repeat=size - 1):
            spent = Fraction(0)
            bought = Fraction(0)
            for index, at_cap in zip(rest, assignment):
                if at_cap:
                    spent += inst.prices[index] * inst.caps[index]
                    bought += inst.caps[index]
            if spent > inst.budget:
                continue
            x_t = min(inst.caps[t], Fraction(inst.budget - spent, inst.prices[t]))
            best = max(best, bought + x_t)
    return best


def _instance_for(spec: counting.ProblemSpec) -> AllocationInstance:
    # L and n* are shared ground truth from the counting module; only the
    # case analysis over K is independently re-derived here.
    counting.validate_spec(spec)
    L = counting.compute_L(spec)
    n_star = counting.compute_n_star(spec, L)
    prices = [shelf.m for shelf in spec.shelves.prefix(L)]
    return make_instance(prices, n_star, spec.beta)


def oracle_bound(spec: counting.ProblemSpec) -> Fraction:
    """Bound recomputed as ``r/2`` plus half the LP optimum."""
    inst = _instance_for(spec)
    return Fraction(spec.r, 2) + oracle_max_purchase(inst) / 2


def oracle_multiplicity(spec: counting.ProblemSpec) -> int:
    """2 when the budget exactly buys out some shelf prefix, else 1."""
    inst = _instance_for(spec)
    cost = 0
    for price, cap in zip(inst.prices, inst.caps):
        cost += price * cap
        if cost == inst.budget:
            return 2
    return 1
