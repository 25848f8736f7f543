"""Blow-up ledger: per-depth candidate values of the resolution walk.

The closed-form bound arises as the minimum over a sequence of candidate
ratios, one per blow-up depth plus one terminal chart.  This module replays
only that arithmetic skeleton.  At depth ``j`` (for ``j = 1 .. m_L``) the
chart contributes::

    candidate(j) = (j*r + beta + sum_{s <= L, m_s <= j} (j - m_s) n_s*) / (2j)

and the terminal chart contributes ``(r + sum_{s<=L} n_s*) / 2``.  The
minimum over these m_L + 1 values must equal the dispatched closed form
exactly; the count of candidates attaining the minimum is reported as an
advisory multiplicity (it is not contractually equal to the rule's
multiplicity, and tests treat disagreements as diagnostics).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from . import counting


@dataclass(frozen=True)
class ChartCandidate:
    """One candidate ratio: blow-up depth (``None`` = terminal), value, stage.

    The stage annotation names the phase of the walk that produces the
    candidate: ``Step1`` for depths up to the first shelf price,
    ``Step3-k`` for depths in ``(m_k, m_{k+1}]``, and ``Step4`` for the
    terminal chart.
    """

    depth: Optional[int]
    value: Fraction
    stage: str

    @property
    def is_terminal(self) -> bool:
        return self.depth is None


class LedgerMin(NamedTuple):
    value: Fraction
    advisory_multiplicity: int


def chart_candidates(spec: counting.ProblemSpec) -> list[ChartCandidate]:
    """All per-depth candidates for ``spec``, depths ``1..m_L`` plus terminal."""
    counting.validate_spec(spec)
    L = counting.compute_L(spec)
    n_star = counting.compute_n_star(spec, L)
    prices = [shelf.m for shelf in spec.shelves.prefix(L)]

    candidates = []
    for depth in range(1, prices[-1] + 1):
        numerator = depth * spec.r + spec.beta
        for price, taken in zip(prices, n_star):
            if price <= depth:
                numerator += (depth - price) * taken
        if depth <= prices[0]:
            stage = "Step1"
        else:
            k = max(s + 1 for s in range(L) if prices[s] < depth)
            stage = f"Step3-{k}"
        candidates.append(
            ChartCandidate(depth=depth, value=Fraction(numerator, 2 * depth), stage=stage)
        )

    terminal = Fraction(spec.r + sum(n_star), 2)
    candidates.append(ChartCandidate(depth=None, value=terminal, stage="Step4"))
    return candidates


def ledger_min(spec: counting.ProblemSpec) -> LedgerMin:
    """Minimum candidate value and how many candidates attain it."""
    candidates = chart_candidates(spec)
    minimum = min(candidate.value for candidate in candidates)
    attained = sum(1 for candidate in candidates if candidate.value == minimum)
    return LedgerMin(value=minimum, advisory_multiplicity=attained)
