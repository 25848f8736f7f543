"""Three-layer network specializations of the counting rule.

A network with ``N`` input, ``H`` hidden, and ``M`` output units, realizing a
true distribution that needs only ``H*`` hidden units, has two canonical
singular realization parameters:

* ``P1`` -- the redundant hidden units get zero input weights; the shelf
  prices are the derivative orders at which the activation's Taylor
  expansion is non-vanishing, and shelf ``s`` holds
  ``M * C(m_s + N - 1, m_s)`` items.
* ``P2`` -- the redundant units duplicate the input weights of a true unit;
  prices are ``1, 2, 3, ...`` regardless of activation, with the first shelf
  thinned to ``N (M - 1)`` items.

Both specialize the generic tuple to ``(r, alpha, beta) =
((M+N) H*, M (H - H*), N (H - H*))``.  Each bound is evaluated twice: a
closed form written directly in binomial partial sums, and the generic
counting pipeline on the constructed shelves.  Any disagreement raises
:class:`InternalInconsistency`.

The linear-independence preconditions behind both constructions cannot be
decided from finite inputs; results carry a note recording the assumption,
and :func:`check_weight_admissibility` implements the checkable sufficient
condition on the true hidden-layer weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from . import counting
from .counting import BoundResult, ProblemSpec, ShelfSequence
from .errors import (
    DuplicateMonomials,
    InternalInconsistency,
    InvalidNetworkShape,
    NotFoundWithin,
    P2RequiresTrueUnits,
    PolynomialWithHiddenUnits,
    RankTooLarge,
    ValidationError,
)

INDEPENDENCE_NOTE = (
    "assumes the activation-derivative random variables of the construction "
    "are linearly independent; check_weight_admissibility gives a checkable "
    "sufficient condition on the true weights"
)


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 when ``k > n``."""
    if n < 0 or k < 0:
        raise ValidationError("binom arguments must be non-negative")
    return math.comb(n, k)


@dataclass(frozen=True)
class NetworkShape:
    """Layer sizes ``(N, H, M)`` plus the true hidden-unit count ``H*``."""

    N: int
    H: int
    M: int
    H_star: int

    def __post_init__(self):
        if self.N < 1 or self.H < 1 or self.M < 1:
            raise InvalidNetworkShape(
                f"layer sizes must be >= 1, got N={self.N} H={self.H} M={self.M}"
            )
        if not 0 <= self.H_star < self.H:
            raise InvalidNetworkShape(
                f"need 0 <= H* < H, got H*={self.H_star}, H={self.H}"
            )

    @property
    def hidden_excess(self) -> int:
        """Redundant hidden units ``H - H*``."""
        return self.H - self.H_star


@dataclass(frozen=True)
class ActivationSupport:
    """The increasing sequence of derivative orders non-vanishing at 0.

    The named families cover the analytic activations in common use:
    ``exp`` for supports ``1,2,3,...`` (e.g. e^x - 1), ``swish`` for
    ``1,2,4,6,...`` (e.g. x * sigmoid(x)), and ``odd`` for ``1,3,5,...``
    (e.g. tanh).  ``poly`` is a finite support (a polynomial activation);
    ``custom`` wraps any strictly increasing positive-integer generator.
    """

    kind: str
    exponents: Optional[tuple[int, ...]] = None
    generator: Optional[Callable[[int], int]] = field(default=None, compare=False)

    @classmethod
    def exp_family(cls) -> "ActivationSupport":
        return cls(kind="exp")

    @classmethod
    def swish_family(cls) -> "ActivationSupport":
        return cls(kind="swish")

    @classmethod
    def odd_family(cls) -> "ActivationSupport":
        return cls(kind="odd")

    @classmethod
    def polynomial(cls, exponents: Sequence[int]) -> "ActivationSupport":
        exps = tuple(exponents)
        if not exps or any(e < 1 for e in exps) or list(exps) != sorted(set(exps)):
            raise ValidationError(
                f"polynomial exponents must be strictly increasing positive "
                f"integers, got {exponents!r}"
            )
        return cls(kind="poly", exponents=exps)

    @classmethod
    def custom(cls, generator: Callable[[int], int]) -> "ActivationSupport":
        return cls(kind="custom", generator=generator)

    @property
    def is_polynomial(self) -> bool:
        return self.kind == "poly"

    @property
    def gamma(self) -> Optional[int]:
        return len(self.exponents) if self.kind == "poly" else None

    def order(self, s: int) -> int:
        """The ``s``-th non-vanishing derivative order (1-based)."""
        if s < 1:
            raise IndexError("orders are 1-indexed")
        if self.kind == "exp":
            return s
        if self.kind == "swish":
            return 1 if s == 1 else 2 * (s - 1)
        if self.kind == "odd":
            return 2 * s - 1
        if self.kind == "poly":
            assert self.exponents is not None
            if s > len(self.exponents):
                raise IndexError(f"polynomial support has only {len(self.exponents)} orders")
            return self.exponents[s - 1]
        assert self.generator is not None
        return self.generator(s)


NAMED_FAMILIES = {
    "exp": ActivationSupport.exp_family,
    "swish": ActivationSupport.swish_family,
    "odd": ActivationSupport.odd_family,
    # CLI spelling for the odd family's best-known member
    "tanh": ActivationSupport.odd_family,
}


def _base_tuple(shape: NetworkShape) -> tuple[int, int, int]:
    h = shape.hidden_excess
    return (shape.M + shape.N) * shape.H_star, shape.M * h, shape.N * h


def shelves_P1(shape: NetworkShape, support: ActivationSupport) -> ProblemSpec:
    """Problem tuple at the zero-weight singular point.

    Shelf ``s`` sits at price ``m_s`` (the ``s``-th non-vanishing derivative
    order) and holds ``M * C(m_s + N - 1, m_s)`` items, one per monomial of
    degree ``m_s`` in ``N`` variables per output unit.  Polynomial supports
    require ``H* = 0`` and give a finite shelf list.
    """
    if support.is_polynomial and shape.H_star > 0:
        raise PolynomialWithHiddenUnits(
            f"polynomial activations are handled only for H*=0, got H*={shape.H_star}"
        )
    r, alpha, beta = _base_tuple(shape)
    M, N = shape.M, shape.N

    def inventory(price: int) -> int:
        return M * binom(price + N - 1, price)

    if support.is_polynomial:
        assert support.exponents is not None
        shelves = ShelfSequence.finite(
            (price, inventory(price)) for price in support.exponents
        )
    else:
        shelves = ShelfSequence.infinite(
            lambda s: (support.order(s), inventory(support.order(s)))
        )
    return ProblemSpec(r=r, alpha=alpha, beta=beta, shelves=shelves)


def shelves_P2(shape: NetworkShape) -> ProblemSpec:
    """Problem tuple at the duplicated-weight singular point (``H* >= 1``).

    Prices are ``1, 2, 3, ...`` independently of the activation; the first
    shelf holds ``N (M - 1)`` items (zero when ``M = 1``) and shelf ``s >= 2``
    holds ``M * C(s + N - 1, s)``.
    """
    if shape.H_star < 1:
        raise P2RequiresTrueUnits("the duplicated-weight point needs H* >= 1")
    r, alpha, beta = _base_tuple(shape)
    M, N = shape.M, shape.N

    def shelf(s: int) -> tuple[int, int]:
        if s == 1:
            return 1, N * (M - 1)
        return s, M * binom(s + N - 1, s)

    return ProblemSpec(r=r, alpha=alpha, beta=beta, shelves=ShelfSequence.infinite(shelf))


@dataclass(frozen=True)
class NetworkBound:
    """A network bound with its constructed tuple and assumption note."""

    point: str
    result: BoundResult
    problem: ProblemSpec
    assumption_note: str = INDEPENDENCE_NOTE

    @property
    def lambda_bound(self) -> Fraction:
        return self.result.lambda_bound


def _closed_form_P1(shape: NetworkShape, support: ActivationSupport) -> tuple[Fraction, int, int]:
    """Direct binomial-sum evaluation of the P1 bound; returns (value, L, K)."""
    h = shape.hidden_excess
    M, N = shape.M, shape.N
    r, _, beta = _base_tuple(shape)

    # Cumulative inventory and cost per price group, divided through by M:
    # demand M*h is covered once the plain binomial sum reaches h.
    prices: list[int] = []
    inv: list[int] = []  # binom(m_s + N - 1, m_s)
    cum_inv = 0
    gamma = support.gamma
    s = 0
    while cum_inv < h and (gamma is None or s < gamma):
        s += 1
        price = support.order(s)
        prices.append(price)
        inv.append(binom(price + N - 1, price))
        cum_inv += inv[-1]
    L = s
    demand_short = cum_inv < h  # finite support exhausted below demand

    # Purchasable count on the last shelf is capped by the remaining demand;
    # the affordability test for k = L must use the capped count.
    cum_before_L = cum_inv - inv[-1]
    last_take = inv[-1] if demand_short else h - cum_before_L

    K = 0
    cost = 0
    for k in range(1, L + 1):
        take = inv[k - 1] if k < L else last_take
        cost += M * prices[k - 1] * take
        if cost > beta:
            break
        K = k

    if K == 0:
        excess = Fraction(N * h, 2 * prices[0])
    elif K < L:
        next_price = prices[K]
        numerator = N * h + M * sum(
            inv[s] * (next_price - prices[s]) for s in range(K)
        )
        excess = Fraction(numerator, 2 * next_price)
    else:
        total_taken = M * (cum_inv if demand_short else h)
        excess = Fraction(total_taken, 2)
    return Fraction(r, 2) + excess, L, K


def _closed_form_P2(shape: NetworkShape) -> tuple[Fraction, int, int]:
    """Binomial-identity evaluation of the P2 bound; returns (value, L, K).

    Uses the hockey-stick identities
    ``sum_{s<=l} C(s+N-1, s) = C(N+l, l) - 1`` and
    ``sum_{s<=k} s C(s+N-1, s) = N C(N+k, N+1)`` so that no shelf list is
    ever scanned.
    """
    h = shape.hidden_excess
    M, N = shape.M, shape.N
    r, alpha, beta = _base_tuple(shape)

    L = 1
    while M * binom(N + L, L) < M * (h + 1) + N:
        L += 1

    def cum_inventory(l: int) -> int:
        return 0 if l == 0 else M * (binom(N + l, l) - 1) - N

    def cum_cost(k: int) -> int:
        return 0 if k == 0 else M * N * binom(N + k, N + 1) - N

    last_take = alpha - cum_inventory(L - 1)
    K = 0
    for k in range(1, L + 1):
        cost = cum_cost(k) if k < L else cum_cost(L - 1) + L * last_take
        if cost > beta:
            break
        K = k

    if K == 0:
        excess = Fraction(N * h, 2)
    elif K < L:
        numerator = N * (h - K) + M * (binom(N + K + 1, K) - (K + 1))
        excess = Fraction(numerator, 2 * (K + 1))
    else:
        excess = Fraction(M * h, 2)
    return Fraction(r, 2) + excess, L, K


def _cross_checked(
    point: str,
    problem: ProblemSpec,
    closed: tuple[Fraction, int, int],
) -> NetworkBound:
    result = counting.compute_bound(problem)
    value, L, K = closed
    if (value, L, K) != (result.lambda_bound, result.L, result.K):
        raise InternalInconsistency(
            f"{point}: closed form gave (lambda={value}, L={L}, K={K}) but the "
            f"generic pipeline gave (lambda={result.lambda_bound}, "
            f"L={result.L}, K={result.K})"
        )
    return NetworkBound(point=point, result=result, problem=problem)


def bound_P1(shape: NetworkShape, support: ActivationSupport) -> NetworkBound:
    """Bound at the zero-weight point, closed form cross-checked."""
    return _cross_checked("P1", shelves_P1(shape, support), _closed_form_P1(shape, support))


def bound_P2(shape: NetworkShape) -> NetworkBound:
    """Bound at the duplicated-weight point, closed form cross-checked."""
    return _cross_checked("P2", shelves_P2(shape), _closed_form_P2(shape))


# -- reduced-rank regression (linear activation) ------------------------------

REDUCED_RANK_CASES = ("Case2", "Case3", "Case4")


def case_of_reduced_rank(M: int, N: int, H: int, R: int) -> str:
    """Which of the three closed-form cases applies; exactly one always does."""
    if M < 1 or N < 1 or H < 1 or R < 0:
        raise ValidationError("need M, N, H >= 1 and R >= 0")
    if R >= min(M, N, H):
        raise RankTooLarge(f"need R < min(M, N, H), got R={R}")
    if N < H < M or H <= N < M:
        return "Case2"
    if N >= M and N >= H:
        return "Case3"
    if H >= M and N < H:
        return "Case4"
    raise InternalInconsistency(f"no reduced-rank case matched (M,N,H)=({M},{N},{H})")


def bound_reduced_rank(M: int, N: int, H: int, R: int) -> Fraction:
    """Reduced-rank regression bound, cross-checked against the pipeline.

    The generic tuple is a single unit-price shelf holding
    ``(M-R)(N-R)`` items with demand ``(M-R)(H-R)``, budget ``(N-R)(H-R)``,
    and rank ``R(M+N-R)``.
    """
    case = case_of_reduced_rank(M, N, H, R)
    if case == "Case2":
        value = Fraction(H * N - H * R + M * R, 2)
    elif case == "Case3":
        value = Fraction(H * M - H * R + N * R, 2)
    else:
        value = Fraction(M * N, 2)

    problem = ProblemSpec(
        r=R * (M + N - R),
        alpha=(M - R) * (H - R),
        beta=(N - R) * (H - R),
        shelves=ShelfSequence.finite([(1, (M - R) * (N - R))]),
    )
    pipeline = counting.compute_bound(problem).lambda_bound
    if value != pipeline:
        raise InternalInconsistency(
            f"reduced rank (M,N,H,R)=({M},{N},{H},{R}): closed form {value} "
            f"!= pipeline {pipeline}"
        )
    return value


# -- comparing the two singular points ----------------------------------------


@dataclass(frozen=True)
class ComparisonRecord:
    """Both bounds at one shape, their exact difference, and the winner."""

    shape: NetworkShape
    lambda_p1: Fraction
    lambda_p2: Fraction
    winner: str  # "P1" | "P2" | "Equal"

    @property
    def difference(self) -> Fraction:
        """``lambda_P1 - lambda_P2`` (positive when P2 is smaller)."""
        return self.lambda_p1 - self.lambda_p2


def compare_P1_P2(shape: NetworkShape, support: ActivationSupport) -> ComparisonRecord:
    """Evaluate both points on one shape and report the smaller bound."""
    if support.is_polynomial:
        raise PolynomialWithHiddenUnits(
            "the duplicated-weight point is defined for non-polynomial activations"
        )
    p1 = bound_P1(shape, support).lambda_bound
    p2 = bound_P2(shape).lambda_bound
    if p1 == p2:
        winner = "Equal"
    else:
        winner = "P2" if p2 < p1 else "P1"
    return ComparisonRecord(shape=shape, lambda_p1=p1, lambda_p2=p2, winner=winner)


@dataclass(frozen=True)
class CrossoverScan:
    """Result of scanning H - H* for the point where P1 overtakes P2."""

    threshold: int  # largest H - H* with lambda_P2 <= lambda_P1
    flips: int  # sign changes of the comparison over the scanned range
    multiple_flips: bool  # diagnostic: comparison was not a single crossover


def crossover_threshold(
    M: int,
    family: ActivationSupport,
    H_star: int = 1,
    scan_max: int = 200,
) -> CrossoverScan:
    """Largest ``H - H*`` at which the duplicated-weight bound still wins.

    Fixed to one input unit; scans ``H - H* = 1..scan_max`` and returns the
    largest value where ``lambda_P2 <= lambda_P1``, checking that the
    comparison flips exactly once (``multiple_flips`` flags anything else).
    Raises :class:`NotFoundWithin` when the comparison never flips in range.
    The threshold does not depend on ``H_star``: both bounds shift by the
    same ``r/2`` and the shelves depend only on ``H - H*``.
    """
    if family.kind not in ("swish", "odd"):
        raise ValidationError(
            f"crossover scan is defined for the swish and odd families, got {family.kind!r}"
        )
    if H_star < 1:
        raise P2RequiresTrueUnits("the scan compares against P2, which needs H* >= 1")

    wins = []
    for h in range(1, scan_max + 1):
        shape = NetworkShape(N=1, H=H_star + h, M=M, H_star=H_star)
        record = compare_P1_P2(shape, family)
        wins.append(record.lambda_p2 <= record.lambda_p1)

    if wins[-1]:
        raise NotFoundWithin(scan_max)
    threshold = max((h for h, won in enumerate(wins, start=1) if won), default=0)
    flips = sum(1 for a, b in zip(wins, wins[1:]) if a != b)
    return CrossoverScan(threshold=threshold, flips=flips, multiple_flips=flips > 1)


# -- admissibility of true weights and the independence witness ---------------


@dataclass(frozen=True)
class AdmissibilityReport:
    """Outcome of the pairwise weight check with the violating indices."""

    ok: bool
    zero_rows: tuple[int, ...]  # 1-based indices of zero rows
    conflicting_pairs: tuple[tuple[int, int], ...]  # 1-based (i, j), i < j


def check_weight_admissibility(rows: Sequence[Sequence[Union[int, Fraction, str]]]) -> AdmissibilityReport:
    """Check that every weight row is nonzero and no two are equal or opposite.

    This is the checkable sufficient condition for the linear independence
    the network constructions assume.  Comparison is exact over rationals.
    """
    exact = [tuple(Fraction(entry) for entry in row) for row in rows]
    zero_rows = tuple(i for i, row in enumerate(exact, start=1) if all(x == 0 for x in row))
    pairs = []
    for i in range(len(exact)):
        for j in range(i + 1, len(exact)):
            negated = tuple(-x for x in exact[j])
            if exact[i] == exact[j] or exact[i] == negated:
                pairs.append((i + 1, j + 1))
    return AdmissibilityReport(
        ok=not zero_rows and not pairs,
        zero_rows=zero_rows,
        conflicting_pairs=tuple(pairs),
    )


@dataclass(frozen=True)
class VandermondeWitness:
    """Witness points, the evaluated monomial matrix, and its determinant."""

    points: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[int, ...], ...]
    determinant: Fraction


def _integer_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    size = len(matrix)
    work = [row[:] for row in matrix]
    sign = 1
    previous = 1
    for col in range(size - 1):
        if work[col][col] == 0:
            for pivot_row in range(col + 1, size):
                if work[pivot_row][col] != 0:
                    work[col], work[pivot_row] = work[pivot_row], work[col]
                    sign = -sign
                    break
            else:
                return 0
        for row in range(col + 1, size):
            for k in range(col + 1, size):
                work[row][k] = (
                    work[row][k] * work[col][col] - work[row][col] * work[col][k]
                ) // previous
            work[row][col] = 0
        previous = work[col][col]
    return sign * work[-1][-1]


def vandermonde_witness(monomial_exponents: Sequence[Sequence[int]]) -> VandermondeWitness:
    """Build an explicit weight matrix on which the monomials are independent.

    Given ``H`` distinct exponent tuples in ``N`` variables, evaluates each
    monomial at the points ``b_i = (i, i^Lb, i^(Lb^2), ...)`` with ``Lb`` one
    more than the maximum total degree.  Each monomial then collapses to a
    distinct pure power ``i^(E_k)`` (the exponents are digits of a base-``Lb``
    expansion), so the matrix is generalized-Vandermonde and its exact
    determinant is nonzero.
    """
    tuples = [tuple(int(e) for e in exps) for exps in monomial_exponents]
    if not tuples:
        raise ValidationError("need at least one monomial")
    width = len(tuples[0])
    if width < 1 or any(len(t) != width for t in tuples):
        raise ValidationError("exponent tuples must share a positive length")
    if any(e < 0 for t in tuples for e in t):
        raise ValidationError("exponents must be non-negative")
    if len(set(tuples)) != len(tuples):
        raise DuplicateMonomials(f"exponent tuples must be pairwise distinct: {tuples}")

    degree = max(sum(t) for t in tuples)
    base = degree + 1
    count = len(tuples)
    points = tuple(
        tuple(t_i ** (base**j) for j in range(width)) for t_i in range(1, count + 1)
    )
    matrix = [
        [
            math.prod(coordinate**exponent for coordinate, exponent in zip(point, exps))
            for exps in tuples
        ]
        for point in points
    ]
    determinant = Fraction(_integer_determinant(matrix))
    return VandermondeWitness(
        points=points,
        matrix=tuple(tuple(row) for row in matrix),
        determinant=determinant,
    )
