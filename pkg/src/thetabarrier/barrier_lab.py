"""θ-barrier sets, θ-extreme sets and the generalized Berge deficiency."""

from __future__ import annotations

from dataclasses import dataclass

from .exact_poly import ThetaSpec
from .graph_core import bits, check_mask, popcount
from .matching_engine import MatchingTable
from .theta_analysis import InvariantViolation, view

ZERO = ThetaSpec.rational(0)
ENUMERATION_LIMIT = 22


class TooLargeError(ValueError):
    """Exhaustive subset enumeration refused without an explicit override."""


def _guard(table: MatchingTable, force: bool) -> None:
    if table.graph.n > ENUMERATION_LIMIT and not force:
        raise TooLargeError(
            f"n={table.graph.n} exceeds {ENUMERATION_LIMIT}; pass force=True to enumerate 2^n subsets anyway"
        )


def _by_size(masks):
    return sorted(masks, key=lambda m: (popcount(m), m))


def submasks(mask: int):
    """All submasks of ``mask``, including ``0`` and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class DeficiencyResult:
    value: int
    witness: int


@dataclass(frozen=True)
class BarrierReport:
    X: int
    c_theta: int
    c_odd: int
    size: int
    is_theta_barrier: bool
    is_theta_extreme: bool
    is_classical_barrier: bool
    is_zero_barrier: bool
    is_maximal_theta_barrier: bool | None = None


@dataclass(frozen=True)
class IntersectionResult:
    mask: int
    n_theta_empty: bool
    equals_special: bool


def theta_deficiency(table: MatchingTable, theta: ThetaSpec, force: bool = False) -> DeficiencyResult:
    """``max over X of c_θ(G - X) - |X|`` by branch and bound.

    Subsets are visited as a combination tree (children add a larger vertex
    index).  A subtree rooted at ``X`` is bounded componentwise: a component of
    ``G - X`` with no undecided vertex contributes exactly its criticality,
    any other component ``K`` at most ``max(1, |K| - 2)``, since deleting
    ``Y`` from ``K`` leaves at most ``|K| - |Y|`` pieces at a cost of ``|Y|``.
    Ties go to the numerically least mask.  The result is cross-checked
    against ``mult(θ, G)``.
    """
    _guard(table, force)
    V = view(table, theta)
    full = table.full
    n = table.graph.n
    best = [V.c_theta(full), 0]

    def bound(X: int, start: int) -> int:
        undecided = full & ~((1 << start) - 1)
        total = 0
        for K in table.components(full & ~X):
            if K & undecided:
                total += max(1, popcount(K) - 2)
            elif V.is_critical(K):
                total += 1
        return total - popcount(X)

    def visit(X: int, start: int) -> None:
        for j in range(start, n):
            Y = X | (1 << j)
            value = V.c_theta(full & ~Y) - popcount(Y)
            if value > best[0] or (value == best[0] and Y < best[1]):
                best[0], best[1] = value, Y
            if j + 1 < n:
                b = bound(Y, j + 1)
                if b > best[0] or (b == best[0] and Y < best[1]):
                    visit(Y, j + 1)

    visit(0, 0)
    value, witness = best
    m = V.mult(full)
    if value != m:
        raise InvariantViolation(
            f"deficiency {value} (witness {sorted(bits(witness))}) != mult({theta}, G) = {m} for {table.graph}"
        )
    return DeficiencyResult(value, witness)


def is_theta_barrier(table: MatchingTable, theta: ThetaSpec, X: int) -> bool:
    check_mask(table.graph, X)
    V = view(table, theta)
    return V.c_theta(table.full & ~X) - popcount(X) == V.mult()


def is_theta_extreme(table: MatchingTable, theta: ThetaSpec, X: int) -> bool:
    check_mask(table.graph, X)
    V = view(table, theta)
    return V.mult(table.full & ~X) == V.mult() + popcount(X)


def c_odd(table: MatchingTable, S: int) -> int:
    return sum(popcount(c) & 1 for c in table.components(S))


def is_classical_barrier(table: MatchingTable, X: int) -> bool:
    check_mask(table.graph, X)
    mult0 = view(table, ZERO).mult()
    return c_odd(table, table.full & ~X) - popcount(X) == mult0


def is_zero_barrier(table: MatchingTable, X: int) -> bool:
    return is_theta_barrier(table, ZERO, X)


def barrier_report(table: MatchingTable, theta: ThetaSpec, X: int, maximal: bool | None = None) -> BarrierReport:
    rest = table.full & ~X
    return BarrierReport(
        X=X,
        c_theta=view(table, theta).c_theta(rest),
        c_odd=c_odd(table, rest),
        size=popcount(X),
        is_theta_barrier=is_theta_barrier(table, theta, X),
        is_theta_extreme=is_theta_extreme(table, theta, X),
        is_classical_barrier=is_classical_barrier(table, X),
        is_zero_barrier=is_zero_barrier(table, X),
        is_maximal_theta_barrier=maximal,
    )


def maximal_members(family: list[int]) -> list[int]:
    """Inclusion-maximal members, in (size, mask) order."""
    ordered = _by_size(family)
    return [X for i, X in enumerate(ordered) if not any(Y != X and Y & X == X for Y in ordered[i + 1:])]


def barrier_masks(table: MatchingTable, theta: ThetaSpec, mode: str = "pruned", force: bool = False) -> list[int]:
    """Masks of all θ-barrier sets, in (size, mask) order.

    ``mode="safe"`` tests every subset of V(G); ``"pruned"`` only subsets of
    the positive vertices ``A ∪ P``, which is where every barrier lives.
    """
    _guard(table, force)
    V = view(table, theta)
    full = table.full
    target = V.mult()
    if mode == "safe":
        space = range(full + 1)
    elif mode == "pruned":
        space = submasks(V.decompose().Q)
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")
    return _by_size(X for X in space if V.c_theta(full & ~X) - popcount(X) == target)


def enumerate_barrier_sets(
    table: MatchingTable, theta: ThetaSpec, mode: str = "pruned", force: bool = False
) -> list[BarrierReport]:
    family = barrier_masks(table, theta, mode, force)
    top = set(maximal_members(family))
    return [barrier_report(table, theta, X, X in top) for X in family]


def enumerate_extreme_sets(table: MatchingTable, theta: ThetaSpec, force: bool = False) -> list[int]:
    _guard(table, force)
    V = view(table, theta)
    full = table.full
    target = V.mult()
    family = [X for X in range(full + 1) if V.mult(full & ~X) == target + popcount(X)]
    members = set(family)
    for X in family:
        for u in bits(X):
            if X & ~(1 << u) not in members:
                raise InvariantViolation(f"extreme family not downward closed at {sorted(bits(X))}")
    return _by_size(family)


def maximal_barrier_sets(table: MatchingTable, theta: ThetaSpec, mode: str = "pruned", force: bool = False) -> list[int]:
    return maximal_members(barrier_masks(table, theta, mode, force))


def extend_extreme_to_barrier(table: MatchingTable, theta: ThetaSpec, X: int) -> int:
    """Grow a θ-extreme ``X`` into the θ-barrier ``X ∪ A_θ(G - X)``."""
    if not is_theta_extreme(table, theta, X):
        raise ValueError(f"{sorted(bits(X))} is not {theta}-extreme")
    T = X | view(table, theta).decompose(table.full & ~X).A
    if not is_theta_barrier(table, theta, T):
        raise InvariantViolation(f"completion {sorted(bits(T))} of extreme set {sorted(bits(X))} is not a barrier")
    return T


def intersect_maximal_barriers(table: MatchingTable, theta: ThetaSpec, force: bool = False) -> IntersectionResult:
    maximal = maximal_barrier_sets(table, theta, force=force)
    inter = table.full
    for X in maximal:
        inter &= X
    dec = view(table, theta).decompose()
    result = IntersectionResult(inter, dec.N == 0, inter == dec.A)
    if result.n_theta_empty and not result.equals_special:
        raise InvariantViolation(
            f"N empty but intersection of maximal barriers {sorted(bits(inter))} != A = {sorted(bits(dec.A))}"
        )
    return result


def classical_barrier_masks(table: MatchingTable, force: bool = False) -> list[int]:
    _guard(table, force)
    full = table.full
    target = view(table, ZERO).mult()
    return _by_size(X for X in range(full + 1) if c_odd(table, full & ~X) - popcount(X) == target)


def berge_deficiency(table: MatchingTable, force: bool = False) -> DeficiencyResult:
    """Classical ``max over X of c_odd(G - X) - |X|``, exhaustive, least mask on ties."""
    _guard(table, force)
    full = table.full
    best = (c_odd(table, full), 0)
    for X in range(1, full + 1):
        value = c_odd(table, full & ~X) - popcount(X)
        if value > best[0]:
            best = (value, X)
    return DeficiencyResult(*best)
