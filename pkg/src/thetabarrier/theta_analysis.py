"""Root multiplicities of induced subgraphs and the D/A/N/P vertex partition."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .exact_poly import IntPoly, ThetaSpec, root_multiplicity
from .graph_core import bits, check_mask, popcount
from .matching_engine import Counts, MatchingTable, counts_to_poly


class InvariantViolation(RuntimeError):
    """A proven identity failed to hold: always an implementation bug."""


class Kind(enum.Enum):
    ESSENTIAL = "essential"
    NEUTRAL = "neutral"
    POSITIVE = "positive"


@dataclass(frozen=True)
class VertexClass:
    kind: Kind
    special: bool = False

    def __str__(self) -> str:
        return self.kind.value + (" (special)" if self.special else "")


@dataclass(frozen=True)
class Decomposition:
    """``D`` essential, ``A`` special, ``N`` neutral, ``P`` positive non-special."""

    mult: int
    D: int
    A: int
    N: int
    P: int

    @property
    def Q(self) -> int:
        return self.A | self.P

    @property
    def vertices(self) -> int:
        return self.D | self.A | self.N | self.P

    def vertex_class(self, v: int) -> VertexClass:
        bit = 1 << v
        if self.D & bit:
            return VertexClass(Kind.ESSENTIAL)
        if self.A & bit:
            return VertexClass(Kind.POSITIVE, special=True)
        if self.N & bit:
            return VertexClass(Kind.NEUTRAL)
        if self.P & bit:
            return VertexClass(Kind.POSITIVE)
        raise KeyError(v)


@lru_cache(maxsize=1 << 18)
def _mult_of(size: int, counts: Counts, minpoly: tuple[int, ...]) -> int:
    if minpoly == (0, 1):
        return size - 2 * (len(counts) - 1)
    return root_multiplicity(counts_to_poly(size, counts), ThetaSpec(IntPoly(minpoly)))


class ThetaView:
    """Everything θ-local about the induced subgraphs of one host graph.

    Results are memoised per mask.  Obtain instances through `view` so that
    one table shares a single view per θ.
    """

    def __init__(self, table: MatchingTable, theta: ThetaSpec):
        self.table = table
        self.theta = theta
        self.graph = table.graph
        self.full = table.full
        key = theta.minpoly.coeffs
        if table.policy == "precompute":
            memo = table._memo
            self._mult: list[int] | dict[int, int] = [
                _mult_of(popcount(S), memo[S], key) for S in range(len(memo))
            ]
        else:
            self._mult = {}
        self._key = key
        self._critical: dict[int, bool] = {}
        self._ctheta: dict[int, int] = {}
        self._decomp: dict[int, Decomposition] = {}

    def mult(self, S: int | None = None) -> int:
        if S is None:
            S = self.full
        m = self._mult
        if isinstance(m, list):
            return m[S]
        hit = m.get(S)
        if hit is None:
            hit = m[S] = _mult_of(popcount(S), self.table.counts(S), self._key)
        return hit

    def change(self, S: int, u: int) -> int:
        """``mult(S - u) - mult(S)``, which must lie in ``{-1, 0, 1}``."""
        d = self.mult(S & ~(1 << u)) - self.mult(S)
        if d < -1 or d > 1:
            raise InvariantViolation(
                f"deleting vertex {u} from {S:#b} changed mult({self.theta}) by {d}"
            )
        return d

    def decompose(self, S: int | None = None) -> Decomposition:
        if S is None:
            S = self.full
        hit = self._decomp.get(S)
        if hit is not None:
            return hit
        m = self.mult(S)
        D = N = Q = 0
        for u in bits(S):
            d = self.change(S, u)
            if d < 0:
                D |= 1 << u
            elif d == 0:
                N |= 1 << u
            else:
                Q |= 1 << u
        A = 0
        if D:
            adj = self.graph.adj
            for u in bits(N | Q):
                if adj[u] & D:
                    A |= 1 << u
            if A & N:
                raise InvariantViolation(
                    f"special vertices {A & N:#b} are neutral for {self.theta} in {S:#b}"
                )
        hit = Decomposition(m, D, A, N, Q & ~A)
        self._decomp[S] = hit
        return hit

    def vertex_class(self, S: int, u: int) -> VertexClass:
        if not S >> u & 1:
            raise ValueError(f"vertex {u} is not in the live set")
        return self.decompose(S).vertex_class(u)

    def is_critical(self, S: int | None = None) -> bool:
        if S is None:
            S = self.full
        hit = self._critical.get(S)
        if hit is None:
            if not S:
                raise ValueError("criticality of the empty graph is undefined")
            hit = self.mult(S) == 1 and all(self.mult(S & ~(1 << u)) == 0 for u in bits(S))
            self._critical[S] = hit
        return hit

    def c_theta(self, S: int | None = None) -> int:
        """Number of θ-critical components of ``G[S]``."""
        if S is None:
            S = self.full
        hit = self._ctheta.get(S)
        if hit is None:
            hit = sum(1 for c in self.table.components(S) if self.is_critical(c))
            self._ctheta[S] = hit
        return hit


def view(table: MatchingTable, theta: ThetaSpec) -> ThetaView:
    v = table._views.get(theta)
    if v is None:
        v = table._views[theta] = ThetaView(table, theta)
    return v


def _live(table: MatchingTable, S: int | None) -> int:
    if S is None:
        return table.full
    check_mask(table.graph, S)
    return S


def multiplicity(table: MatchingTable, theta: ThetaSpec, S: int | None = None) -> int:
    return view(table, theta).mult(_live(table, S))


def classify_vertex(table: MatchingTable, theta: ThetaSpec, S: int | None, u: int) -> VertexClass:
    return view(table, theta).vertex_class(_live(table, S), u)


def decompose(table: MatchingTable, theta: ThetaSpec, S: int | None = None) -> Decomposition:
    return view(table, theta).decompose(_live(table, S))


def is_theta_critical(table: MatchingTable, theta: ThetaSpec, S: int | None = None) -> bool:
    """``mult = 1`` and every vertex essential; ``S`` need not be connected."""
    return view(table, theta).is_critical(_live(table, S))


def critical_component_count(table: MatchingTable, theta: ThetaSpec, X: int = 0) -> int:
    """``c_θ(G - X)``."""
    check_mask(table.graph, X)
    return view(table, theta).c_theta(table.full & ~X)
