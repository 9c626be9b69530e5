"""Matching polynomials of a host graph and all of its induced subgraphs.

The memo stores, for each live-vertex mask ``S``, the matching counts
``(p(G[S], 0), p(G[S], 1), ..., p(G[S], nu))`` where ``nu`` is the matching
number; trailing zeros are never stored.  Together with ``|S|`` this is the
nonzero coefficient sequence of ``mu(G[S], x)``, and the polynomial itself is
rebuilt on demand.  Counts follow the vertex recurrence: for a pivot ``u``,

    p(S, r) = p(S - u, r) + sum over neighbours i of u in S of p(S - u - i, r - 1).
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from functools import lru_cache

from .exact_poly import IntPoly
from .graph_core import Graph, bits, check_mask, components, popcount

PRECOMPUTE_LIMIT = 20

Counts = tuple[int, ...]


def counts_to_poly(size: int, counts: Counts) -> IntPoly:
    coeffs = [0] * (size + 1)
    for r, c in enumerate(counts):
        coeffs[size - 2 * r] = -c if r & 1 else c
    return IntPoly(coeffs)


def _combine(base: Counts, shifted: list[Counts]) -> Counts:
    length = len(base)
    for s in shifted:
        if len(s) + 1 > length:
            length = len(s) + 1
    out = list(base)
    out.extend([0] * (length - len(base)))
    for s in shifted:
        for r, c in enumerate(s, 1):
            out[r] += c
    return tuple(out)


class MatchingTable:
    """Mask-keyed matching counts for one host graph.

    ``policy="precompute"`` fills every mask up front (sealed afterwards, so
    concurrent reads are safe); ``"lazy"`` recurses on demand, always
    expanding the live vertex of highest degree, behind a lock.
    """

    def __init__(self, graph: Graph, policy: str | None = None):
        if policy is None:
            policy = "precompute" if graph.n <= PRECOMPUTE_LIMIT else "lazy"
        if policy not in ("precompute", "lazy"):
            raise ValueError(f"unknown policy {policy!r}")
        self.graph = graph
        self.policy = policy
        self.full = graph.full_mask
        self._components: dict[int, tuple[int, ...]] = {}
        self._views: dict = {}
        if policy == "precompute":
            self._memo: list[Counts] | dict[int, Counts] = self._precompute()
            self._lock = None
        else:
            self._memo = {0: (1,)}
            self._lock = threading.RLock()

    def _precompute(self) -> list[Counts]:
        adj = self.graph.adj
        memo: list[Counts] = [(1,)] * (1 << self.graph.n)
        # masks in increasing order: every proper submask is already filled
        for S in range(1, len(memo)):
            low = S & -S
            u = low.bit_length() - 1
            rest = S ^ low
            nbrs = adj[u] & rest
            base = memo[rest]
            if not nbrs:
                memo[S] = base
                continue
            shifted = []
            while nbrs:
                b = nbrs & -nbrs
                shifted.append(memo[rest ^ b])
                nbrs ^= b
            memo[S] = _combine(base, shifted)
        return memo

    def _lazy(self, S: int) -> Counts:
        memo = self._memo
        hit = memo.get(S)
        if hit is not None:
            return hit
        adj = self.graph.adj
        u = max(bits(S), key=lambda v: popcount(adj[v] & S))
        rest = S & ~(1 << u)
        base = self._lazy(rest)
        shifted = [self._lazy(rest & ~(1 << i)) for i in bits(adj[u] & rest)]
        value = _combine(base, shifted) if shifted else base
        memo[S] = value
        return value

    def counts(self, mask: int | None = None) -> Counts:
        """``(p(G[S], 0), ..., p(G[S], nu))`` for the live mask ``S``."""
        S = self.full if mask is None else mask
        if self._lock is None:
            if S & ~self.full or S < 0:
                check_mask(self.graph, S)
            return self._memo[S]
        check_mask(self.graph, S)
        with self._lock:
            return self._lazy(S)

    def poly(self, mask: int | None = None) -> IntPoly:
        S = self.full if mask is None else mask
        return counts_to_poly(popcount(S), self.counts(S))

    def components(self, mask: int | None = None) -> tuple[int, ...]:
        S = self.full if mask is None else mask
        hit = self._components.get(S)
        if hit is None:
            hit = tuple(components(self.graph, S))
            self._components[S] = hit
        return hit

    def matching_number(self, mask: int | None = None) -> int:
        return len(self.counts(mask)) - 1


def matching_polynomial(G: Graph) -> IntPoly:
    return MatchingTable(G, policy="lazy").poly()


def matching_polynomial_induced(table: MatchingTable, S: int) -> IntPoly:
    return table.poly(S)


def count_matchings(G: Graph, r: int) -> int:
    if r < 0:
        raise ValueError("r must be nonnegative")
    c = MatchingTable(G, policy="lazy").counts()
    return c[r] if r < len(c) else 0


def brute_force_matching_counts(G: Graph) -> list[int]:
    """Matching counts by enumerating edge subsets; independent of the recurrence."""
    edges = G.edges()
    counts = [1]
    for r in range(1, G.n // 2 + 1):
        total = 0
        for combo in itertools.combinations(edges, r):
            used = set()
            for u, v in combo:
                used.add(u)
                used.add(v)
            if len(used) == 2 * r:
                total += 1
        if not total:
            break
        counts.append(total)
    return counts


def brute_force_matching_polynomial(G: Graph) -> IntPoly:
    return counts_to_poly(G.n, tuple(brute_force_matching_counts(G)))


# -- identity validation ------------------------------------------------------

@dataclass
class IdentityResult:
    name: str
    checked: int = 0
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return self.witness is None

    def fail(self, message: str) -> None:
        if self.witness is None:
            self.witness = message


@dataclass
class IdentityReport:
    results: dict[str, IdentityResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def __getitem__(self, name: str) -> IdentityResult:
        return self.results[name]


def _vset(mask: int) -> str:
    return "{" + ",".join(str(v) for v in bits(mask)) + "}"


def verify_identities(G: Graph, table: MatchingTable | None = None) -> IdentityReport:
    """Check the disjoint-union, edge, vertex and derivative identities exactly.

    Results are keyed ``"union"``, ``"edge"``, ``"vertex"`` and ``"derivative"``.
    """
    T = table if table is not None else MatchingTable(G)
    full = G.full_mask
    mu = T.poly(full)
    x = IntPoly.x()
    rep = IdentityReport()

    union = rep.results["union"] = IdentityResult("union")
    comps = T.components(full)
    product = IntPoly.const(1)
    for c in comps:
        product = product * T.poly(c)
    union.checked += 1
    if product != mu:
        union.fail(f"product over components {product} != {mu}")
    polys = [T.poly(c) for c in comps]
    for i, j in itertools.combinations(range(len(comps)), 2):
        union.checked += 1
        joined = T.poly(comps[i] | comps[j])
        if joined != polys[i] * polys[j]:
            union.fail(f"components {_vset(comps[i])} and {_vset(comps[j])}: {joined} != {polys[i] * polys[j]}")

    edge = rep.results["edge"] = IdentityResult("edge")
    for u, v in G.edges():
        edge.checked += 1
        rhs = matching_polynomial(G.remove_edge(u, v)) - T.poly(full & ~(1 << u) & ~(1 << v))
        if rhs != mu:
            edge.fail(f"edge ({u},{v}): {rhs} != {mu}")

    vertex = rep.results["vertex"] = IdentityResult("vertex")
    for u in range(G.n):
        vertex.checked += 1
        rest = full & ~(1 << u)
        rhs = x * T.poly(rest)
        for i in bits(G.adj[u]):
            rhs = rhs - T.poly(rest & ~(1 << i))
        if rhs != mu:
            vertex.fail(f"vertex {u}: {rhs} != {mu}")

    deriv = rep.results["derivative"] = IdentityResult("derivative")
    deriv.checked += 1
    total = IntPoly()
    for i in range(G.n):
        total = total + T.poly(full & ~(1 << i))
    if total != mu.derivative():
        deriv.fail(f"sum of vertex-deleted polynomials {total} != {mu.derivative()}")
    return rep


@lru_cache(maxsize=1 << 16)
def _root_bound_ok(size: int, counts: Counts) -> bool:
    if size == 0:
        return True
    mu = counts_to_poly(size, counts)
    low = mu(-size)
    return mu(size) > 0 and low != 0 and (low > 0) == (size % 2 == 0)


def root_bound_holds(table: MatchingTable, mask: int | None = None) -> bool:
    """``mu(n) > 0`` and ``sign mu(-n) = (-1)^n``: all real roots lie in ``(-n, n)``."""
    S = table.full if mask is None else mask
    return _root_bound_ok(popcount(S), table.counts(S))
