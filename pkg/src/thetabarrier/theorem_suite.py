"""Corpus-driven verification of the θ-barrier theory and counterexample hunts.

Every check is evaluated per (graph, θ) and accounted for separately, so a
suite report states how many instances of each property were examined and
which of them, if any, failed.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .barrier_lab import (
    ZERO,
    barrier_masks,
    c_odd,
    extend_extreme_to_barrier,
    intersect_maximal_barriers,
    is_classical_barrier,
    is_theta_barrier,
    is_theta_extreme,
    is_zero_barrier,
    maximal_members,
    submasks,
    theta_deficiency,
)
from .exact_poly import IntPoly, ThetaSpec, find_theta_candidates
from .graph_core import (
    Graph,
    _pairs,
    bits,
    enumerate_labeled_graphs,
    mask_of,
    parse_graph6,
    popcount,
    random_graph_with_edges,
    to_graph6,
)
from .matching_engine import (
    MatchingTable,
    brute_force_matching_counts,
    root_bound_holds,
    verify_identities,
)
from .theta_analysis import InvariantViolation, ThetaView, decompose, view

# name -> (group, description)
CHECKS: dict[str, tuple[str, str]] = {
    "identity_union": ("identities", "mu of a disjoint union is the product of the parts"),
    "identity_edge": ("identities", "mu(G) = mu(G - e) - mu(G - u - v) for every edge uv"),
    "identity_vertex": ("identities", "mu(G) = x mu(G - u) - sum over i ~ u of mu(G - u - i)"),
    "identity_derivative": ("identities", "d/dx mu(G) = sum over i of mu(G - i)"),
    "root_bound": ("identities", "mu(G, n) > 0 and sign mu(G, -n) = (-1)^n"),
    "coefficient_signs": ("identities", "coefficients alternate as (-1)^r p(G, r), p(G, 0) = 1, mu monic of degree n"),
    "oracle_equivalence": ("oracle", "recurrence mu equals brute-force matching enumeration"),
    "partition": ("decomposition", "D, A, N, P partition V; mult 0 gives D = A = {}; theta 0 gives N = {}"),
    "deletion_bound": ("decomposition", "|mult(S) - mult(S - u)| <= 1 for every induced S and u in S"),
    "essential_connected_mult_one": ("decomposition", "connected with every vertex essential implies mult 1"),
    "special_vertex_deletion": ("decomposition", "deleting u in A keeps D, P, N and removes u from A"),
    "remove_special_set": ("decomposition", "G - A has A empty and the same D, P, N"),
    "critical_components_after_special": ("decomposition", "G - A has exactly |A| + mult critical components"),
    "components_after_special": ("decomposition", "each component of G - A is critical or has mult 0"),
    "essential_set_is_critical_union": ("decomposition", "D is exactly the union of critical components of G - A"),
    "positive_deletion_stability": ("decomposition", "after deleting a positive vertex: essential stays essential, positive becomes essential or positive, neutral becomes essential or neutral"),
    "nonspecial_positive_keeps_special": ("decomposition", "u in P implies A(G) is contained in A(G - u)"),
    "critical_count_bound": ("barriers", "mult(G - X) >= c_theta(G - X) for every X"),
    "deficiency_upper_bound": ("barriers", "c_theta(G - X) - |X| <= mult(G) for every X"),
    "generalized_berge": ("barriers", "branch-and-bound deficiency equals mult(theta, G)"),
    "berge_formula": ("barriers", "max over X of c_odd(G - X) - |X| equals mult(0, G)"),
    "zero_barrier_is_classical": ("barriers", "every 0-barrier set is a classical barrier set"),
    "maximal_classical_is_maximal_zero": ("barriers", "every maximal classical barrier is a maximal 0-barrier"),
    "zero_special_is_classical_intersection": ("barriers", "A_0 is the intersection of all maximal classical barriers"),
    "extreme_downward_closed": ("barriers", "subsets of extreme sets are extreme"),
    "barrier_restriction": ("barriers", "X barrier, Y in X: X - Y is a barrier of G - Y"),
    "extreme_restriction": ("barriers", "X extreme, Y in X: X - Y is extreme in G - Y"),
    "extreme_extends_to_barrier": ("barriers", "X extreme: X + A(G - X) is a barrier containing X"),
    "barrier_is_extreme": ("barriers", "every barrier set is extreme"),
    "barrier_components": ("barriers", "components of G - X for a barrier X are critical or have mult 0"),
    "maximal_barrier_free_components": ("barriers", "maximal barrier X, mult-0 component H: H all neutral and c_theta(H - Y) <= |Y| - 1"),
    "critical_graph_deletion_bound": ("barriers", "theta-critical S: c_theta(S - Y) <= |Y| - 1 for nonempty Y"),
    "maximal_barrier_intersection": ("barriers", "the intersection of two maximal barriers is a barrier"),
    "barriers_within_positive": ("barriers", "every barrier or extreme set lies in A + P"),
    "barrier_inside_special": ("barriers", "a barrier contained in A equals A"),
    "special_set_minimal_barrier": ("barriers", "A is a barrier and lies inside every barrier"),
    "special_set_is_maximal_intersection": ("barriers", "N empty implies A is the intersection of all maximal barriers"),
    "safe_pruned_equivalence": ("barriers", "safe and pruned barrier enumeration agree"),
    "invariant_trap": ("internal", "no internal invariant violation was raised"),
}

GROUPS = ("identities", "oracle", "decomposition", "barriers")
MAX_STORED_FAILURES = 50


@dataclass
class CheckStats:
    name: str
    instances: int = 0
    failure_count: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def merge(self, other: "CheckStats") -> None:
        self.instances += other.instances
        self.failure_count += other.failure_count
        room = MAX_STORED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])


@dataclass
class SuiteReport:
    corpus: str
    theta_policy: str
    groups: tuple[str, ...]
    checks: dict[str, CheckStats] = field(default_factory=dict)
    graphs: int = 0
    theta_instances: int = 0
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def merge(self, part: "_Recorder") -> None:
        self.graphs += part.graphs
        self.theta_instances += part.theta_instances
        for name, stats in part.stats.items():
            self.checks.setdefault(name, CheckStats(name)).merge(stats)

    def to_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "theta_policy": self.theta_policy,
            "groups": list(self.groups),
            "graphs": self.graphs,
            "theta_instances": self.theta_instances,
            "runtime_seconds": round(self.runtime, 3),
            "passed": self.passed,
            "checks": {
                name: {
                    "description": CHECKS[name][1],
                    "group": CHECKS[name][0],
                    "instances": c.instances,
                    "failure_count": c.failure_count,
                    "failures": c.failures,
                    "passed": c.passed,
                }
                for name, c in sorted(self.checks.items(), key=lambda kv: list(CHECKS).index(kv[0]))
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"corpus: {self.corpus}",
            f"theta policy: {self.theta_policy}",
            f"graphs: {self.graphs}, (graph, theta) instances: {self.theta_instances}, {self.runtime:.1f}s",
        ]
        for name in CHECKS:
            c = self.checks.get(name)
            if c is None:
                continue
            status = "PASS" if c.passed else f"FAIL ({c.failure_count})"
            lines.append(f"  {status:<10} {name:<40} {c.instances:>10} instances")
            for f in c.failures[:3]:
                lines.append(f"             {f}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


class _Recorder:
    """Per-worker accumulation of check statistics."""

    def __init__(self):
        self.stats: dict[str, CheckStats] = {}
        self.graphs = 0
        self.theta_instances = 0
        self.g6 = ""

    def count(self, name: str, k: int = 1) -> None:
        s = self.stats.get(name)
        if s is None:
            s = self.stats[name] = CheckStats(name)
        s.instances += k

    def fail(self, name: str, theta: ThetaSpec | None, X: int | None, detail: str) -> None:
        s = self.stats.get(name)
        if s is None:
            s = self.stats[name] = CheckStats(name)
        s.failure_count += 1
        if len(s.failures) < MAX_STORED_FAILURES:
            s.failures.append({
                "graph6": self.g6,
                "theta": theta.to_text() if theta is not None else None,
                "set": sorted(bits(X)) if X is not None else None,
                "detail": detail,
            })


# -- θ selection --------------------------------------------------------------

def non_root_probe(n: int) -> ThetaSpec:
    """``x - (n + 1)``: outside ``(-n, n)``, hence never a root."""
    return ThetaSpec(IntPoly((-(n + 1), 1)), label=f"{n + 1} (probe)")


def thetas_for(table: MatchingTable, policy: str | Sequence[ThetaSpec] = "deg2") -> list[ThetaSpec]:
    """θ values examined for one graph: 0, the policy's candidates, one non-root probe."""
    out = [ZERO]
    if policy == "deg2":
        out.extend(find_theta_candidates(table.poly(), 2))
    elif policy == "deg1":
        out.extend(find_theta_candidates(table.poly(), 1))
    elif policy != "zero":
        out.extend(policy)
    out.append(non_root_probe(table.graph.n))
    seen, unique = set(), []
    for t in out:
        if t.minpoly not in seen:
            seen.add(t.minpoly)
            unique.append(t)
    return unique


# -- per-graph checks ---------------------------------------------------------

def _identity_checks(rec: _Recorder, T: MatchingTable) -> None:
    rep = verify_identities(T.graph, T)
    for key, name in (("union", "identity_union"), ("edge", "identity_edge"),
                      ("vertex", "identity_vertex"), ("derivative", "identity_derivative")):
        r = rep[key]
        rec.count(name, r.checked)
        if not r.passed:
            rec.fail(name, None, None, r.witness)
    rec.count("root_bound")
    if not root_bound_holds(T):
        rec.fail("root_bound", None, None, f"mu = {T.poly()}")
    rec.count("coefficient_signs")
    n = T.graph.n
    mu = T.poly()
    counts = T.counts()
    ok = mu.degree == n and mu.is_monic() and counts[0] == 1 and all(c > 0 for c in counts)
    ok = ok and all(mu.coeff(n - k) == (0 if k & 1 else (-1) ** (k // 2) * (counts[k // 2] if k // 2 < len(counts) else 0))
                    for k in range(n + 1))
    if not ok:
        rec.fail("coefficient_signs", None, None, f"mu = {mu}, counts = {counts}")


def _oracle_check(rec: _Recorder, T: MatchingTable) -> None:
    rec.count("oracle_equivalence")
    brute = tuple(brute_force_matching_counts(T.graph))
    if brute != T.counts():
        rec.fail("oracle_equivalence", None, None, f"recurrence {T.counts()} != brute force {brute}")


def _decomposition_checks(rec: _Recorder, V: ThetaView) -> None:
    T, theta, full = V.table, V.theta, V.full
    m = V.mult()
    dec = V.decompose()
    D, A, N, P, Q = dec.D, dec.A, dec.N, dec.P, dec.Q

    rec.count("partition")
    parts = (D, A, N, P)
    disjoint = all(a & b == 0 for a, b in itertools.combinations(parts, 2))
    if not (disjoint and D | A | N | P == full) or (m == 0 and D | A) or (theta.is_zero and N):
        rec.fail("partition", theta, None, f"D={D:#b} A={A:#b} N={N:#b} P={P:#b} mult={m}")

    mult = V._mult
    lookup = mult.__getitem__ if isinstance(mult, list) else V.mult
    checked = connected_checked = 0
    for S in range(1, full + 1):
        ms = lookup(S)
        all_essential = True
        for u in bits(S):
            d = lookup(S & ~(1 << u)) - ms
            checked += 1
            if d < -1 or d > 1:
                rec.fail("deletion_bound", theta, S, f"deleting {u} changes mult by {d}")
            if d != -1:
                all_essential = False
        if all_essential and len(T.components(S)) == 1:
            connected_checked += 1
            if ms != 1:
                rec.fail("essential_connected_mult_one", theta, S, f"mult = {ms}")
    rec.count("deletion_bound", checked)
    rec.count("essential_connected_mult_one", connected_checked)

    if m >= 1:
        for u in bits(A):
            rec.count("special_vertex_deletion")
            du = V.decompose(full & ~(1 << u))
            if (du.D, du.P, du.N, du.A) != (D, P, N, A & ~(1 << u)):
                rec.fail("special_vertex_deletion", theta, 1 << u, f"{du} vs {dec}")

    R = full & ~A
    dr = V.decompose(R)
    rec.count("remove_special_set")
    if dr.A or (dr.D, dr.P, dr.N) != (D, P, N):
        rec.fail("remove_special_set", theta, A, f"{dr} vs {dec}")
    rec.count("critical_components_after_special")
    if V.c_theta(R) != popcount(A) + m:
        rec.fail("critical_components_after_special", theta, A, f"c_theta = {V.c_theta(R)}, |A| + mult = {popcount(A) + m}")
    critical_union = 0
    for H in T.components(R):
        rec.count("components_after_special")
        crit = V.is_critical(H)
        if crit:
            critical_union |= H
        elif V.mult(H) != 0:
            rec.fail("components_after_special", theta, H, f"mult = {V.mult(H)} and not critical")
    rec.count("essential_set_is_critical_union")
    if critical_union != D:
        rec.fail("essential_set_is_critical_union", theta, critical_union, f"D = {sorted(bits(D))}")

    if m >= 1:
        for u in bits(Q):
            du = V.decompose(full & ~(1 << u))
            rest = full & ~(1 << u)
            rec.count("positive_deletion_stability", popcount(rest))
            bad = (D & rest & ~du.D) | (Q & rest & ~(du.D | du.Q)) | (N & rest & ~(du.D | du.N))
            if bad:
                rec.fail("positive_deletion_stability", theta, bad, f"after deleting positive {u}: {du} vs {dec}")
    for u in bits(P):
        rec.count("nonspecial_positive_keeps_special")
        du = V.decompose(full & ~(1 << u))
        if A & ~du.A:
            rec.fail("nonspecial_positive_keeps_special", theta, 1 << u, f"A(G)={sorted(bits(A))} A(G-u)={sorted(bits(du.A))}")


def _barrier_checks(rec: _Recorder, V: ThetaView, mode: str) -> None:
    T, theta, full = V.table, V.theta, V.full
    m = V.mult()
    dec = V.decompose()
    A, N, Q = dec.A, dec.N, dec.Q
    zero = theta.is_zero

    barriers, extremes, classical = [], [], []
    berge_best = None
    for X in range(full + 1):
        rest = full & ~X
        k = popcount(X)
        c = V.c_theta(rest)
        mr = V.mult(rest)
        if mr < c:
            rec.fail("critical_count_bound", theta, X, f"mult {mr} < c_theta {c}")
        if c - k > m:
            rec.fail("deficiency_upper_bound", theta, X, f"c_theta - |X| = {c - k} > mult {m}")
        if c - k == m:
            barriers.append(X)
        if mr == m + k:
            extremes.append(X)
        if zero:
            value = c_odd(T, rest) - k
            if berge_best is None or value > berge_best:
                berge_best = value
            if value == m:
                classical.append(X)
    rec.count("critical_count_bound", full + 1)
    rec.count("deficiency_upper_bound", full + 1)

    rec.count("generalized_berge")
    try:
        d = theta_deficiency(T, theta)
        if not is_theta_barrier(T, theta, d.witness):
            rec.fail("generalized_berge", theta, d.witness, "witness is not a barrier")
    except InvariantViolation as e:
        rec.fail("generalized_berge", theta, None, str(e))

    barriers.sort(key=lambda x: (popcount(x), x))
    family = barrier_masks(T, theta, mode)
    rec.count("safe_pruned_equivalence")
    if family != barriers:
        rec.fail("safe_pruned_equivalence", theta, None,
                 f"{mode} {[sorted(bits(x)) for x in family]} vs scan {[sorted(bits(x)) for x in barriers]}")
    bset = set(family)
    eset = set(extremes)
    maximal = maximal_members(family)

    rec.count("barriers_within_positive", len(barriers) + len(extremes))
    for X in barriers + extremes:
        if X & ~Q:
            rec.fail("barriers_within_positive", theta, X, f"A + P = {sorted(bits(Q))}")

    if zero:
        rec.count("berge_formula")
        if berge_best != m:
            rec.fail("berge_formula", theta, None, f"max c_odd - |X| = {berge_best}, mult = {m}")
        cset = set(classical)
        rec.count("zero_barrier_is_classical", len(family))
        for X in family:
            if X not in cset:
                rec.fail("zero_barrier_is_classical", theta, X, "0-barrier but not classical")
        cmax = maximal_members(classical)
        rec.count("maximal_classical_is_maximal_zero", len(cmax))
        maxset = set(maximal)
        for X in cmax:
            if X not in maxset:
                rec.fail("maximal_classical_is_maximal_zero", theta, X, "maximal classical barrier is not a maximal 0-barrier")
        inter = full
        for X in cmax:
            inter &= X
        rec.count("zero_special_is_classical_intersection")
        if inter != A:
            rec.fail("zero_special_is_classical_intersection", theta, inter, f"A_0 = {sorted(bits(A))}")

    closed = restr = 0
    for X in extremes:
        for u in bits(X):
            closed += 1
            if X & ~(1 << u) not in eset:
                rec.fail("extreme_downward_closed", theta, X, f"dropping {u} leaves a non-extreme set")
        mx = V.mult(full & ~X)
        for Y in submasks(X):
            restr += 1
            if mx != V.mult(full & ~Y) + popcount(X & ~Y):
                rec.fail("extreme_restriction", theta, X, f"fails for Y = {sorted(bits(Y))}")
        rec.count("extreme_extends_to_barrier")
        try:
            Tset = extend_extreme_to_barrier(T, theta, X)
            if X & ~Tset:
                rec.fail("extreme_extends_to_barrier", theta, X, "completion does not contain X")
        except (InvariantViolation, ValueError) as e:
            rec.fail("extreme_extends_to_barrier", theta, X, str(e))
    rec.count("extreme_downward_closed", closed)
    rec.count("extreme_restriction", restr)

    restr = comps = 0
    for X in family:
        rest = full & ~X
        c = V.c_theta(rest)
        for Y in submasks(X):
            restr += 1
            if c - popcount(X & ~Y) != V.mult(full & ~Y):
                rec.fail("barrier_restriction", theta, X, f"fails for Y = {sorted(bits(Y))}")
        if X not in eset:
            rec.fail("barrier_is_extreme", theta, X, "barrier but not extreme")
        for H in T.components(rest):
            comps += 1
            if not V.is_critical(H) and V.mult(H) != 0:
                rec.fail("barrier_components", theta, X, f"component {sorted(bits(H))} has mult {V.mult(H)}")
        if X & ~A == 0 and X != A:
            rec.fail("barrier_inside_special", theta, X, f"A = {sorted(bits(A))}")
        if A & ~X:
            rec.fail("special_set_minimal_barrier", theta, X, f"A = {sorted(bits(A))} not inside")
    rec.count("barrier_restriction", restr)
    rec.count("barrier_is_extreme", len(family))
    rec.count("barrier_components", comps)
    rec.count("barrier_inside_special", len(family))
    rec.count("special_set_minimal_barrier", len(family) + 1)
    if A not in bset:
        rec.fail("special_set_minimal_barrier", theta, A, "A is not a barrier")

    free = 0
    for X in maximal:
        for H in T.components(full & ~X):
            if V.mult(H) != 0:
                continue
            for u in bits(H):
                free += 1
                if V.mult(H & ~(1 << u)) != 0:
                    rec.fail("maximal_barrier_free_components", theta, X, f"vertex {u} not neutral in {sorted(bits(H))}")
            for Y in submasks(H):
                if Y:
                    free += 1
                    if V.c_theta(H & ~Y) > popcount(Y) - 1:
                        rec.fail("maximal_barrier_free_components", theta, X, f"H={sorted(bits(H))} Y={sorted(bits(Y))}")
    rec.count("maximal_barrier_free_components", free)

    crit_checked = 0
    for S in range(1, full + 1):
        if not V.is_critical(S):
            continue
        for Y in submasks(S):
            if Y:
                crit_checked += 1
                if V.c_theta(S & ~Y) > popcount(Y) - 1:
                    rec.fail("critical_graph_deletion_bound", theta, S, f"Y = {sorted(bits(Y))}")
    rec.count("critical_graph_deletion_bound", crit_checked)

    pairs = 0
    for X, Y in itertools.combinations(maximal, 2):
        pairs += 1
        if X & Y not in bset:
            rec.fail("maximal_barrier_intersection", theta, X & Y, f"from {sorted(bits(X))} and {sorted(bits(Y))}")
    rec.count("maximal_barrier_intersection", pairs)

    if N == 0:
        rec.count("special_set_is_maximal_intersection")
        inter = full
        for X in maximal:
            inter &= X
        if inter != A:
            rec.fail("special_set_is_maximal_intersection", theta, inter, f"A = {sorted(bits(A))}")


def check_graph(
    rec: _Recorder,
    G: Graph,
    theta_policy: str | Sequence[ThetaSpec],
    groups: Sequence[str],
    safe_max_n: int = 5,
) -> None:
    rec.graphs += 1
    rec.g6 = to_graph6(G)
    T = MatchingTable(G)
    if "identities" in groups:
        _identity_checks(rec, T)
    if "oracle" in groups:
        _oracle_check(rec, T)
    if "decomposition" not in groups and "barriers" not in groups:
        return
    mode = "safe" if G.n <= safe_max_n else "pruned"
    for theta in thetas_for(T, theta_policy):
        rec.theta_instances += 1
        rec.count("invariant_trap")
        try:
            V = view(T, theta)
            if "decomposition" in groups:
                _decomposition_checks(rec, V)
            if "barriers" in groups:
                _barrier_checks(rec, V, mode)
        except InvariantViolation as e:
            rec.fail("invariant_trap", theta, None, str(e))


# -- corpora and drivers ----------------------------------------------------------

def exhaustive_corpus(n_max: int, n_min: int = 0) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_labeled_graphs(n)


def random_corpus(n: int, count: int, edge_probability: float = 0.5, seed: int = 0) -> Iterator[Graph]:
    return enumerate_labeled_graphs(n, random_count=count, edge_probability=edge_probability, seed=seed)


def sparse_random_corpus(count: int, max_edges: int = 12, n_range=(4, 10), seed: int = 0) -> Iterator[Graph]:
    """Random graphs with at most ``max_edges`` edges (small enough for brute force)."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(*n_range)
        m = rng.randint(0, min(max_edges, n * (n - 1) // 2))
        yield random_graph_with_edges(n, m, rng)


def read_graph6_file(path: str) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            if line.strip():
                yield parse_graph6(line)


def _worker(args) -> _Recorder:
    g6_list, theta_policy, groups, safe_max_n = args
    rec = _Recorder()
    for g6 in g6_list:
        check_graph(rec, parse_graph6(g6), theta_policy, groups, safe_max_n)
    return rec


def _chunks(it: Iterable[Graph], size: int) -> Iterator[list[str]]:
    chunk = []
    for G in it:
        chunk.append(to_graph6(G))
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def run_suite(
    corpus: Iterable[Graph],
    theta_policy: str | Sequence[ThetaSpec] = "deg2",
    groups: Sequence[str] = GROUPS,
    *,
    description: str = "custom corpus",
    jobs: int = 1,
    safe_max_n: int = 5,
    progress: Callable[[int], None] | None = None,
) -> SuiteReport:
    """Run every check in ``groups`` over ``corpus``; failures are data, not errors."""
    for g in groups:
        if g not in GROUPS:
            raise ValueError(f"unknown check group {g!r}")
    policy_name = theta_policy if isinstance(theta_policy, str) else "explicit:" + ";".join(t.to_text() for t in theta_policy)
    report = SuiteReport(description, policy_name, tuple(groups))
    start = time.perf_counter()
    if jobs <= 1:
        rec = _Recorder()
        for G in corpus:
            check_graph(rec, G, theta_policy, groups, safe_max_n)
            if progress is not None:
                progress(rec.graphs)
        report.merge(rec)
    else:
        tasks = ((chunk, theta_policy, tuple(groups), safe_max_n) for chunk in _chunks(corpus, 256))
        with multiprocessing.Pool(jobs) as pool:
            for part in pool.imap(_worker, tasks):
                report.merge(part)
                if progress is not None:
                    progress(report.graphs)
    for name in CHECKS:
        if CHECKS[name][0] in groups or name == "invariant_trap" and ("decomposition" in groups or "barriers" in groups):
            report.checks.setdefault(name, CheckStats(name))
    report.runtime = time.perf_counter() - start
    return report


# -- counterexample hunts -------------------------------------------------------

HUNT_TARGETS = (
    "barrier_not_zero_barrier",
    "extreme_not_barrier",
    "barrier_family_not_closed",
    "special_intersection_gap",
)
HUNT_N_LIMIT = 8


@dataclass
class HuntWitness:
    graph6: str
    theta: str
    theta_label: str
    sets: dict

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "theta": self.theta, "theta_label": self.theta_label, "sets": self.sets}


@dataclass
class HuntTarget:
    id: str
    n_max: int
    found: list[HuntWitness] = field(default_factory=list)
    graphs_scanned: int = 0
    searched_up_to: int = 0
    runtime: float = 0.0

    @property
    def success(self) -> bool:
        return bool(self.found)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "n_max": self.n_max,
            "found": [w.to_dict() for w in self.found],
            "status": "found" if self.found else f"not found up to n={self.searched_up_to}",
            "graphs_scanned": self.graphs_scanned,
            "runtime_seconds": round(self.runtime, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _sorted(mask: int) -> list[int]:
    return sorted(bits(mask))


def _hunt_classical(T: MatchingTable) -> Iterator[tuple[ThetaSpec, dict]]:
    # barrier = c_odd(G - X) - |X| = mult(0, G); the scan stays cheap because
    # 0-barrier status only needs the already cached component splits
    V = view(T, ZERO)
    full, m = T.full, V.mult()
    for X in range(full + 1):
        rest = full & ~X
        k = popcount(X)
        if c_odd(T, rest) - k == m and V.c_theta(rest) - k != m:
            yield ZERO, {"X": _sorted(X)}


def _hunt_extreme(T: MatchingTable) -> Iterator[tuple[ThetaSpec, dict]]:
    V = view(T, ZERO)
    full, m = T.full, V.mult()
    for X in range(1, full + 1):
        rest = full & ~X
        k = popcount(X)
        if V.mult(rest) == m + k and V.c_theta(rest) - k != m:
            yield ZERO, {"X": _sorted(X)}


def _hunt_not_closed(T: MatchingTable) -> Iterator[tuple[ThetaSpec, dict]]:
    family = barrier_masks(T, ZERO, "pruned")
    if len(family) < 2:
        return
    members = set(family)
    for X, Y in itertools.combinations(family, 2):
        if X | Y not in members and X & Y not in members:
            yield ZERO, {"X": _sorted(X), "Y": _sorted(Y), "union": _sorted(X | Y), "intersection": _sorted(X & Y)}


def _gap_thetas(T: MatchingTable) -> list[ThetaSpec]:
    seen, out = set(), []
    polys = [T.poly()] + [T.poly(T.full & ~(1 << v)) for v in range(T.graph.n)]
    for p in polys:
        for t in find_theta_candidates(p, 2):
            if not t.is_zero and t.minpoly not in seen:
                seen.add(t.minpoly)
                out.append(t)
    return out


def _hunt_gap(T: MatchingTable) -> Iterator[tuple[ThetaSpec, dict]]:
    # positive vertices (and so any nonempty barrier) need θ to be a root of
    # some mu(G - v), hence the candidates come from the vertex-deleted graphs
    for theta in _gap_thetas(T):
        V = view(T, theta)
        dec = V.decompose()
        if not dec.N:
            continue
        maximal = maximal_members(barrier_masks(T, theta, "pruned"))
        inter = T.full
        for X in maximal:
            inter &= X
        if inter != dec.A:
            yield theta, {
                "intersection": _sorted(inter),
                "A": _sorted(dec.A),
                "N": _sorted(dec.N),
                "maximal": [_sorted(X) for X in maximal],
                "mult": dec.mult,
            }


_FINDERS = {
    "barrier_not_zero_barrier": _hunt_classical,
    "extreme_not_barrier": _hunt_extreme,
    "barrier_family_not_closed": _hunt_not_closed,
    "special_intersection_gap": _hunt_gap,
}


def _degrees_sorted(G: Graph) -> bool:
    degs = [popcount(a) for a in G.adj]
    return all(degs[i] >= degs[i + 1] for i in range(len(degs) - 1))


def hunt_counterexamples(
    target: str, n_max: int = 7, k: int = 1, n_min: int = 1, reduce: bool = True
) -> HuntTarget:
    """Scan labeled graphs by increasing n until ``k`` witnesses of ``target`` turn up.

    Every target is an isomorphism invariant, and every graph has a labeling
    with non-increasing degrees, so with ``reduce`` only such labelings are
    examined.  ``graphs_scanned`` counts the graphs actually analysed.
    """
    if target not in _FINDERS:
        raise ValueError(f"unknown hunt target {target!r}; expected one of {', '.join(HUNT_TARGETS)}")
    if n_max > HUNT_N_LIMIT:
        raise ValueError(f"n_max is limited to {HUNT_N_LIMIT}")
    finder = _FINDERS[target]
    result = HuntTarget(target, n_max)
    start = time.perf_counter()
    for n in range(n_min, n_max + 1):
        result.searched_up_to = n
        for G in enumerate_labeled_graphs(n) if n <= 7 else _eight_vertex_graphs():
            if reduce and not _degrees_sorted(G):
                continue
            result.graphs_scanned += 1
            T = MatchingTable(G)
            for theta, sets in finder(T):
                result.found.append(HuntWitness(to_graph6(G), theta.to_text(), theta.label, sets))
                break
            if len(result.found) >= k:
                result.runtime = time.perf_counter() - start
                return result
    result.runtime = time.perf_counter() - start
    return result


def _eight_vertex_graphs() -> Iterator[Graph]:
    # beyond the exhaustive limit the labeled scan is still well defined
    pairs = _pairs(8)
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(8, [e for k, e in enumerate(pairs) if code >> k & 1])


def reverify(target: str, witness: HuntWitness) -> bool:
    """Recompute a witness's claim with the public decision procedures."""
    G = parse_graph6(witness.graph6)
    T = MatchingTable(G)
    theta = ThetaSpec.from_text(witness.theta)
    s = witness.sets
    if target == "barrier_not_zero_barrier":
        X = mask_of(s["X"])
        return is_classical_barrier(T, X) and not is_zero_barrier(T, X)
    if target == "extreme_not_barrier":
        X = mask_of(s["X"])
        return X != 0 and is_theta_extreme(T, theta, X) and not is_theta_barrier(T, theta, X)
    if target == "barrier_family_not_closed":
        X, Y = mask_of(s["X"]), mask_of(s["Y"])
        return (is_zero_barrier(T, X) and is_zero_barrier(T, Y)
                and not is_zero_barrier(T, X | Y) and not is_zero_barrier(T, X & Y))
    if target == "special_intersection_gap":
        res = intersect_maximal_barriers(T, theta)
        dec = decompose(T, theta)
        return dec.N != 0 and not res.equals_special and res.mask == mask_of(s["intersection"])
    raise ValueError(f"unknown hunt target {target!r}")
