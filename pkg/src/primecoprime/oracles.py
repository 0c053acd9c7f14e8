"""Brute-force verifiers, independent of the closed forms.

max_clique is an exact branch-and-bound with greedy colouring bounds;
hamiltonian_search is a backtracking search whose pruning rules are all
sound, so exhaustion proves non-Hamiltonicity and every verdict carries
checkable evidence (a cycle or a disconnecting cut).  Nothing here is
randomized; identical inputs always produce identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .groups import GroupSpec, is_epo
from .pcgraph import (
    DEFAULT_VERTEX_CAP,
    SimpleGraph,
    build_theta,
    component_count,
    delete_vertices,
    is_complete,
    validate_partition,
)

__all__ = [
    "DEFAULT_CLIQUE_BUDGET",
    "DEFAULT_HAM_BUDGET",
    "BudgetExceededError",
    "CliqueResult",
    "max_clique",
    "Verdict",
    "HamiltonicityEvidence",
    "hamiltonian_search",
    "cut_witness_check",
    "dirac_check",
    "dominating_vertices",
    "kl_partition_check",
    "is_epo_equiv_complete",
]

DEFAULT_CLIQUE_BUDGET = 100_000_000
DEFAULT_HAM_BUDGET = 2_000_000


class BudgetExceededError(Exception):
    """Raised when the clique search exceeds its node budget."""


def _bitmasks(graph: SimpleGraph) -> list[int]:
    masks = []
    for nbrs in graph.adjacency:
        m = 0
        for u in nbrs:
            m |= 1 << u
        masks.append(m)
    return masks


# ---------------------------------------------------------------------------
# maximum clique
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple[int, ...]  # lexicographically least maximum clique, sorted


class _Budget:
    __slots__ = ("left",)

    def __init__(self, amount: int) -> None:
        self.left = amount

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceededError("clique search node budget exhausted")


def _greedy_color_order(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy colouring of the candidate set; returns the vertices grouped by
    colour class with nondecreasing colour numbers, which bound the largest
    clique reachable through each prefix."""
    order: list[int] = []
    bound: list[int] = []
    colour = 0
    rest = cand
    while rest:
        colour += 1
        avail = rest
        while avail:
            bit = avail & -avail
            v = bit.bit_length() - 1
            avail &= ~(adj[v] | bit)
            rest ^= bit
            order.append(v)
            bound.append(colour)
    return order, bound


def _max_size(adj: list[int], cand: int, size: int, best: int, budget: _Budget) -> int:
    order, bound = _greedy_color_order(cand, adj)
    for i in range(len(order) - 1, -1, -1):
        if size + bound[i] <= best:
            return best
        budget.spend()
        v = order[i]
        sub = cand & adj[v]
        if sub:
            best = _max_size(adj, sub, size + 1, best, budget)
        elif size + 1 > best:
            best = size + 1
        cand &= ~(1 << v)
    return best


def _exists_clique(adj: list[int], cand: int, k: int, budget: _Budget) -> bool:
    if k <= 0:
        return True
    order, bound = _greedy_color_order(cand, adj)
    if not order or bound[-1] < k:
        return False
    for i in range(len(order) - 1, -1, -1):
        if bound[i] < k:
            return False
        budget.spend()
        v = order[i]
        if _exists_clique(adj, cand & adj[v], k - 1, budget):
            return True
        cand &= ~(1 << v)
    return False


def max_clique(
    graph: SimpleGraph, node_budget: int = DEFAULT_CLIQUE_BUDGET
) -> CliqueResult:
    """Exact maximum clique with the lexicographically least witness.

    Phase one finds the clique number; phase two grows the witness greedily,
    keeping a vertex exactly when a maximum clique through the current prefix
    still exists.  Both phases share the node budget.
    """
    n = graph.vertex_count
    if n < 1:
        raise ValueError("clique search needs at least one vertex")
    adj = _bitmasks(graph)
    budget = _Budget(node_budget)
    full = (1 << n) - 1
    best = _max_size(adj, full, 0, 0, budget)
    witness: list[int] = []
    cand = full
    need = best
    scan = 0
    while need > 0:
        for v in range(scan, n):
            if not (cand >> v) & 1:
                continue
            sub = cand & adj[v]
            if need == 1 or _exists_clique(adj, sub, need - 1, budget):
                witness.append(v)
                cand = sub
                need -= 1
                scan = v + 1
                break
        else:
            raise AssertionError("witness reconstruction failed")
    for i, u in enumerate(witness):  # cheap self-check before reporting
        for v in witness[i + 1 :]:
            if not (adj[u] >> v) & 1:
                raise AssertionError("witness is not a clique")
    return CliqueResult(best, tuple(witness))


# ---------------------------------------------------------------------------
# Hamiltonicity
# ---------------------------------------------------------------------------


class Verdict(Enum):
    HAMILTONIAN = "hamiltonian"
    NON_HAMILTONIAN = "non-hamiltonian"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class HamiltonicityEvidence:
    """Search outcome: a cycle for yes, a disconnecting cut or an exhaustion
    note for no, a note only for inconclusive."""

    verdict: Verdict
    cycle: tuple[int, ...] | None = None
    cut_set: tuple[int, ...] | None = None
    note: str = ""


def dominating_vertices(graph: SimpleGraph) -> tuple[int, ...]:
    """Vertices adjacent to every other vertex, ascending."""
    n = graph.vertex_count
    return tuple(v for v in range(n) if len(graph.adjacency[v]) == n - 1)


def _root_cut_witness(graph: SimpleGraph) -> tuple[int, ...] | None:
    """Look for a set S with more than |S| components after removal; checks
    the dominating set and the neighborhoods of minimum-degree vertices."""
    n = graph.vertex_count
    candidates: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    dom = dominating_vertices(graph)
    if 0 < len(dom) < n:
        candidates.append(dom)
        seen.add(dom)
    dmin = graph.min_degree()
    for v in range(n):
        if len(graph.adjacency[v]) != dmin:
            continue
        nb = graph.adjacency[v]
        if 0 < len(nb) < n and nb not in seen:
            seen.add(nb)
            candidates.append(nb)
        if len(candidates) >= 17:
            break
    for cut in candidates:
        if component_count(delete_vertices(graph, cut)) > len(cut):
            return cut
    return None


def _spread(adj: list[int], seed: int, region: int) -> int:
    """Vertices of region reachable from seed inside region (mask BFS)."""
    reach = seed & region
    frontier = reach
    while frontier:
        grown = 0
        f = frontier
        while f:
            bit = f & -f
            grown |= adj[bit.bit_length() - 1]
            f ^= bit
        grown &= region & ~reach
        reach |= grown
        frontier = grown
    return reach


def hamiltonian_search(
    graph: SimpleGraph, budget: int = DEFAULT_HAM_BUDGET
) -> HamiltonicityEvidence:
    """Backtracking Hamiltonian cycle search.

    The path starts at a minimum-degree vertex and extends toward neighbors
    with the fewest remaining continuations first.  Before descending, two
    sound feasibility rules run: every unvisited vertex still needs two
    usable connections, and the unvisited region must stay reachable.  A
    disconnecting cut found up front short-circuits to NonHamiltonian with
    the cut as certificate; otherwise NonHamiltonian is only reported on
    exhaustion.  Exceeding the step budget yields Inconclusive.
    """
    n = graph.vertex_count
    if n < 3:
        return HamiltonicityEvidence(
            Verdict.NON_HAMILTONIAN, note="a cycle needs at least three vertices"
        )
    if graph.min_degree() < 2:
        return HamiltonicityEvidence(
            Verdict.NON_HAMILTONIAN, note="a vertex of degree below two"
        )
    if component_count(graph) > 1:
        return HamiltonicityEvidence(Verdict.NON_HAMILTONIAN, note="disconnected")
    cut = _root_cut_witness(graph)
    if cut is not None:
        pieces = component_count(delete_vertices(graph, cut))
        return HamiltonicityEvidence(
            Verdict.NON_HAMILTONIAN,
            cut_set=cut,
            note=f"removing {len(cut)} vertices leaves {pieces} components",
        )

    adj = _bitmasks(graph)
    full = (1 << n) - 1
    start = min(range(n), key=lambda v: (len(graph.adjacency[v]), v))
    start_bit = 1 << start

    def feasible(endpoint: int, visited: int) -> bool:
        unvisited = full & ~visited
        if unvisited == 0:
            return True
        if adj[start] & unvisited == 0:
            return False  # nothing left that could close the cycle
        allowed = unvisited | (1 << endpoint) | start_bit
        u = unvisited
        while u:
            bit = u & -u
            if (adj[bit.bit_length() - 1] & allowed).bit_count() < 2:
                return False
            u ^= bit
        region = unvisited | (1 << endpoint)
        return _spread(adj, 1 << endpoint, region) & unvisited == unvisited

    def ordered(endpoint: int, visited: int) -> list[int]:
        # descending (degree, vertex) so that list.pop() explores ascending
        unvisited = full & ~visited
        cand = adj[endpoint] & unvisited
        ranked = []
        c = cand
        while c:
            bit = c & -c
            v = bit.bit_length() - 1
            ranked.append(((adj[v] & unvisited).bit_count(), v))
            c ^= bit
        ranked.sort(reverse=True)
        return [v for _, v in ranked]

    path = [start]
    visited = start_bit
    stack = [ordered(start, visited)]
    steps = 0
    while stack:
        frame = stack[-1]
        if not frame:
            stack.pop()
            if stack:
                visited ^= 1 << path.pop()
            continue
        v = frame.pop()
        steps += 1
        if steps > budget:
            return HamiltonicityEvidence(
                Verdict.INCONCLUSIVE, note=f"step budget {budget} exhausted"
            )
        path.append(v)
        visited |= 1 << v
        if len(path) == n:
            if (adj[v] >> start) & 1:
                return HamiltonicityEvidence(Verdict.HAMILTONIAN, cycle=tuple(path))
            visited ^= 1 << v
            path.pop()
            continue
        if feasible(v, visited):
            stack.append(ordered(v, visited))
        else:
            visited ^= 1 << v
            path.pop()
    return HamiltonicityEvidence(
        Verdict.NON_HAMILTONIAN, note="search exhausted without finding a cycle"
    )


# ---------------------------------------------------------------------------
# small checkers
# ---------------------------------------------------------------------------


def cut_witness_check(graph: SimpleGraph, cut) -> bool:
    """True iff removing the cut leaves more components than |cut|."""
    cut_set = sorted(set(cut))
    if not cut_set:
        raise ValueError("cut set must be nonempty")
    if len(cut_set) >= graph.vertex_count:
        raise ValueError("cut set must be a proper subset of the vertices")
    return component_count(delete_vertices(graph, cut_set)) > len(cut_set)


def dirac_check(graph: SimpleGraph) -> bool:
    """Minimum-degree bound that forces a Hamiltonian cycle when true."""
    if graph.vertex_count < 3:
        raise ValueError("the degree bound needs at least three vertices")
    return 2 * graph.min_degree() >= graph.vertex_count


def kl_partition_check(graph: SimpleGraph, partition, k: int, l: int) -> bool:
    """True iff the first l parts induce cliques and the last k parts induce
    independent sets; part count must equal k + l."""
    parts = validate_partition(partition, graph.vertex_count)
    if len(parts) != k + l:
        raise ValueError(f"expected {k + l} parts, got {len(parts)}")
    nbrs = graph.neighbor_sets()
    for part in parts[:l]:
        members = frozenset(part)
        for u in part:
            if members - nbrs[u] - {u}:
                return False
    for part in parts[l:]:
        members = frozenset(part)
        for u in part:
            if nbrs[u] & members:
                return False
    return True


def is_epo_equiv_complete(
    group: GroupSpec, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> bool:
    """True iff having only identity/prime element orders coincides with the
    prime coprime graph being complete."""
    graph = build_theta(group, vertex_cap)
    return is_epo(group) == is_complete(graph)
