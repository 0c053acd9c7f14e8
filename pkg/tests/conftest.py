"""Shared brute-force helpers for the tests.

These deliberately avoid the library's closed forms: element orders come from
repeated multiplication in an explicit presentation, graphs are rebuilt by
double loops, and the clique/Hamiltonicity brute forcers enumerate
combinations and permutations outright.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations

from primecoprime.groups import Family, GroupSpec, elements
from primecoprime.pcgraph import SimpleGraph, from_edges


def naive_is_prime(k: int) -> bool:
    return k >= 2 and all(k % d != 0 for d in range(2, k))


def naive_element_order(group: GroupSpec, element) -> int:
    """Order by repeated multiplication.

    Rotations/powers are pairs (i, 0), the other coset is (i, 1); the
    presentation rules are b a = a^-1 b together with b^2 = identity for
    dihedral groups and b^2 = a^n for dicyclic ones (a of order 2n).
    """
    n = group.n
    if group.family is Family.CYCLIC:
        value = element.index % n
        acc, k = value, 1
        while acc % n != 0:
            acc += value
            k += 1
        return k

    if group.family is Family.DIHEDRAL:
        modulus = n

        def mul(x, y):
            (i1, j1), (i2, j2) = x, y
            if j1 == 0:
                return ((i1 + i2) % modulus, j2)
            return ((i1 - i2) % modulus, 1 - j2)

    else:
        modulus = 2 * n

        def mul(x, y):
            (i1, j1), (i2, j2) = x, y
            if j1 == 0:
                return ((i1 + i2) % modulus, j2)
            if j2 == 0:
                return ((i1 - i2) % modulus, 1)
            return ((i1 - i2 + n) % modulus, 0)

    start = (element.index, 0 if element.kind in ("r", "a") else 1)
    acc, k = start, 1
    while acc != (0, 0):
        acc = mul(acc, start)
        k += 1
    return k


def naive_theta(group: GroupSpec) -> SimpleGraph:
    """Prime coprime graph rebuilt from multiplication-based orders."""
    elems = elements(group)
    orders = [naive_element_order(group, e) for e in elems]
    edges = []
    for u in range(len(elems)):
        for v in range(u + 1, len(elems)):
            g = math.gcd(orders[u], orders[v])
            if g == 1 or naive_is_prime(g):
                edges.append((u, v))
    return from_edges(len(elems), edges)


def brute_max_clique(graph: SimpleGraph) -> tuple[int, tuple[int, ...]]:
    """Exhaustive maximum clique; returns size and the lexicographically
    least witness (combinations iterate in lexicographic order)."""
    n = graph.vertex_count
    for size in range(n, 0, -1):
        for combo in combinations(range(n), size):
            if all(graph.has_edge(u, v) for u, v in combinations(combo, 2)):
                return size, combo
    return 0, ()


def brute_hamiltonian(graph: SimpleGraph) -> bool:
    """Exhaustive Hamiltonian cycle test for tiny graphs."""
    n = graph.vertex_count
    if n < 3:
        return False
    rest = list(range(1, n))
    for perm in permutations(rest):
        cycle = (0,) + perm
        if all(
            graph.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n)
        ):
            return True
    return False


def assert_valid_cycle(graph: SimpleGraph, cycle: tuple[int, ...]) -> None:
    assert sorted(cycle) == list(range(graph.vertex_count))
    for i, u in enumerate(cycle):
        assert graph.has_edge(u, cycle[(i + 1) % len(cycle)])
