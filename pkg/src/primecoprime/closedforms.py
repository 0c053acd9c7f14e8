"""Closed forms for the prime coprime graph: clique numbers, vertex degrees,
Hamiltonicity tests, and the H-join decomposition catalog.

Catalog coverage, by the factorization shape of the parameter n:

  cyclic / dihedral   p, pq, p^m (m>=2), pq^m (m>=2), p^lq^m (l,m>=2), pqr
  dicyclic            2^m (m>=1), p, 2p, pq, p^m (m>=2) with p, q odd primes

Everything else is reported as not covered (None).  Part 0 of every catalog
entry is the clique on the identity and prime-order elements; the remaining
parts are independent sets collecting the composite order classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .groups import (
    Family,
    GroupElement,
    GroupSpec,
    cyclic,
    dicyclic,
    dihedral,
    element_order,
    element_orders,
)
from .numtheory import Factorization, factorize, is_prime
from .pcgraph import HJoinPart, HJoinSpec, PartKind, from_edges

__all__ = [
    "ExponentProfile",
    "clique_cyclic",
    "clique_dihedral",
    "clique_dicyclic",
    "degree_cyclic",
    "degree_dihedral",
    "degree_dicyclic",
    "theta_degree",
    "is_hamiltonian_cyclic",
    "is_hamiltonian_dihedral",
    "is_hamiltonian_dicyclic",
    "DecompositionEntry",
    "decomposition_catalog",
    "catalog_partition",
]


# ---------------------------------------------------------------------------
# clique numbers
# ---------------------------------------------------------------------------


def clique_cyclic(n: int) -> int:
    """Clique number of the prime coprime graph of Z_n, n >= 2."""
    if n < 2:
        raise ValueError(f"clique_cyclic needs n >= 2, got {n}")
    f = factorize(n)
    k = f.prime_count
    return (
        1
        + sum(p - 1 for p in f.primes)
        + sum(1 for e in f.exponents if e >= 2)
        + k * (k - 1) // 2
    )


def clique_dihedral(n: int) -> int:
    """Clique number for D_n, n >= 3: the reflections extend every clique."""
    if n < 3:
        raise ValueError(f"clique_dihedral needs n >= 3, got {n}")
    return n + clique_cyclic(n)


def clique_dicyclic(n: int) -> int:
    """Clique number for Q_n, n >= 2: the cyclic part dominates, one extra
    vertex outside it fits exactly when n is odd."""
    if n < 2:
        raise ValueError(f"clique_dicyclic needs n >= 2, got {n}")
    return clique_cyclic(2 * n) + (1 if n % 2 == 1 else 0)


# ---------------------------------------------------------------------------
# vertex degrees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExponentProfile:
    """Exponent data of an element order d inside its ambient cyclic group.

    alpha are the exponents of the group order, beta the exponents of d
    (componentwise beta <= alpha), and gamma the effective exponents used by
    the degree expansion: gamma_i = 1 where beta_i >= 2, else alpha_i.
    """

    factorization: Factorization
    beta: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.beta) != self.factorization.prime_count:
            raise ValueError("beta must align with the prime list")
        for b, a in zip(self.beta, self.factorization.exponents):
            if not (0 <= b <= a):
                raise ValueError("beta must satisfy 0 <= beta_i <= alpha_i")

    @classmethod
    def for_order(cls, fact: Factorization, d: int) -> "ExponentProfile":
        if d < 1 or fact.value % d != 0:
            raise ValueError(f"{d} is not a divisor of {fact.value}")
        beta = []
        for p in fact.primes:
            b = 0
            while d % p == 0:
                d //= p
                b += 1
            beta.append(b)
        return cls(fact, tuple(beta))

    @property
    def alpha(self) -> tuple[int, ...]:
        return self.factorization.exponents

    @property
    def gamma(self) -> tuple[int, ...]:
        return tuple(
            1 if b >= 2 else a for b, a in zip(self.beta, self.alpha)
        )


def _is_composite(d: int) -> bool:
    return d > 1 and not is_prime(d)


def _composite_degree(fact: Factorization, d: int) -> int:
    """Degree of a composite-order vertex in the prime coprime graph of the
    cyclic group of order fact.value, by the admissible-subset expansion:
    sum over a in {0,1}^k with at most one a_i = 1 on the support of d, of
    prod (p_i**gamma_i - 1)**a_i."""
    profile = ExponentProfile.for_order(fact, d)
    support = [i for i, b in enumerate(profile.beta) if b >= 1]
    gamma = profile.gamma
    total = 0
    for picks in product((0, 1), repeat=fact.prime_count):
        if sum(picks[i] for i in support) > 1:
            continue
        term = 1
        for i, a in enumerate(picks):
            if a:
                term *= fact.primes[i] ** gamma[i] - 1
        total += term
    return total


def degree_cyclic(n: int, x: GroupElement) -> int:
    """Degree of a composite-order vertex of the prime coprime graph of Z_n.

    Identity and prime-order elements are rejected here; they are dominating
    vertices of degree n - 1 and theta_degree handles them.
    """
    group = cyclic(n)
    d = element_order(group, x)
    if not _is_composite(d):
        raise ValueError(
            f"{x} has order {d}; only composite orders have a nontrivial form"
        )
    return _composite_degree(factorize(n), d)


def degree_dihedral(n: int, x: GroupElement) -> int:
    """Degree of any vertex of the prime coprime graph of D_n."""
    group = dihedral(n)
    d = element_order(group, x)
    if not _is_composite(d):
        return 2 * n - 1
    return n + _composite_degree(factorize(n), d)


def degree_dicyclic(n: int, x: GroupElement) -> int:
    """Degree of any vertex of the prime coprime graph of Q_n.

    Composite orders divisible by 4 keep the plain cyclic expansion over
    Z_2n; other composite orders gain the 2n vertices outside the cyclic
    part.  For odd n the outside vertices themselves see exactly the 2n
    vertices of the cyclic part.
    """
    group = dicyclic(n)
    d = element_order(group, x)
    if not _is_composite(d):
        return 4 * n - 1
    if x.kind == "ab" and n % 2 == 1:
        return 2 * n
    if d % 4 == 0:
        return _composite_degree(factorize(2 * n), d)
    return 2 * n + _composite_degree(factorize(2 * n), d)


def theta_degree(group: GroupSpec, x: GroupElement) -> int:
    """Degree of any vertex, any family; dominating vertices give |G| - 1."""
    if group.family is Family.CYCLIC:
        d = element_order(group, x)
        if not _is_composite(d):
            return group.order - 1
        return degree_cyclic(group.n, x)
    if group.family is Family.DIHEDRAL:
        return degree_dihedral(group.n, x)
    return degree_dicyclic(group.n, x)


# ---------------------------------------------------------------------------
# Hamiltonicity
# ---------------------------------------------------------------------------


def is_hamiltonian_cyclic(n: int) -> bool:
    """True iff the prime coprime graph of Z_n has a Hamiltonian cycle:
    exactly n = 4, n an odd prime, or n twice an odd prime."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 4:
        return True
    if n % 2 == 1 and is_prime(n):
        return True
    half = n // 2
    return n % 2 == 0 and half % 2 == 1 and is_prime(half)


def is_hamiltonian_dihedral(n: int) -> bool:
    """Always true for n >= 3: minimum degree n + 1 beats half of 2n."""
    if n < 3:
        raise ValueError(f"dihedral groups need n >= 3, got {n}")
    return True


def is_hamiltonian_dicyclic(n: int) -> bool:
    """True iff n is odd."""
    if n < 2:
        raise ValueError(f"dicyclic groups need n >= 2, got {n}")
    return n % 2 == 1


# ---------------------------------------------------------------------------
# decomposition catalog
# ---------------------------------------------------------------------------

# pattern graphs, part 0 = the clique part; edges (i, j) say which parts see
# each other completely
_CD_PATTERNS: dict[str, tuple[tuple[tuple[int, int], ...], tuple[int, int]]] = {
    "p": ((), (0, 1)),
    "pq": (((0, 1),), (1, 1)),
    "p^m": (((0, 1),), (1, 1)),
    "pq^m": (((0, 1), (0, 2), (0, 3), (1, 2)), (3, 1)),
    "p^lq^m": (
        ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6),
         (1, 2), (1, 3), (1, 5), (2, 3), (2, 4)),
        (6, 1),
    ),
    "pqr": (
        ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3)),
        (4, 1),
    ),
}

_DIC_PATTERNS: dict[str, tuple[tuple[tuple[int, int], ...], tuple[int, int]]] = {
    "p": (((0, 1), (0, 2), (1, 2)), (2, 1)),
    "2p": (((0, 1), (0, 2), (0, 3), (1, 3)), (3, 1)),
    "pq": (
        ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
         (1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (3, 5), (4, 5)),
        (5, 1),
    ),
    "2^m": (((0, 1),), (1, 1)),
    "p^m": (
        ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)),
        (4, 1),
    ),
}


@dataclass(frozen=True)
class DecompositionEntry:
    """One catalog hit: the matched pattern, its primes and exponents in role
    order, the H-join layout, and the (k, l)-partition counts."""

    family: Family
    n: int
    pattern: str
    primes: tuple[int, ...]
    exponents: tuple[int, ...]
    hjoin: HJoinSpec
    kl: tuple[int, int]


def _parts(sizes: list[tuple[PartKind, int]]) -> tuple[HJoinPart, ...]:
    return tuple(HJoinPart(kind, size) for kind, size in sizes)


def _cd_part_sizes(
    pattern: str, primes: tuple[int, ...], exponents: tuple[int, ...]
) -> list[int]:
    """Independent-set part sizes for cyclic groups; the clique part comes
    first and dihedral groups add n reflections to it."""
    if pattern == "p":
        (p,) = primes
        return [p]
    if pattern == "pq":
        p, q = primes
        return [p + q - 1, (p - 1) * (q - 1)]
    if pattern == "p^m":
        (p,) = primes
        (m,) = exponents
        return [p, p**m - p]
    if pattern == "pq^m":
        p, q = primes
        m = exponents[1]
        return [
            p + q - 1,
            q**m - q,
            (p - 1) * (q - 1),
            (p - 1) * (q**m - q),
        ]
    if pattern == "p^lq^m":
        p, q = primes
        l, m = exponents
        pl, qm = p**l - p, q**m - q
        return [
            p + q - 1,
            pl,
            qm,
            (p - 1) * (q - 1),
            pl * (q - 1),
            qm * (p - 1),
            pl * qm,
        ]
    if pattern == "pqr":
        p, q, r = primes
        return [
            p + q + r - 2,
            (p - 1) * (q - 1),
            (q - 1) * (r - 1),
            (p - 1) * (r - 1),
            (p - 1) * (q - 1) * (r - 1),
        ]
    raise AssertionError(f"unknown pattern {pattern}")


def _dic_part_sizes(
    pattern: str, n: int, primes: tuple[int, ...], exponents: tuple[int, ...]
) -> list[int]:
    if pattern == "p":
        p = primes[0]
        return [p + 1, p - 1, 2 * p]
    if pattern == "2p":
        p = primes[1]
        return [p + 1, p - 1, 2 * p - 2, 4 * p + 2]
    if pattern == "pq":
        p, q = primes
        pq1 = (p - 1) * (q - 1)
        return [p + q, p - 1, q - 1, pq1, pq1, 2 * p * q]
    if pattern == "2^m":
        return [2, 4 * n - 2]
    if pattern == "p^m":
        p = primes[0]
        return [p + 1, p - 1, n - p, n - p, 2 * n]
    raise AssertionError(f"unknown pattern {pattern}")


def _match_squarefree_or_power(f: Factorization) -> tuple[str, tuple, tuple] | None:
    """Shape matching shared by cyclic and dihedral parameters."""
    k = f.prime_count
    if k == 1:
        p = f.primes[0]
        e = f.exponents[0]
        return ("p", (p,), (1,)) if e == 1 else ("p^m", (p,), (e,))
    if k == 2:
        (p1, p2), (e1, e2) = f.primes, f.exponents
        if e1 == 1 and e2 == 1:
            return "pq", (p1, p2), (1, 1)
        if e1 == 1 and e2 >= 2:
            return "pq^m", (p1, p2), (1, e2)
        if e2 == 1 and e1 >= 2:
            return "pq^m", (p2, p1), (1, e1)
        # both exponents >= 2; roles are symmetric, keep primes ascending
        return "p^lq^m", (p1, p2), (e1, e2)
    if k == 3 and all(e == 1 for e in f.exponents):
        return "pqr", f.primes, (1, 1, 1)
    return None


def _match_dicyclic(n: int) -> tuple[str, tuple, tuple] | None:
    f = factorize(n)
    k = f.prime_count
    if k == 1 and f.primes[0] == 2:
        return "2^m", (2,), (f.exponents[0],)
    if k == 1:
        p = f.primes[0]
        e = f.exponents[0]
        return ("p", (p,), (1,)) if e == 1 else ("p^m", (p,), (e,))
    if k == 2 and f.primes[0] == 2 and f.exponents[0] == 1 and f.exponents[1] == 1:
        return "2p", (2, f.primes[1]), (1, 1)
    if k == 2 and f.primes[0] != 2 and f.exponents == (1, 1):
        return "pq", f.primes, (1, 1)
    return None


def decomposition_catalog(family: Family, n: int) -> DecompositionEntry | None:
    """Catalog lookup; None means the parameter shape is not covered."""
    GroupSpec(family, n)  # validate the family range
    if family in (Family.CYCLIC, Family.DIHEDRAL):
        if n == 1:
            return None
        match = _match_squarefree_or_power(factorize(n))
        if match is None:
            return None
        pattern, primes, exponents = match
        sizes = _cd_part_sizes(pattern, primes, exponents)
        if family is Family.DIHEDRAL:
            sizes[0] += n
        edges, kl = _CD_PATTERNS[pattern]
    else:
        match = _match_dicyclic(n)
        if match is None:
            return None
        pattern, primes, exponents = match
        sizes = _dic_part_sizes(pattern, n, primes, exponents)
        edges, kl = _DIC_PATTERNS[pattern]
    kinds = [PartKind.COMPLETE] + [PartKind.EMPTY] * (len(sizes) - 1)
    spec = HJoinSpec(
        from_edges(len(sizes), edges),
        _parts(list(zip(kinds, sizes))),
    )
    if spec.total_size != GroupSpec(family, n).order:
        raise AssertionError(f"part sizes are off for {family.value} n={n}")
    return DecompositionEntry(family, n, pattern, primes, exponents, spec, kl)


def _cd_part_of(pattern: str, primes: tuple[int, ...], d: int) -> int:
    """Part index of an order-d element for cyclic and dihedral patterns."""
    if d == 1 or is_prime(d):
        return 0
    if pattern in ("pq", "p^m"):
        return 1
    if pattern == "pq^m":
        p, q = primes
        if d == p * q:
            return 2
        return 3 if d % p == 0 else 1
    if pattern == "p^lq^m":
        p, q = primes
        vp = 0
        while d % p == 0:
            d //= p
            vp += 1
        vq = 0
        while d % q == 0:
            d //= q
            vq += 1
        if vq == 0:
            return 1
        if vp == 0:
            return 2
        if vp == 1 and vq == 1:
            return 3
        if vp >= 2 and vq == 1:
            return 4
        if vp == 1 and vq >= 2:
            return 5
        return 6
    if pattern == "pqr":
        p, q, r = primes
        if d == p * q:
            return 1
        if d == q * r:
            return 2
        if d == p * r:
            return 3
        return 4
    raise AssertionError(f"unknown pattern {pattern}")


def _dic_part_of(pattern: str, primes: tuple[int, ...], outside: bool, d: int) -> int:
    """Part index of an order-d element for dicyclic patterns; outside flags
    the 2n elements outside the cyclic part (all of order 4)."""
    if pattern == "2^m":
        return 0 if d <= 2 else 1
    if d == 1 or is_prime(d):
        return 0
    if pattern == "p":
        return 2 if outside else 1
    if pattern == "2p":
        p = primes[1]
        if d == 2 * p:
            return 1
        if d == 4 * p:
            return 2
        return 3  # order 4, inside or outside
    if pattern == "pq":
        if outside:
            return 5
        p, q = primes
        if d == 2 * p:
            return 1
        if d == 2 * q:
            return 2
        if d == p * q:
            return 3
        return 4  # order 2pq
    if pattern == "p^m":
        if outside:
            return 4
        p = primes[0]
        if d == 2 * p:
            return 1
        return 2 if d % 2 == 1 else 3
    raise AssertionError(f"unknown pattern {pattern}")


def catalog_partition(entry: DecompositionEntry) -> tuple[tuple[int, ...], ...]:
    """Vertex partition of build_theta(GroupSpec(entry.family, entry.n)) that
    realizes entry.hjoin, parts aligned with entry.hjoin.parts."""
    group = GroupSpec(entry.family, entry.n)
    orders = element_orders(group)
    buckets: list[list[int]] = [[] for _ in entry.hjoin.parts]
    if entry.family is Family.DICYCLIC:
        inside = 2 * entry.n
        for v, d in enumerate(orders):
            buckets[_dic_part_of(entry.pattern, entry.primes, v >= inside, d)].append(v)
    else:
        for v, d in enumerate(orders):
            buckets[_cd_part_of(entry.pattern, entry.primes, d)].append(v)
    for bucket, part in zip(buckets, entry.hjoin.parts):
        if len(bucket) != part.size:
            raise AssertionError(
                f"bucket size {len(bucket)} != spec size {part.size} for {entry}"
            )
    return tuple(tuple(b) for b in buckets)
