"""Cyclic, dihedral and dicyclic groups as labelled element families.

Element orders come from the standard closed forms (order of a power of a
generator, involutions outside the rotation part, and so on); no
multiplication tables are built here.  The canonical element listing fixes
the vertex order used everywhere else:

  cyclic    Z_n  g0 .. g(n-1)
  dihedral  D_n  r0 .. r(n-1), s0 .. s(n-1)
  dicyclic  Q_n  a0 .. a(2n-1), a0b .. a(2n-1)b
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .numtheory import is_prime

__all__ = [
    "Family",
    "GroupElement",
    "GroupSpec",
    "cyclic",
    "dihedral",
    "dicyclic",
    "parse_element",
    "elements",
    "element_index",
    "element_order",
    "element_orders",
    "order_class_counts",
    "s_set",
    "t_set",
    "s_indices",
    "is_epo",
]


class Family(Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    DICYCLIC = "dicyclic"


# kind -> family that owns it
_KIND_FAMILY = {
    "g": Family.CYCLIC,
    "r": Family.DIHEDRAL,
    "s": Family.DIHEDRAL,
    "a": Family.DICYCLIC,
    "ab": Family.DICYCLIC,
}

_ELEMENT_RE = re.compile(r"^(?:([grs])(\d+)|a(\d+)(b?))$")


@dataclass(frozen=True, order=True)
class GroupElement:
    """A labelled element: kind is one of g, r, s, a, ab."""

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in _KIND_FAMILY:
            raise ValueError(f"unknown element kind {self.kind!r}")
        if self.index < 0:
            raise ValueError(f"element index must be >= 0, got {self.index}")

    def text(self) -> str:
        """Canonical text form, e.g. g5, r2, s0, a7, a3b."""
        if self.kind == "ab":
            return f"a{self.index}b"
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.text()


def parse_element(text: str) -> GroupElement:
    """Parse a canonical element label such as g5, r2, s0, a7 or a3b."""
    m = _ELEMENT_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse element label {text!r}")
    if m.group(1) is not None:
        return GroupElement(m.group(1), int(m.group(2)))
    kind = "ab" if m.group(4) else "a"
    return GroupElement(kind, int(m.group(3)))


@dataclass(frozen=True)
class GroupSpec:
    """One finite group out of the three supported families."""

    family: Family
    n: int

    def __post_init__(self) -> None:
        if self.family is Family.CYCLIC and self.n < 1:
            raise ValueError(f"cyclic groups need n >= 1, got {self.n}")
        if self.family is Family.DIHEDRAL and self.n < 3:
            raise ValueError(f"dihedral groups need n >= 3, got {self.n}")
        if self.family is Family.DICYCLIC and self.n < 2:
            raise ValueError(f"dicyclic groups need n >= 2, got {self.n}")

    @property
    def order(self) -> int:
        if self.family is Family.CYCLIC:
            return self.n
        if self.family is Family.DIHEDRAL:
            return 2 * self.n
        return 4 * self.n

    def __str__(self) -> str:
        return f"{self.family.value}(n={self.n})"


def cyclic(n: int) -> GroupSpec:
    return GroupSpec(Family.CYCLIC, n)


def dihedral(n: int) -> GroupSpec:
    return GroupSpec(Family.DIHEDRAL, n)


def dicyclic(n: int) -> GroupSpec:
    return GroupSpec(Family.DICYCLIC, n)


def elements(group: GroupSpec) -> list[GroupElement]:
    """All elements in canonical order (see module docstring)."""
    n = group.n
    if group.family is Family.CYCLIC:
        return [GroupElement("g", i) for i in range(n)]
    if group.family is Family.DIHEDRAL:
        return [GroupElement("r", i) for i in range(n)] + [
            GroupElement("s", i) for i in range(n)
        ]
    return [GroupElement("a", i) for i in range(2 * n)] + [
        GroupElement("ab", i) for i in range(2 * n)
    ]


def _check_membership(group: GroupSpec, element: GroupElement) -> None:
    if _KIND_FAMILY[element.kind] is not group.family:
        raise ValueError(f"element {element} does not belong to a {group.family.value} group")
    if group.family is Family.CYCLIC:
        limit = group.n
    elif group.family is Family.DIHEDRAL:
        limit = group.n
    else:
        limit = 2 * group.n
    if element.index >= limit:
        raise ValueError(f"element {element} out of range for {group}")


def element_index(group: GroupSpec, element: GroupElement) -> int:
    """Position of the element in the canonical listing."""
    _check_membership(group, element)
    if element.kind in ("g", "r", "a"):
        return element.index
    if element.kind == "s":
        return group.n + element.index
    return 2 * group.n + element.index


def element_order(group: GroupSpec, element: GroupElement) -> int:
    """Order of the element, by closed form."""
    _check_membership(group, element)
    n = group.n
    if element.kind == "g":
        return n // math.gcd(n, element.index)
    if element.kind == "r":
        return n // math.gcd(n, element.index)
    if element.kind == "s":
        return 2
    if element.kind == "a":
        return 2 * n // math.gcd(2 * n, element.index)
    return 4  # every element outside the cyclic part of a dicyclic group


def element_orders(group: GroupSpec) -> list[int]:
    """Orders of all elements, aligned with the canonical listing."""
    return [element_order(group, e) for e in elements(group)]


def order_class_counts(group: GroupSpec) -> dict[int, int]:
    """Map order d -> number of elements of order d."""
    return dict(Counter(element_orders(group)))


def _is_one_or_prime(d: int) -> bool:
    return d == 1 or is_prime(d)


def s_set(group: GroupSpec) -> set[GroupElement]:
    """Elements whose order is 1 or a prime."""
    return {
        e for e in elements(group) if _is_one_or_prime(element_order(group, e))
    }


def t_set(group: GroupSpec) -> set[GroupElement]:
    """Elements of composite order (the complement of s_set)."""
    return {
        e for e in elements(group) if not _is_one_or_prime(element_order(group, e))
    }


def s_indices(group: GroupSpec) -> tuple[int, ...]:
    """Canonical indices of the s_set elements, ascending."""
    return tuple(
        i for i, d in enumerate(element_orders(group)) if _is_one_or_prime(d)
    )


def is_epo(group: GroupSpec) -> bool:
    """True iff every element has order 1 or prime."""
    return all(_is_one_or_prime(d) for d in set(element_orders(group)))
