"""Group families: labelling, orders against multiplication, order classes."""

import pytest
from hypothesis import given, strategies as st

from primecoprime.groups import (
    Family,
    GroupElement,
    GroupSpec,
    cyclic,
    dicyclic,
    dihedral,
    element_index,
    element_order,
    element_orders,
    elements,
    is_epo,
    order_class_counts,
    parse_element,
    s_indices,
    s_set,
    t_set,
)
from conftest import naive_element_order


def test_group_spec_validation():
    with pytest.raises(ValueError):
        cyclic(0)
    with pytest.raises(ValueError):
        dihedral(2)
    with pytest.raises(ValueError):
        dicyclic(1)
    assert cyclic(1).order == 1
    assert dihedral(3).order == 6
    assert dicyclic(2).order == 8


def test_element_parsing_round_trip():
    for text in ("g0", "g15", "r2", "s0", "a7", "a3b"):
        assert parse_element(text).text() == text
    for bad in ("", "g", "x3", "ab", "a3bb", "r-1", "3g"):
        with pytest.raises(ValueError):
            parse_element(bad)


def test_canonical_listing():
    assert [e.text() for e in elements(cyclic(3))] == ["g0", "g1", "g2"]
    assert [e.text() for e in elements(dihedral(3))] == [
        "r0", "r1", "r2", "s0", "s1", "s2"
    ]
    labels = [e.text() for e in elements(dicyclic(2))]
    assert labels == ["a0", "a1", "a2", "a3", "a0b", "a1b", "a2b", "a3b"]


def test_element_index_matches_listing():
    for group in (cyclic(7), dihedral(5), dicyclic(4)):
        for i, e in enumerate(elements(group)):
            assert element_index(group, e) == i


def test_membership_validation():
    with pytest.raises(ValueError):
        element_order(cyclic(5), GroupElement("r", 0))
    with pytest.raises(ValueError):
        element_order(cyclic(5), GroupElement("g", 5))
    with pytest.raises(ValueError):
        element_index(dicyclic(3), GroupElement("a", 6))


@pytest.mark.parametrize(
    "group",
    [cyclic(n) for n in range(1, 31)]
    + [dihedral(n) for n in range(3, 16)]
    + [dicyclic(n) for n in range(2, 13)],
    ids=str,
)
def test_orders_match_multiplication(group):
    for e in elements(group):
        assert element_order(group, e) == naive_element_order(group, e)


def test_order_class_counts_z12():
    assert order_class_counts(cyclic(12)) == {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4}


def test_dihedral_reflections_all_order_two():
    counts = order_class_counts(dihedral(9))
    assert counts[2] == 9  # the reflections; 9 is odd so no rotation joins them


def test_dicyclic_outside_elements():
    group = dicyclic(6)
    orders = element_orders(group)
    assert orders[12:] == [4] * 12  # everything outside the cyclic part
    # unique involution inside the cyclic part sits at a^n
    assert [i for i in range(12) if orders[i] == 2] == [6]


def test_s_set_examples():
    assert {e.text() for e in s_set(cyclic(4))} == {"g0", "g2"}
    assert s_indices(cyclic(4)) == (0, 2)
    assert {e.text() for e in t_set(cyclic(4))} == {"g1", "g3"}
    # dicyclic: the s elements all live inside the cyclic part
    assert all(e.kind == "a" for e in s_set(dicyclic(5)))


def test_is_epo_examples():
    assert is_epo(cyclic(5))
    assert not is_epo(cyclic(6))  # an element of order 6
    assert is_epo(dihedral(7))
    assert not is_epo(dihedral(8))
    assert not is_epo(dicyclic(2))  # order 4 elements
    assert not is_epo(dicyclic(3))  # order 6 inside the cyclic part


@given(st.sampled_from([Family.CYCLIC, Family.DIHEDRAL, Family.DICYCLIC]),
       st.integers(min_value=3, max_value=40))
def test_lagrange(family, n):
    group = GroupSpec(family, n)
    for d in set(element_orders(group)):
        assert group.order % d == 0
