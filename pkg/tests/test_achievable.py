import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcore.achievable import (
    achievable_family,
    build_atlas,
    check_interval_property,
    check_suffix_property,
    expected_top_collection,
    partition_violations,
    sub_partition_ok,
    top_collection,
)
from kcore.errors import DomainError, StructureError
from kcore.orders import SubsetOrder, binary_order, iter_orders, lexicographic_block_order
from kcore.setfn import card, parse_label, subsets_up_to


def _naive_family(order, b):
    """Direct reading of the definition over all subsets."""
    out = set()
    for A in range(1, 1 << order.n):
        if A & b != b:
            continue
        if all(order.rank[K] <= order.rank[b] for K in range(1, 1 << order.n)
               if K & A == K and card(K) <= order.k):
            out.add(A)
    return out


def test_binary_order_atlas_n3():
    atlas = build_atlas(binary_order(3, 2))
    assert {b: atlas[b].sorted_members() for b in atlas.order.sequence} == {
        1: [1], 2: [2], 3: [3], 4: [4], 5: [5], 6: [6, 7]}
    assert top_collection(atlas) == frozenset({1, 2, 3, 4, 5, 7})


def test_family_matches_definition_on_all_720():
    for order in iter_orders(3, 2, "all"):
        for b in order.sequence:
            assert set(achievable_family(order, b).members) == _naive_family(order, b)


@settings(max_examples=60, deadline=None)
@given(st.permutations(subsets_up_to(4, 2)))
def test_partition_and_meet_closure_n4(seq):
    order = SubsetOrder(4, 2, tuple(seq))
    atlas = build_atlas(order, strict=False)
    assert atlas.partition_ok
    assert partition_violations(order, atlas.families) == []
    for f in atlas.nonempty():
        assert f.b in f.members and all(A & f.b == f.b for A in f.members)
        for A in f.members:
            for B in f.members:
                assert A & B in f.members
        assert set(f.members) == _naive_family(order, f.b)


def test_subset_compatible_iff_no_empty_family():
    for order in iter_orders(3, 2, "all"):
        atlas = build_atlas(order)
        no_empty = not any(f.empty for f in atlas.families.values())
        subset_ok = all(order.precedes(A, B) for A in order.sequence for B in order.sequence
                        if A != B and A & B == A)
        assert no_empty == subset_ok


def test_singleton_centres_nonempty():
    for order in iter_orders(3, 2, "all"):
        for b in order.sequence:
            if card(b) == 1:
                assert not achievable_family(order, b).empty


def test_compatible_orders_give_intervals_and_suffixes():
    for order in iter_orders(3, 2, "compatible"):
        atlas = build_atlas(order)
        assert check_interval_property(atlas)
        for f in atlas.nonempty():
            assert check_suffix_property(order, f)
            assert sub_partition_ok(atlas, f)


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 2), (4, 3), (5, 2), (5, 3)])
def test_top_collection_closed_form(n, k):
    assert top_collection(lexicographic_block_order(n, k)) == expected_top_collection(n, k)
    assert top_collection(binary_order(n, k)) == expected_top_collection(n, k)
    perm = list(range(n, 0, -1))
    assert top_collection(lexicographic_block_order(n, k, perm)) == expected_top_collection(n, k, perm)


def test_top_collection_all_strong_n3():
    for order in iter_orders(3, 2, "strongly_compatible"):
        assert top_collection(order) == expected_top_collection(3, 2, order.singleton_order())


def test_k1_tops_form_a_maximal_chain():
    for order in iter_orders(3, 1, "all"):
        tops = sorted(top_collection(order), key=card)
        assert [card(t) for t in tops] == [1, 2, 3]
        assert all(a & b == a for a, b in zip(tops, tops[1:]))


def test_non_lattice_family():
    order = SubsetOrder.from_labels(4, 2, ["2", "3", "24", "12", "4", "13", "34", "1", "23", "14"])
    fam = achievable_family(order, parse_label("23"))
    assert fam.status == "non-lattice"
    assert fam.members == frozenset(parse_label(x) for x in ("23", "123", "234"))
    with pytest.raises(StructureError):
        top_collection(order)
    with pytest.raises(StructureError):
        check_suffix_property(order, fam)


def test_unknown_centre():
    with pytest.raises(DomainError):
        achievable_family(binary_order(3, 2), parse_label("123"))


def test_records():
    recs = build_atlas(binary_order(3, 2)).records()
    assert recs[-1] == {"center": "23", "members": ["23", "123"], "top": "123", "lattice": True, "empty": False}
