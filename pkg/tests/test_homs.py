import pytest

from wreathhom import (
    AbelianGroup,
    builtin_group,
    group_from_permutations,
    hom_count_abelian,
    hom_group,
    index_two_subgroup_count,
)
from wreathhom.homs import abelian_homs, is_homomorphism
from oracles import brute_hom_count_abelian

BUILTINS = ["C1", "C2", "C3", "C4", "V4", "S3", "D4", "Q8"]
COEFFS = [AbelianGroup((2,)), AbelianGroup((3,)), AbelianGroup((2, 2))]


def test_hom_count_examples():
    assert hom_count_abelian(AbelianGroup((4,)), AbelianGroup((2,))) == 2
    assert hom_count_abelian(AbelianGroup((2, 2)), AbelianGroup((2,))) == 4
    assert hom_count_abelian(AbelianGroup((6,)), AbelianGroup((6,))) == 6


@pytest.mark.parametrize(
    "source,coeffs",
    [
        ((2,), (2,)),
        ((4,), (2,)),
        ((6,), (6,)),
        ((2, 4), (2, 2)),
        ((3,), (2, 6)),
        ((2, 2, 2), (4,)),
        ((), (2,)),
        ((5,), ()),
    ],
)
def test_hom_count_vs_brute(source, coeffs):
    b, a = AbelianGroup(source), AbelianGroup(coeffs)
    assert hom_count_abelian(b, a) == brute_hom_count_abelian(b, a)
    assert len(abelian_homs(b, a)) == hom_count_abelian(b, a)


def test_hom_group_sizes():
    assert hom_group(builtin_group("S3"), AbelianGroup((2,))).size == 2
    assert hom_group(builtin_group("V4"), AbelianGroup((2,))).size == 4
    assert hom_group(builtin_group("C3"), AbelianGroup((2,))).size == 1


def test_hom_group_trivial_first_and_sorted():
    hg = hom_group(builtin_group("V4"), AbelianGroup((2,)))
    assert hg.elements[0].is_trivial()
    values = [h.values for h in hg.elements]
    assert values == sorted(values)


@pytest.mark.parametrize("name", BUILTINS)
@pytest.mark.parametrize("coeffs", COEFFS, ids=str)
def test_hom_group_elements_are_homomorphisms(name, coeffs):
    g = builtin_group(name)
    hg = hom_group(g, coeffs)
    for h in hg.elements:
        assert is_homomorphism(g, coeffs, h)
    # closed under pointwise addition, with 0 the neutral element
    for i in range(hg.size):
        assert hg.add(0, i) == i
        assert hg.add(i, hg.neg(i)) == 0
        for j in range(hg.size):
            assert hg.add(i, j) == hg.add(j, i)


@pytest.mark.parametrize(
    "group",
    [builtin_group(n) for n in BUILTINS]
    + [group_from_permutations([(1, 2, 0, 3), (1, 0, 3, 2)], name="A4")],
)
def test_index_two_identity(group):
    h = hom_group(group, AbelianGroup((2,))).size
    assert h - 1 == index_two_subgroup_count(group)


def test_hom_json_vectors():
    a = AbelianGroup((2, 2))
    hg = hom_group(builtin_group("C2"), a)
    vecs = hg.elements[-1].to_json_vectors(a)
    assert len(vecs) == 2 and vecs[0] == [0, 0]
