import pytest

from groups.constructions import (
    are_permutation_isomorphic, coset_action, direct_sum, fixed_points, parallel_multiple, parallel_sum,
    same_group, strip_fixed_points, trivial_group, validate_isomorphism,
)
from groups.families import (
    alternating_group, projective_line_group, projective_linear_group, projective_points, symmetric_group,
)
from groups.fields import finite_field
from groups.perm_group import PermutationGroup
from groups.permutation import Permutation
from models.group_models import IsomorphismSpec
from utils.errors import BudgetExceededError, ConstructionError, DegreeMismatchError, IsomorphismSpecError


def test_symmetric_and_alternating_orders():
    assert symmetric_group(5).order() == 120
    assert alternating_group(5).order() == 60
    assert alternating_group(6).order() == 360
    assert alternating_group(7).order() == 2520


def test_membership():
    A5 = alternating_group(5)
    assert A5.contains(Permutation.parse("(0 1 2)", 5))
    assert A5.contains(Permutation.parse("(0 1)(2 3)", 5))
    assert not A5.contains(Permutation.parse("(0 1)", 5))
    with pytest.raises(DegreeMismatchError):
        A5.contains(Permutation.identity(6))


def test_membership_agrees_with_enumeration():
    G = PermutationGroup([Permutation.parse("(0 1 2 3)", 4), Permutation.parse("(0 2)", 4)])
    elements = G.elements()
    assert len(elements) == G.order() == 8
    for g in symmetric_group(4).elements():
        assert G.contains(Permutation(g)) == (g in elements)


def test_elements_budget():
    with pytest.raises(BudgetExceededError):
        symmetric_group(6).elements(budget=100)


def test_orbits_and_transitivity():
    G = direct_sum(alternating_group(5), trivial_group(2))
    assert G.orbits() == [[0, 1, 2, 3, 4], [5], [6]]
    assert not G.is_transitive()
    assert fixed_points(G) == [5, 6]
    assert alternating_group(5).is_2_transitive()
    cyclic = PermutationGroup([Permutation.parse("(0 1 2 3 4)", 5)])
    assert cyclic.is_transitive() and not cyclic.is_2_transitive()


def test_group_without_generators_needs_degree():
    with pytest.raises(ConstructionError):
        PermutationGroup([])
    assert trivial_group(3).order() == 1


@pytest.mark.parametrize("q, order", [(5, 60), (7, 168), (8, 504), (9, 360), (11, 660)])
def test_projective_line_groups(q, order):
    G = projective_line_group(q)
    assert G.degree == q + 1
    assert G.order() == order
    assert G.is_2_transitive()


def test_projective_linear_groups():
    assert len(projective_points(3, 2)) == 7
    L32 = projective_linear_group(3, 2)
    assert (L32.degree, L32.order()) == (7, 168)
    L33 = projective_linear_group(3, 3)
    assert (L33.degree, L33.order()) == (13, 5616)


def test_finite_field_tables():
    F = finite_field(9)
    assert F.q == 9 and F.p == 3
    for a in range(1, 9):
        assert F.mul[a][F.inv[a]] == 1
    assert F.power(F.primitive, 8) == 1
    assert all(F.power(F.primitive, e) != 1 for e in range(1, 8))
    with pytest.raises(ConstructionError):
        finite_field(6)


def test_direct_and_parallel_sums():
    A5 = alternating_group(5)
    assert direct_sum(A5, A5).order() == 3600
    P = parallel_multiple(A5, 3)
    assert (P.degree, P.order()) == (15, 60)
    assert P.orbits() == [list(range(0, 5)), list(range(5, 10)), list(range(10, 15))]
    with pytest.raises(ConstructionError):
        parallel_multiple(A5, 0)


def test_strip_fixed_points():
    G0, k, moved = strip_fixed_points(direct_sum(trivial_group(2), alternating_group(5)))
    assert k == 2
    assert moved == [2, 3, 4, 5, 6]
    assert G0.order() == 60 and G0.degree == 5
    none, k, moved = strip_fixed_points(trivial_group(4))
    assert none is None and k == 4 and moved == []


def test_same_group():
    A5 = alternating_group(5)
    other = PermutationGroup([Permutation.parse("(0 1 2)", 5), Permutation.parse("(2 3 4)", 5)])
    assert same_group(A5, other)
    assert not same_group(A5, symmetric_group(5))


def test_permutation_isomorphism():
    A5 = alternating_group(5)
    relabelled = PermutationGroup([g.relabel([4, 2, 0, 1, 3]) for g in A5.generators])
    assert are_permutation_isomorphic(A5, relabelled)
    # A5 on 6 points (L2(5)) is not a relabelling of A5 plus a fixed point
    assert not are_permutation_isomorphic(projective_line_group(5), direct_sum(A5, trivial_group(1)))


def test_validate_isomorphism_rejects_bad_images():
    A5 = alternating_group(5)
    spec = IsomorphismSpec(source=A5, target=A5, generator_images=(A5.generators[0],))
    with pytest.raises(IsomorphismSpecError):
        validate_isomorphism(spec)
    identity = IsomorphismSpec(source=A5, target=A5, generator_images=A5.generators)
    assert validate_isomorphism(identity).verified


def test_coset_action_on_point_stabilizer_is_natural_action():
    A5 = alternating_group(5)
    G = coset_action(A5, A5.stabilizer(0))
    assert G.degree == 5
    assert G.order() == 60
    assert are_permutation_isomorphic(G, A5)


def s3_copies():
    G = symmetric_group(3)
    H = PermutationGroup([Permutation.parse("(0 2)", 3), Permutation.parse("(0 2 1)", 3)])
    K = PermutationGroup([Permutation.parse("(1 2)", 3), Permutation.parse("(0 2 1)", 3)])
    return G, H, K


def linked(source: PermutationGroup, target: PermutationGroup) -> IsomorphismSpec:
    """source and target generators correspond in order"""
    return IsomorphismSpec(source=source, target=target, generator_images=target.generators)


def test_direct_sum_commutes_and_associates():
    A, B, C = symmetric_group(3), PermutationGroup([Permutation.parse("(0 1 2 3)", 4)]), alternating_group(4)
    assert are_permutation_isomorphic(direct_sum(A, B), direct_sum(B, A))
    left = direct_sum(direct_sum(A, B), C)
    right = direct_sum(A, direct_sum(B, C))
    assert left.order() == 6 * 4 * 12
    assert are_permutation_isomorphic(left, right)


def test_parallel_sum_commutes_and_associates():
    G, H, K = s3_copies()
    GH = parallel_sum(linked(G, H))
    HG = parallel_sum(linked(H, G))
    assert (GH.degree, GH.order()) == (6, 6)
    assert are_permutation_isomorphic(GH, HG)
    left = parallel_sum(linked(GH, K))
    right = parallel_sum(linked(G, parallel_sum(linked(H, K))))
    assert (left.degree, left.order()) == (9, 6)
    assert are_permutation_isomorphic(left, right)
    assert are_permutation_isomorphic(left, parallel_multiple(G, 3))
