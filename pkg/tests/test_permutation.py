import pytest

from groups.permutation import Permutation, compose, compose_images, format_permutation_list, invert_images
from utils.errors import DegreeMismatchError, InvalidPermutationError


def test_parse_cycle_notation():
    p = Permutation.parse("(0 1 2)(3 4)", 5)
    assert p.images == (1, 2, 0, 4, 3)
    assert p.cycle_string() == "(0 1 2)(3 4)"


def test_parse_accepts_commas_and_pads_degree():
    p = Permutation.parse("(0,2)", 4)
    assert p.images == (2, 1, 0, 3)
    assert Permutation.parse("()", 3).is_identity()


@pytest.mark.parametrize("text", ["(0 1", "0 1)", "(a b)", "(0 0)"])
def test_parse_rejects_malformed(text):
    with pytest.raises(InvalidPermutationError):
        Permutation.parse(text, 3)


def test_images_must_be_bijection():
    with pytest.raises(InvalidPermutationError):
        Permutation([0, 0, 1])


def test_products_act_left_to_right():
    p = Permutation.parse("(0 1)", 3)
    q = Permutation.parse("(1 2)", 3)
    # 0 -> 1 under p, then 1 -> 2 under q
    assert (p * q).images == (2, 0, 1)
    assert compose(p, q) == p * q
    assert compose_images(p.images, q.images) == (2, 0, 1)


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_order_inverse_and_cycle_type():
    p = Permutation.parse("(0 1 2)(3 4)", 6)
    assert p.order() == 6
    assert p.cycle_type() == (3, 2, 1)
    assert (p * p.inverse()).is_identity()
    assert invert_images(p.images) == p.inverse().images
    assert p.power(6).is_identity()
    assert p.support() == (0, 1, 2, 3, 4)
    assert not p.is_even()


def test_conjugate_relabels_cycles():
    p = Permutation.parse("(0 1)", 3)
    by = Permutation.parse("(1 2)", 3)
    assert p.conjugate(by) == Permutation.parse("(0 2)", 3)


def test_shifted_embeds_into_larger_degree():
    p = Permutation.parse("(0 1)", 2)
    assert p.shifted(3, 5).images == (0, 1, 2, 4, 3)


def test_format_list():
    perms = [Permutation.parse("(0 1)", 3), Permutation.identity(3)]
    assert format_permutation_list(perms) == "(0 1), ()"
