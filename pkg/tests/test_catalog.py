import pytest

from distinguish.predicted import predicted_distinguishing_number, predicted_for_name
from groups.catalog import NamedGroupCatalog, alternating_distinguishing_number, default_catalog, exceptional_automorphism_a6
from groups.constructions import are_permutation_isomorphic, validate_isomorphism
from groups.subgroups import is_simple
from utils.errors import CatalogError


@pytest.fixture(scope="module")
def catalog() -> NamedGroupCatalog:
    return default_catalog()


def test_catalog_lists_named_groups(catalog):
    names = catalog.names()
    for name in ("L2(5)", "L2(7)", "L3(2)", "M11", "M24", "A6||A6"):
        assert name in names


@pytest.mark.parametrize("name, degree, order", [
    ("L2(5)", 6, 60), ("L2(7)", 8, 168), ("L2(8)", 9, 504), ("A6on10", 10, 360),
    ("L2(11)", 12, 660), ("L2(11)on11", 11, 660), ("L3(2)", 7, 168), ("A6||A6", 12, 360),
])
def test_catalog_groups_match_documented_orders(catalog, name, degree, order):
    G = catalog.group(name)
    assert (G.degree, G.order()) == (degree, order)
    assert G.name == name


@pytest.mark.slow
@pytest.mark.parametrize("name", ["M11", "M11on12", "L3(3)", "A8on15", "M12"])
def test_large_catalog_orders(catalog, name):
    entry = catalog.entry(name)
    G = catalog.group(name)
    assert (G.degree, G.order()) == (entry.degree, entry.order)


def test_parametric_names(catalog):
    A5 = catalog.group("A5")
    assert (A5.degree, A5.order()) == (5, 60)
    A52 = catalog.group("A5^(2)")
    assert (A52.degree, A52.order()) == (10, 60)
    assert catalog.entry("S6").d_value == 6
    assert catalog.group("I_3").order() == 1


@pytest.mark.parametrize("name, order", [("S1", 1), ("S2", 2), ("S6", 720), ("A2", 1), ("A3", 3), ("A7", 2520), ("A5^(3)", 60)])
def test_parametric_entry_orders(catalog, name, order):
    entry = catalog.entry(name)
    assert entry.order == order
    if entry.order <= 2520:
        assert catalog.group(name).order() == order


def test_unknown_name(catalog):
    with pytest.raises(CatalogError):
        catalog.entry("Foo(3)")


def test_named_groups_are_simple(catalog):
    for name in ("A5", "L2(7)", "L2(8)", "A6on10", "L3(2)", "A6||A6"):
        assert is_simple(catalog.group(name)), name


def test_mathieu_d_values_unverified(catalog):
    for name in ("M22", "M23", "M24"):
        assert not catalog.entry(name).d_verified


def test_exceptional_automorphism_changes_cycle_type():
    spec, witness = exceptional_automorphism_a6()
    assert validate_isomorphism(spec).verified
    image = spec.generator_images[0]
    assert witness.cycle_type() == (3, 1, 1, 1)
    assert image.cycle_type() == (3, 3)
    # the two actions of A6 on six points are not relabellings of each other's elements,
    # but the images still form a copy of A6 on six points
    assert spec.target.order() == 360 and spec.target.degree == 6


def test_parallel_sum_is_not_a_parallel_multiple(catalog):
    G = catalog.group("A6||A6")
    assert not are_permutation_isomorphic(G, catalog.group("A6^(2)"))


@pytest.mark.parametrize("n, k, expected", [(5, 1, 4), (6, 1, 5), (5, 2, 2), (6, 2, 3), (10, 2, 3), (5, 3, 2)])
def test_alternating_prediction(n, k, expected):
    assert alternating_distinguishing_number(n, k) == expected
    assert predicted_distinguishing_number("alternating", n, k) == expected


@pytest.mark.parametrize("name, expected", [
    ("L3(2)", 4), ("M11", 4), ("M12", 4), ("L2(5)", 3), ("L2(7)", 3), ("L2(8)", 3),
    ("M24", 3), ("A6||A6", 3), ("L2(11)", 2), ("A7", 6), ("S5", 5), ("I_4", 1),
])
def test_predicted_for_name(name, expected):
    assert predicted_for_name(name) == expected


def test_unclassified_family():
    with pytest.raises(ValueError):
        predicted_distinguishing_number("sporadic")
    with pytest.raises(ValueError):
        predicted_distinguishing_number("alternating", 4)
