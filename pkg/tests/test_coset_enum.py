from lefgroup.coset_enum import coset_enumerate
from lefgroup.presentations import presentation


def test_dihedral_order_six():
    p = presentation("x,y", "x^2", "y^2", "x y x y x y")
    result = coset_enumerate(p, max_cosets=100)
    assert result.conclusive and result.order == 6


def test_cyclic_five():
    p = presentation("x", "x^5")
    result = coset_enumerate(p, max_cosets=100)
    assert result.conclusive and result.order == 5


def test_free_abelian_inconclusive():
    p = presentation("a,b", "a b a^-1 b^-1")
    result = coset_enumerate(p, max_cosets=1000)
    assert not result.conclusive
    assert result.order is None


def test_trivial_group_with_coincidences():
    p = presentation("a,b", "a b", "a b^2")
    assert coset_enumerate(p, max_cosets=50).order == 1


def test_no_generators():
    assert coset_enumerate(presentation("")).order == 1


def test_quaternion_order_eight():
    p = presentation("a,b", "a^4", "a^2 b^-2", "b^-1 a b a")
    assert coset_enumerate(p, max_cosets=200).order == 8


def test_tetrahedral_order_twelve():
    p = presentation("a,b", "a^2", "b^3", "a b a b a b")
    assert coset_enumerate(p, max_cosets=200).order == 12


def test_symmetric_four_two_generator_form():
    # x = (1 2), y = (1 2 3 4) style presentation on two generators
    p = presentation(
        "x,y",
        "x y x y^-1 x y x^-1 y^-1 x^-1 y x^-1 y^-1",
        "x y x y x y^-3",
        "x^2",
        "x y^2 x y^-2 x^-1 y^2 x^-1 y^-2",
    )
    result = coset_enumerate(p, max_cosets=2000)
    assert result.conclusive and result.order == 24


def test_determinism():
    p = presentation("x,y", "x^2", "y^3", "x y x y x y x y")
    first = coset_enumerate(p, max_cosets=500)
    second = coset_enumerate(p, max_cosets=500)
    assert first == second
