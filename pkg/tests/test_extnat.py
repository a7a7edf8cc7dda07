import pytest

from rankcalc import TOP, TopArithmeticError, is_top
from rankcalc.extnat import ext_min


def test_top_is_singleton_and_comparable():
    assert TOP == TOP
    assert TOP != 7
    assert not TOP < 10 ** 9
    assert TOP > 10 ** 9
    assert TOP >= TOP
    assert TOP <= TOP
    assert 5 < TOP
    assert min(TOP, 3) == 3
    assert min(3, TOP) == 3
    assert max(TOP, 3) is TOP


def test_top_absorbs_addition():
    assert TOP + 4 is TOP
    assert 4 + TOP is TOP
    assert TOP + TOP is TOP


def test_top_subtraction_is_an_error():
    with pytest.raises(TopArithmeticError):
        TOP - 1
    with pytest.raises(TopArithmeticError):
        1 - TOP


def test_top_rejects_foreign_comparisons():
    with pytest.raises(TypeError):
        TOP < "x"


def test_ext_min_defaults_to_top():
    assert ext_min([]) is TOP
    assert ext_min([TOP, 2, 5]) == 2
    assert ext_min([TOP, TOP]) is TOP
    assert is_top(ext_min(iter(())))
