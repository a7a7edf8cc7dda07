"""Extended natural numbers: the codomain of proposition ranks.

Finite ranks are plain Python ints.  The single TOP value sits above every
natural number, absorbs addition (TOP + n = TOP) and is the identity of
minimum (min(TOP, x) = x).  Subtraction involving TOP is an error: TOP is
the rank of the empty proposition only, and no law ever subtracts it.
"""

from __future__ import annotations

from typing import Union

from .errors import TopArithmeticError


class _TopType:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_TopType, ())

    def __repr__(self):
        return "TOP"

    def __add__(self, other):
        if isinstance(other, (int, _TopType)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        raise TopArithmeticError("TOP minus a rank is undefined")

    def __rsub__(self, other):
        raise TopArithmeticError("cannot subtract TOP from a finite rank")

    # TOP is strictly greater than every int and equal only to itself.
    def __lt__(self, other):
        self._check(other)
        return False

    def __le__(self, other):
        self._check(other)
        return isinstance(other, _TopType)

    def __gt__(self, other):
        self._check(other)
        return not isinstance(other, _TopType)

    def __ge__(self, other):
        self._check(other)
        return True

    def __eq__(self, other):
        return isinstance(other, _TopType)

    def __ne__(self, other):
        return not isinstance(other, _TopType)

    def __hash__(self):
        return hash("rankcalc.TOP")

    @staticmethod
    def _check(other):
        if not isinstance(other, (int, _TopType)):
            raise TypeError("ranks compare only with ints and TOP")


TOP = _TopType()

ExtNat = Union[int, _TopType]


def is_top(value) -> bool:
    return isinstance(value, _TopType)


def ext_min(values, default=TOP):
    """Minimum of extended naturals; TOP over the empty collection."""
    return min(values, default=default)
