"""Quotients of Laurent polynomials, kept unreduced.

No multivariate gcd is attempted: equality is decided by
cross-multiplication, and evaluation divides the evaluated numerator
by the evaluated denominator.
"""

from __future__ import annotations

from numbers import Rational

from ..errors import DivisionByZero, DomainError
from .cyclotomic import Cyclotomic
from .laurent import LaurentPoly

_SCALARS = (Rational, Cyclotomic)


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, RationalFunction) or isinstance(den, RationalFunction):
            raise DomainError("nested rational functions are not supported")
        if den == 0:
            raise DivisionByZero("rational function with zero denominator")
        if isinstance(num, LaurentPoly) and not isinstance(den, LaurentPoly):
            den = LaurentPoly.constant(num.variables, den)
        elif isinstance(den, LaurentPoly) and not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(den.variables, num)
        elif not isinstance(num, LaurentPoly):
            raise DomainError("rational functions need Laurent polynomial parts")
        if isinstance(den, LaurentPoly) and den.is_monomial():
            num, den = num * den.monomial_inverse(), LaurentPoly.constant(den.variables, 1)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction values are immutable")

    @property
    def variables(self):
        return self.num.variables

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (LaurentPoly,) + _SCALARS):
            if isinstance(other, LaurentPoly):
                return RationalFunction(other, LaurentPoly.constant(other.variables, 1))
            return RationalFunction(LaurentPoly.constant(self.variables, other),
                                    LaurentPoly.constant(self.variables, 1))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.den == self.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            if self.num.is_zero():
                raise DivisionByZero("zero to a negative power")
            return RationalFunction(self.den**(-e), self.num**(-e))
        return RationalFunction(self.num**e, self.den**e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def evaluate(self, values):
        d = self.den.evaluate(values)
        if d == 0:
            raise DivisionByZero("denominator vanishes at the evaluation point")
        from . import div

        return div(self.num.evaluate(values), d)

    def substitute_monomials(self, mapping):
        return RationalFunction(self.num.substitute_monomials(mapping),
                                self.den.substitute_monomials(mapping))

    def as_polynomial(self) -> LaurentPoly:
        """The quotient as a Laurent polynomial, if the division is exact."""
        if self.den == 1:
            return self.num
        return self.num / self.den

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"
