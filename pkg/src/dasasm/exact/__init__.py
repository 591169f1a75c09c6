"""Exact arithmetic: rationals, cyclotomic fields, Laurent polynomials, determinants."""

from fractions import Fraction
from numbers import Rational

from ..errors import DivisionByZero, DomainError
from .cyclotomic import Cyclotomic, cyclotomic_inverse, cyclotomic_polynomial, euler_phi
from .laurent import LaurentPoly, exact_div, render
from .linalg import det_cofactor, det_exact, det_leibniz
from .ratfunc import RationalFunction

__all__ = [
    "Cyclotomic",
    "Fraction",
    "LaurentPoly",
    "RationalFunction",
    "cyclotomic_inverse",
    "cyclotomic_polynomial",
    "det_cofactor",
    "det_exact",
    "det_leibniz",
    "div",
    "euler_phi",
    "exact_div",
    "inverse",
    "is_zero",
    "render",
    "render_scalar",
    "sigma",
    "simplify",
    "zeta",
]


def zeta(conductor: int, power: int = 1) -> Cyclotomic:
    return Cyclotomic.zeta(conductor, power)


def div(a, b):
    """Exact quotient; integer operands give a Fraction, never a float."""
    if b == 0:
        raise DivisionByZero("division by zero")
    if isinstance(a, int) and isinstance(b, int):
        return simplify(Fraction(a, b))
    if isinstance(b, int):
        b = Fraction(b)
    return simplify(a / b)


def is_zero(x) -> bool:
    return x == 0


def inverse(x):
    """Multiplicative inverse of an exact scalar; Laurent polynomials must be monomials."""
    if isinstance(x, LaurentPoly):
        return x.monomial_inverse()
    if isinstance(x, Cyclotomic):
        return cyclotomic_inverse(x)
    if isinstance(x, RationalFunction):
        return 1 / x
    if isinstance(x, Rational):
        if x == 0:
            raise DivisionByZero("inverse of zero")
        return Fraction(1) / x
    raise DomainError(f"cannot invert a value of type {type(x).__name__}")


def sigma(x):
    """``x - 1/x``."""
    if x == 0:
        raise DomainError("sigma is undefined at 0", "x")
    if isinstance(x, LaurentPoly) and not x.is_monomial():
        raise DomainError("sigma of a non-monomial Laurent polynomial")
    return simplify(x - inverse(x))


def simplify(x):
    """Demote values to the simplest representation (Fraction -> int, rational cyclotomic -> Fraction)."""
    if isinstance(x, Cyclotomic):
        x = x.demote()
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def render_scalar(x) -> str:
    """Canonical text for any exact scalar."""
    x = simplify(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)
