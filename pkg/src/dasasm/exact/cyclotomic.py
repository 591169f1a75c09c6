"""Elements of cyclotomic fields Q(zeta_N) in the power basis.

An element is stored as its residue modulo the N-th cyclotomic polynomial,
a tuple of ``phi(N)`` rational coefficients (``int`` or ``Fraction``).
``Cyclotomic.zeta(12)`` is the primitive root ``exp(2*pi*i/12)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from ..errors import DivisionByZero, DomainError


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    """Quotient and remainder of coefficient lists (lowest degree first)."""
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    lead = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] if lead == 1 else Fraction(a[-1]) / lead
        shift = len(a) - len(b)
        q[shift] = c
        for k, bk in enumerate(b):
            a[shift + k] -= c * bk
        a = _trim(a)
    return q, a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise DomainError("cyclotomic polynomial index must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(int(c) for c in num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple:
    """Residues of x^k mod Phi_n for phi(n) <= k <= 2*phi(n) - 2."""
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1
    table = []
    cur = [-c for c in phi_poly[:-1]]  # x^deg = -(lower terms)
    for _ in range(max(deg - 1, 0)):
        table.append(tuple(cur))
        # multiply by x and reduce
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for k in range(deg):
                cur[k] -= top * phi_poly[k]
    return tuple(table)


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Cyclotomic:
    """An element of Q(zeta_N), immutable."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs=()):
        deg = euler_phi(conductor)
        coeffs = list(coeffs)
        if len(coeffs) > deg:
            coeffs = _reduce(conductor, coeffs)
        coeffs = coeffs + [0] * (deg - len(coeffs))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(_normalize(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors --------------------------------------------------
    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "Cyclotomic":
        """The root ``exp(2*pi*i*power/conductor)``."""
        power %= conductor
        return cls(conductor, _reduce(conductor, [0] * power + [1]))

    @classmethod
    def from_rational(cls, conductor: int, value) -> "Cyclotomic":
        return cls(conductor, [value])

    # -- basic predicates ------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_rational(self):
        """The rational value if the element lies in Q, else ``None``."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else 0

    def demote(self):
        """Return a plain rational when possible, otherwise ``self``."""
        r = self.to_rational()
        return self if r is None else r

    def embed(self, conductor: int) -> "Cyclotomic":
        """Image in Q(zeta_M) for a multiple M of the conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise DomainError(f"cannot embed Q(zeta_{self.conductor}) into Q(zeta_{conductor})")
        step = conductor // self.conductor
        poly = [0] * (step * (len(self.coeffs) - 1) + 1)
        for k, c in enumerate(self.coeffs):
            poly[k * step] = c
        return Cyclotomic(conductor, _reduce(conductor, poly))

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                raise DomainError(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}; embed first"
                )
            return other
        if isinstance(other, Rational):
            return Cyclotomic(self.conductor, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.conductor, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-a for a in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.conductor, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            if other == 1:
                return self
            return Cyclotomic(self.conductor, [a * other for a in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.conductor, _reduce(self.conductor, _poly_mul(self.coeffs, o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        return cyclotomic_inverse(self)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise DivisionByZero("division of a cyclotomic element by zero")
            return Cyclotomic(self.conductor, [Fraction(a) / other for a in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * cyclotomic_inverse(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * cyclotomic_inverse(self)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base = cyclotomic_inverse(self)
            e = -e
        result = Cyclotomic(self.conductor, [1])
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison and display -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                m = _lcm(self.conductor, other.conductor)
                return self.embed(m).coeffs == other.embed(m).coeffs
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.to_rational() == other
        return NotImplemented

    def __hash__(self):
        r = self.to_rational()
        if r is not None:
            return hash(r)
        return hash((self.conductor, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {list(self.coeffs)!r})"

    def __str__(self):
        return render_cyclotomic(self)


def render_cyclotomic(x: Cyclotomic, name: str | None = None) -> str:
    """Power-basis text, highest power first, e.g. ``2*zeta12^2 - 1``."""
    from .laurent import format_coefficient

    name = name or f"zeta{x.conductor}"
    parts = []
    for k in range(len(x.coeffs) - 1, -1, -1):
        c = x.coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
        parts.append((c, mono))
    if not parts:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(parts):
        neg = c < 0
        mag = -c if neg else c
        if mono:
            body = mono if mag == 1 else f"{format_coefficient(mag)}*{mono}"
        else:
            body = format_coefficient(mag)
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _lcm(a, b):
    from math import gcd

    return a * b // gcd(a, b)


def _reduce(conductor: int, poly):
    """Reduce a coefficient list modulo Phi_conductor."""
    deg = euler_phi(conductor)
    poly = list(poly)
    if len(poly) <= deg:
        return poly
    table = _reduction_table(conductor)
    out = poly[:deg]
    for k in range(deg, len(poly)):
        c = poly[k]
        if not c:
            continue
        idx = k - deg
        if idx < len(table):
            row = table[idx]
        else:  # very high powers: fall back to long division
            _, rem = _poly_divmod(poly, list(cyclotomic_polynomial(conductor)))
            return rem + [0] * (deg - len(rem))
        for j in range(deg):
            if row[j]:
                out[j] += c * row[j]
    return out


def cyclotomic_inverse(x: Cyclotomic) -> Cyclotomic:
    """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
    if x.is_zero():
        raise DivisionByZero("inverse of zero in a cyclotomic field")
    r = x.to_rational()
    if r is not None:
        return Cyclotomic(x.conductor, [Fraction(1) / r])
    modulus = list(cyclotomic_polynomial(x.conductor))
    # invariant: s_k * a == r_k  (mod modulus)
    r0, r1 = modulus, _trim(x.coeffs)
    s0, s1 = [], [1]
    while len(r1) > 1:
        quo, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(quo, s1))
    # r1 is a nonzero constant since Phi_N is irreducible
    c = Fraction(r1[0])
    return Cyclotomic(x.conductor, _reduce(x.conductor, [Fraction(a) / c for a in s1]))
