"""Sparse multivariate Laurent polynomials with exact coefficients.

A polynomial lives in a ring with a fixed, ordered tuple of variable names.
Terms are kept in a dict mapping exponent tuples (negative entries allowed)
to nonzero coefficients, which may be ``int``, ``Fraction`` or
``Cyclotomic`` values.

>>> q, u = LaurentPoly.gens(("q", "u"))
>>> str((q - q**-1) * u)
'q*u - q^-1*u'
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from ..errors import DivisionByZero, DomainError
from .cyclotomic import Cyclotomic

_SCALARS = (Rational, Cyclotomic)


def format_coefficient(c) -> str:
    if isinstance(c, Cyclotomic):
        r = c.to_rational()
        if r is None:
            return f"({c})"
        c = r
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, Cyclotomic):
        return c.demote()
    return c


class LaurentPoly:
    """Immutable sparse Laurent polynomial."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        clean = {}
        if terms:
            nvars = len(variables)
            for exps, c in terms.items():
                if c == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise DomainError("exponent tuple length does not match variable list")
                clean[exps] = _clean(c)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly values are immutable")

    @classmethod
    def _raw(cls, variables, terms):
        # trusted constructor: terms already clean
        obj = object.__new__(cls)
        object.__setattr__(obj, "variables", variables)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    # -- constructors ----------------------------------------------------
    @classmethod
    def gens(cls, variables):
        variables = tuple(variables)
        out = []
        for k in range(len(variables)):
            e = [0] * len(variables)
            e[k] = 1
            out.append(cls._raw(variables, {tuple(e): 1}))
        return tuple(out)

    @classmethod
    def constant(cls, variables, c):
        variables = tuple(variables)
        if c == 0:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): _clean(c)})

    @classmethod
    def monomial(cls, variables, exps, c=1):
        return cls(variables, {tuple(exps): c})

    # -- inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.terms:
            return 0
        if self.is_constant():
            return next(iter(self.terms.values()))
        raise DomainError("polynomial is not constant")

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree_range(self, var) -> tuple[int, int]:
        """Lowest and highest exponent of ``var`` (``(0, 0)`` for zero)."""
        k = self._index(var)
        if not self.terms:
            return (0, 0)
        exps = [e[k] for e in self.terms]
        return (min(exps), max(exps))

    def sorted_terms(self):
        """Terms in decreasing lexicographic exponent order."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def _index(self, var):
        if isinstance(var, int):
            return var
        try:
            return self.variables.index(var)
        except ValueError:
            raise DomainError(f"unknown variable {var!r}") from None

    # -- coercion ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise DomainError(
                    f"variable lists differ: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, _SCALARS):
            return LaurentPoly.constant(self.variables, other)
        return None

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            v = terms.get(e, 0) + c
            if v == 0:
                terms.pop(e, None)
            else:
                terms[e] = _clean(v)
        return LaurentPoly._raw(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

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
        if isinstance(other, _SCALARS):
            if other == 0:
                return LaurentPoly._raw(self.variables, {})
            if other == 1:
                return self
            return LaurentPoly._raw(
                self.variables, {e: _clean(c * other) for e, c in self.terms.items()}
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        terms = {e: _clean(c) for e, c in out.items() if c != 0}
        return LaurentPoly._raw(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.monomial_inverse() ** (-e)
        if self.is_monomial():
            (ex, c), = self.terms.items()
            return LaurentPoly._raw(self.variables, {tuple(x * e for x in ex): _clean(c**e)})
        result = LaurentPoly.constant(self.variables, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def monomial_inverse(self) -> "LaurentPoly":
        """Inverse of a unit (a single term with invertible coefficient)."""
        if not self.is_monomial():
            raise DomainError("only monomials are invertible Laurent polynomials")
        (ex, c), = self.terms.items()
        inv = c.inverse() if isinstance(c, Cyclotomic) else Fraction(1) / c
        return LaurentPoly._raw(self.variables, {tuple(-x for x in ex): _clean(inv)})

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                raise DivisionByZero("division by zero")
            inv = other.inverse() if isinstance(other, Cyclotomic) else Fraction(1) / other
            return self * inv
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_monomial():
            return self * o.monomial_inverse()
        return exact_div(self, o)

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, _SCALARS):
            if other == 0:
                return not self.terms
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                h = hash(self.constant_value())
            else:
                h = hash((self.variables, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- transformations ---------------------------------------------------
    def evaluate(self, values):
        """Evaluate at a point; ``values`` is a mapping or a sequence aligned with the variables.

        Missing variables in a mapping are an error.  Values must be exact
        scalars (or anything supporting ``*``, ``+`` and integer powers).
        """
        vals = self._point(values)
        powers = [dict() for _ in vals]
        total = 0
        for ex, c in self.terms.items():
            term = c
            for k, e in enumerate(ex):
                if e:
                    cache = powers[k]
                    p = cache.get(e)
                    if p is None:
                        v = vals[k]
                        if e < 0 and v == 0:
                            raise DivisionByZero(
                                f"variable {self.variables[k]} evaluated at zero", self.variables[k]
                            )
                        if e < 0 and isinstance(v, int):
                            v = Fraction(v)
                        p = v**e
                        cache[e] = p
                    term = term * p
            total = total + term
        return total

    def _point(self, values):
        if isinstance(values, dict):
            try:
                return [values[v] for v in self.variables]
            except KeyError as exc:
                raise DomainError(f"no value given for variable {exc.args[0]!r}") from None
        values = list(values)
        if len(values) != len(self.variables):
            raise DomainError("point has the wrong number of coordinates")
        return values

    def substitute_monomials(self, mapping):
        """Substitute variables by monomials (or scalars) in the same ring.

        ``mapping`` sends variable names to a LaurentPoly monomial of this
        ring or to an exact scalar. This is the fast path used for
        ``u -> 1/u``, variable swaps and specializations like ``u1 -> q``.
        """
        n = len(self.variables)
        images = []
        for k, var in enumerate(self.variables):
            if var not in mapping:
                e = [0] * n
                e[k] = 1
                images.append((tuple(e), 1))
                continue
            img = mapping[var]
            if isinstance(img, LaurentPoly):
                if img.variables != self.variables or not img.is_monomial():
                    raise DomainError("monomial substitution needs monomials of the same ring")
                (ex, c), = img.terms.items()
                images.append((ex, c))
            else:
                if img == 0:
                    raise DomainError(f"cannot substitute 0 for {var}")
                images.append(((0,) * n, img))
        out = {}
        for ex, c in self.terms.items():
            new = [0] * n
            coef = c
            for k, e in enumerate(ex):
                if e:
                    iex, ic = images[k]
                    for j in range(n):
                        if iex[j]:
                            new[j] += e * iex[j]
                    if ic != 1:
                        coef = coef * ic**e
            key = tuple(new)
            out[key] = out.get(key, 0) + coef
        return LaurentPoly(self.variables, out)

    def substitute(self, mapping):
        """General substitution of variables by ring elements or scalars."""
        vals = []
        for k, var in enumerate(self.variables):
            if var in mapping:
                vals.append(mapping[var])
            else:
                vals.append(LaurentPoly.gens(self.variables)[k])
        return self.evaluate(vals)

    def diff(self, var) -> "LaurentPoly":
        """Partial derivative with respect to ``var``."""
        k = self._index(var)
        out = {}
        for ex, c in self.terms.items():
            e = ex[k]
            if e:
                new = list(ex)
                new[k] = e - 1
                out[tuple(new)] = c * e
        return LaurentPoly(self.variables, out)

    def map_coefficients(self, f) -> "LaurentPoly":
        return LaurentPoly(self.variables, {e: f(c) for e, c in self.terms.items()})

    def change_ring(self, variables) -> "LaurentPoly":
        """Re-express in a ring whose variable list contains all variables that occur."""
        variables = tuple(variables)
        pos = []
        for k, v in enumerate(self.variables):
            if v in variables:
                pos.append(variables.index(v))
            else:
                pos.append(None)
        out = {}
        for ex, c in self.terms.items():
            new = [0] * len(variables)
            for k, e in enumerate(ex):
                if e:
                    if pos[k] is None:
                        raise DomainError(f"variable {self.variables[k]} missing from target ring")
                    new[pos[k]] = e
            out[tuple(new)] = c
        return LaurentPoly._raw(variables, out)

    # -- text ----------------------------------------------------------------
    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LaurentPoly({self.variables!r}, {render(self)!r})"


def render(p: LaurentPoly) -> str:
    """Canonical text: terms in decreasing lexicographic exponent order."""
    if not p.terms:
        return "0"
    out = []
    for idx, (ex, c) in enumerate(p.sorted_terms()):
        factors = []
        for var, e in zip(p.variables, ex):
            if e == 1:
                factors.append(var)
            elif e:
                factors.append(f"{var}^{e}")
        mono = "*".join(factors)
        if isinstance(c, Cyclotomic) and c.to_rational() is None:
            body = f"({c})" + (f"*{mono}" if mono else "")
            out.append(body if idx == 0 else " + " + body)
            continue
        if isinstance(c, Cyclotomic):
            c = c.to_rational()
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


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient ``a / b``; raises ``DomainError`` if ``b`` does not divide ``a``.

    Division by leading terms in lexicographic order. Lex order on Z^n is
    compatible with addition, so lead(a) = lead(b) + lead(a/b) whenever the
    division is exact; per-variable degree windows bound the quotient and
    guarantee termination.
    """
    if not b.terms:
        raise DivisionByZero("division by the zero polynomial")
    if a.variables != b.variables:
        raise DomainError("variable lists differ")
    if not a.terms:
        return a
    nv = len(a.variables)
    lo = [a.degree_range(k)[0] - b.degree_range(k)[0] for k in range(nv)]
    hi = [a.degree_range(k)[1] - b.degree_range(k)[1] for k in range(nv)]
    if any(l > h for l, h in zip(lo, hi)):
        raise DomainError("polynomial division is not exact")
    b_lead = max(b.terms)
    b_coef = b.terms[b_lead]
    inv = b_coef.inverse() if isinstance(b_coef, Cyclotomic) else Fraction(1) / b_coef
    rem = dict(a.terms)
    quot = {}
    while rem:
        lead = max(rem)
        qe = tuple(x - y for x, y in zip(lead, b_lead))
        if any(e < l or e > h for e, l, h in zip(qe, lo, hi)):
            raise DomainError("polynomial division is not exact")
        qc = _clean(rem[lead] * inv)
        quot[qe] = qc
        for eb, cb in b.terms.items():
            e = tuple(x + y for x, y in zip(qe, eb))
            v = rem.get(e, 0) - qc * cb
            if v == 0:
                rem.pop(e, None)
            else:
                rem[e] = v
    return LaurentPoly(a.variables, quot)
