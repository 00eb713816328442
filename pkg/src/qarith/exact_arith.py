"""Exact arithmetic substrate.

Rationals are :class:`fractions.Fraction`. Polynomials in ``q`` may carry
arbitrary rational exponents (negative and fractional) and are stored as a
sparse, strictly increasing sequence of ``(exponent, coefficient)`` pairs.
Rational functions are kept as unreduced numerator/denominator pairs and
compared by cross-multiplication.

Integral rationals are stored as plain ``int``. ``int`` and ``Fraction``
compare and hash identically, so this is invisible to callers, but it keeps
integer-exponent arithmetic (the common case) cheap.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Union

from .errors import DomainError, EvaluationError

Rational = Fraction
RationalLike = Union[int, Fraction]

__all__ = [
    "Rational",
    "as_rational",
    "FracPoly",
    "QFraction",
    "poly_add",
    "poly_mul",
    "poly_subst",
    "poly_monomial_mul",
    "poly_eval",
    "frac_equal",
    "frac_add",
    "frac_mul",
    "format_rational",
]


def as_rational(x) -> RationalLike:
    """Coerce *x* to an exact rational; integral values come back as ``int``."""
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return x
    if isinstance(x, _RationalABC):
        x = Fraction(x)
    elif isinstance(x, str):
        x = Fraction(x)
    else:
        raise TypeError(f"not an exact rational: {x!r}")
    return x.numerator if x.denominator == 1 else x


def format_rational(x: RationalLike) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _iroot(n: int, k: int) -> int | None:
    """Exact integer k-th root of n >= 0, or None if n is not a perfect k-th power."""
    if n < 2:
        return n
    r = int(round(n ** (1.0 / k))) if n.bit_length() < 1000 else 1 << (n.bit_length() // k)
    # Newton from above
    r = max(r, 1)
    while r ** k > n:
        r = ((k - 1) * r + n // r ** (k - 1)) // k
    while (r + 1) ** k <= n:
        r += 1
    return r if r ** k == n else None


def _rational_power(v: Fraction, e: RationalLike) -> RationalLike:
    e = Fraction(e)
    p, d = e.numerator, e.denominator
    if d == 1:
        return as_rational(v ** p)
    if v < 0:
        raise EvaluationError("inexact evaluation")
    if v == 0:
        # 0 ** e for e > 0; negative exponents are rejected by the caller
        return 0
    num = _iroot(v.numerator, d)
    den = _iroot(v.denominator, d)
    if num is None or den is None:
        raise EvaluationError("inexact evaluation")
    return as_rational(Fraction(num, den) ** p)


class FracPoly:
    """Finite sparse polynomial in ``q`` with rational exponents and coefficients.

    Instances are immutable. ``terms`` is a tuple of ``(exponent, coefficient)``
    pairs, strictly increasing by exponent, with no zero coefficients. The
    zero polynomial has no terms.
    """

    __slots__ = ("_terms", "_hash", "_ints")

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = as_rational(e)
            c = as_rational(c)
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple([t for t in sorted(acc.items()) if t[1] != 0])
        self._hash = None
        self._ints = None

    @classmethod
    def _from_dict(cls, acc: dict) -> "FracPoly":
        # trusted fast path: keys/values already normalised
        self = object.__new__(cls)
        self._terms = tuple([t for t in sorted(acc.items()) if t[1] != 0])
        self._hash = None
        self._ints = None
        return self

    def _all_int(self) -> bool:
        if self._ints is None:
            self._ints = all(type(e) is int and type(c) is int for e, c in self._terms)
        return self._ints

    @classmethod
    def constant(cls, c) -> "FracPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e, c=1) -> "FracPoly":
        return cls({e: c})

    @classmethod
    def zero(cls) -> "FracPoly":
        return cls()

    @classmethod
    def one(cls) -> "FracPoly":
        return cls({0: 1})

    @property
    def terms(self) -> tuple:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == ((0, 1),)

    def is_integral(self) -> bool:
        """True when every exponent is an integer (a Laurent polynomial)."""
        return all(isinstance(e, int) for e, _ in self._terms)

    def coefficient(self, e) -> RationalLike:
        e = as_rational(e)
        for ee, c in self._terms:
            if ee == e:
                return c
        return 0

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if isinstance(other, FracPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == FracPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return FracPoly._from_dict({e: -c for e, c in self._terms})

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            if len(self._terms) == 1 and isinstance(k, (int, Fraction)):
                (e, c), = self._terms
                if c == 1:
                    return FracPoly._from_dict({as_rational(e * k): 1})
                if isinstance(k, int):
                    return FracPoly._from_dict({e * k: as_rational(Fraction(c) ** k)})
            raise DomainError(f"cannot raise {self} to the power {k}")
        result = FracPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def subst(self, r) -> "FracPoly":
        return poly_subst(self, r)

    def shift(self, e, c=1) -> "FracPoly":
        return poly_monomial_mul(self, e, c)

    def __call__(self, v):
        return poly_eval(self, v)

    def __repr__(self):
        return f"FracPoly({self})"

    def __str__(self):
        return render_poly(self)


def _coerce_poly(x) -> FracPoly | None:
    if isinstance(x, FracPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return FracPoly.constant(x)
    return None


def poly_add(a: FracPoly, b: FracPoly) -> FracPoly:
    if not b._terms:
        return a
    if not a._terms:
        return b
    acc = dict(a._terms)
    for e, c in b._terms:
        s = acc.get(e, 0) + c
        acc[e] = s.numerator if type(s) is Fraction and s.denominator == 1 else s
    return FracPoly._from_dict(acc)


def poly_mul(a: FracPoly, b: FracPoly) -> FracPoly:
    if not a._terms or not b._terms:
        return FracPoly()
    if a.is_one():
        return b
    if b.is_one():
        return a
    acc: dict = {}
    get = acc.get
    for e1, c1 in a._terms:
        for e2, c2 in b._terms:
            e = e1 + e2
            acc[e] = get(e, 0) + c1 * c2
    if a._all_int() and b._all_int():
        return FracPoly._from_dict(acc)
    return FracPoly._from_dict({_norm(e): _norm(c) for e, c in acc.items()})


def _norm(x):
    return x.numerator if type(x) is Fraction and x.denominator == 1 else x


def poly_subst(a: FracPoly, r) -> FracPoly:
    """The substitution ``q -> q**r``: every exponent is multiplied by *r*."""
    r = as_rational(r)
    if r == 0:
        raise DomainError("substitution q -> q^0 is degenerate")
    if r == 1:
        return a
    return FracPoly._from_dict({_norm(e * r): c for e, c in a._terms})


def poly_monomial_mul(a: FracPoly, e, c=1) -> FracPoly:
    """Multiply *a* by ``c * q**e``."""
    e = as_rational(e)
    c = as_rational(c)
    if c == 0:
        return FracPoly()
    if e == 0 and c == 1:
        return a
    return FracPoly._from_dict({_norm(ee + e): _norm(cc * c) for ee, cc in a._terms})


def poly_eval(a: FracPoly, v) -> RationalLike:
    """Evaluate *a* at the rational point *v*, exactly.

    Raises :class:`EvaluationError` on a pole at zero or when a fractional
    power of *v* is not rational.
    """
    v = Fraction(as_rational(v))
    total = Fraction(0)
    for e, c in a._terms:
        if v == 0 and e < 0:
            raise EvaluationError("pole at zero")
        total += c * _rational_power(v, e)
    return as_rational(total)


class QFraction:
    """Formal quotient ``num / den`` of two :class:`FracPoly` values.

    No reduced form is maintained. Equality is extensional:
    ``A/B == C/D`` iff ``A*D == C*B``. Because of that, instances are not
    hashable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = FracPoly.one() if den is None else _coerce_poly(den)
        if num is None or den is None:
            raise TypeError("QFraction needs FracPoly or rational arguments")
        if den.is_zero():
            raise DomainError("zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def zero(cls) -> "QFraction":
        return cls(FracPoly(), FracPoly.one())

    @classmethod
    def one(cls) -> "QFraction":
        return cls(FracPoly.one(), FracPoly.one())

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other):
        if isinstance(other, (FracPoly, int, Fraction)) and not isinstance(other, bool):
            other = QFraction(other)
        if not isinstance(other, QFraction):
            return NotImplemented
        return frac_equal(self, other)

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, QFraction):
            p = _coerce_poly(other)
            if p is None:
                return NotImplemented
            other = QFraction(p)
        return frac_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return QFraction(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, QFraction):
            p = _coerce_poly(other)
            if p is None:
                return NotImplemented
            other = QFraction(p)
        return frac_add(self, -other)

    def __mul__(self, other):
        if not isinstance(other, QFraction):
            p = _coerce_poly(other)
            if p is None:
                return NotImplemented
            other = QFraction(p)
        return frac_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, QFraction):
            p = _coerce_poly(other)
            if p is None:
                return NotImplemented
            other = QFraction(p)
        if other.num.is_zero():
            raise DomainError("division by zero")
        return QFraction(self.num * other.den, self.den * other.num)

    def subst(self, r) -> "QFraction":
        return QFraction(poly_subst(self.num, r), poly_subst(self.den, r))

    def shift(self, e, c=1) -> "QFraction":
        return QFraction(poly_monomial_mul(self.num, e, c), self.den)

    def __repr__(self):
        return f"QFraction({self})"

    def __str__(self):
        return render_fraction(self)


def frac_equal(f: QFraction, g: QFraction) -> bool:
    return poly_mul(f.num, g.den) == poly_mul(g.num, f.den)


def frac_add(f: QFraction, g: QFraction) -> QFraction:
    if f.den == g.den:
        # same denominator: skip the cross terms, result is still A/B + C/B
        return QFraction(poly_add(f.num, g.num), f.den)
    return QFraction(
        poly_add(poly_mul(f.num, g.den), poly_mul(g.num, f.den)),
        poly_mul(f.den, g.den),
    )


def frac_mul(f: QFraction, g: QFraction) -> QFraction:
    return QFraction(poly_mul(f.num, g.num), poly_mul(f.den, g.den))


# -- rendering ---------------------------------------------------------------

def _render_power(e) -> str:
    if e == 1:
        return "q"
    if isinstance(e, int) and e > 0:
        return f"q^{e}"
    return f"q^({format_rational(e)})"


def _render_term(e, c) -> str:
    """Render ``|c| * q^e`` (sign handled by the caller)."""
    c = abs(c)
    if e == 0:
        return format_rational(c)
    power = _render_power(e)
    if c == 1:
        return power
    return f"{format_rational(c)}*{power}"


def render_poly(a: FracPoly) -> str:
    """Canonical text form, e.g. ``1 + q + q^2`` or ``-q^(-1) - q^(-2)``.

    Terms are listed by increasing absolute exponent (ties: negative
    exponent first), which for ordinary polynomials is increasing exponent.
    """
    if not a._terms:
        return "0"
    ordered = sorted(a._terms, key=lambda t: (abs(t[0]), t[0]))
    parts = []
    for i, (e, c) in enumerate(ordered):
        body = _render_term(e, c)
        if i == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def render_fraction(f: QFraction) -> str:
    if f.den.is_one() or f.num.is_zero():
        return render_poly(f.num)
    num = render_poly(f.num)
    den = render_poly(f.den)
    if len(f.num) > 1 or f.num.terms[0][1] < 0:
        num = f"({num})"
    return f"{num}/({den})"
