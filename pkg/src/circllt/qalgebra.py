"""Exact polynomials in q (and Laurent polynomials, and polynomials in t over them).

Coefficients are Python ints or :class:`fractions.Fraction`; a Fraction with
denominator one is stored as an int so that integer-valued work stays fast.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb
from numbers import Rational
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_div` when the remainder is nonzero."""

    def __init__(self, numerator, denominator, remainder=None):
        self.numerator = numerator
        self.denominator = denominator
        self.remainder = remainder
        super().__init__(f"{numerator} is not divisible by {denominator}")


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"unsupported coefficient {c!r}")


class QLaurent:
    """Laurent polynomial in q with rational coefficients (sparse, immutable)."""

    __slots__ = ("_c", "_hash")
    _allow_negative = True

    def __init__(self, coeffs: Mapping[int, object] | Iterable | None = None):
        c = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
            for e, v in items:
                v = _norm(v)
                if v:
                    c[int(e)] = c.get(int(e), 0) + v
                    if not c[int(e)]:
                        del c[int(e)]
        if not self._allow_negative and c and min(c) < 0:
            raise ValueError("negative exponent in QPoly; use QLaurent")
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict):
        obj = object.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, e: int, c=1):
        return cls({e: c})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    # container-ish access
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, e: int):
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    @property
    def degree(self) -> int:
        """Largest exponent; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    @property
    def low_degree(self) -> int:
        return min(self._c) if self._c else 0

    def is_polynomial(self) -> bool:
        return not self._c or min(self._c) >= 0

    def to_qpoly(self) -> "QPoly":
        return QPoly._raw(dict(self._c)) if self.is_polynomial() else _raise_neg(self)

    def to_laurent(self) -> "QLaurent":
        return QLaurent._raw(dict(self._c))

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._c.values())

    def nonnegative(self) -> bool:
        return all(v >= 0 for v in self._c.values())

    # arithmetic
    def _result_type(self, other):
        if type(self) is QPoly and type(other) is QPoly:
            return QPoly
        return QLaurent

    def _coerce(self, other):
        if isinstance(other, QLaurent):
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            return QPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = _norm(s) if isinstance(s, Fraction) else s
            else:
                c.pop(e, None)
        return self._result_type(other)._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        c = {e: _norm(v) for e, v in c.items() if v}
        return self._result_type(other)._raw(c)

    __rmul__ = __mul__

    def scale(self, s) -> "QLaurent":
        s = _norm(s)
        if not s:
            return type(self)._raw({})
        return type(self)._raw({e: _norm(v * s) for e, v in self._c.items()})

    def __truediv__(self, other):
        # scalar division only; polynomial division goes through exact_div
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / other)
        return exact_div(self, other)

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) == 1:
                (e, v), = self._c.items()
                return QLaurent._raw({e * k: _norm(Fraction(1) / v ** -k)})
            raise ValueError("negative power of a non-monomial")
        out = type(self).const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "QLaurent":
        """Multiply by q**k."""
        cls = QPoly if type(self) is QPoly and (not self._c or self.low_degree + k >= 0) else QLaurent
        return cls._raw({e + k: v for e, v in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, QLaurent):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # substitutions
    def __call__(self, x):
        """Evaluate at a number, or compose with another polynomial."""
        if isinstance(x, QLaurent):
            out = QLaurent._raw({}) if not self.is_polynomial() else QPoly._raw({})
            for e, v in self._c.items():
                out = out + (x ** e).scale(v)
            return out
        return sum((v * Fraction(x) ** e for e, v in self._c.items()), Fraction(0))

    def subs_q_plus_one(self) -> "QPoly":
        """Return p(q+1); only for genuine polynomials."""
        if not self.is_polynomial():
            raise ValueError("q -> q+1 needs a polynomial")
        c: dict = {}
        for e, v in self._c.items():
            for k in range(e + 1):
                c[k] = c.get(k, 0) + v * comb(e, k)
        return QPoly({k: v for k, v in c.items()})

    def subs_q_minus_one(self) -> "QPoly":
        if not self.is_polynomial():
            raise ValueError("q -> q-1 needs a polynomial")
        c: dict = {}
        for e, v in self._c.items():
            for k in range(e + 1):
                c[k] = c.get(k, 0) + v * comb(e, k) * (-1) ** (e - k)
        return QPoly({k: v for k, v in c.items()})

    def subs_q_inverse(self) -> "QLaurent":
        return QLaurent._raw({-e: v for e, v in self._c.items()})

    def subs_q_power(self, k: int) -> "QLaurent":
        """Return p(q**k)."""
        return type(self)._raw({e * k: v for e, v in self._c.items()})

    def coefficient_list(self) -> list:
        """Dense coefficients for exponents 0..degree (polynomials only)."""
        if not self._c:
            return []
        return [self._c.get(e, 0) for e in range(0, self.degree + 1)]

    # text forms
    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items()):
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mon = "q" if e == 1 else f"q^{e}" if e > 0 else f"q^({e})"
                body = mon if a == 1 else f"{a}*{mon}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += sign + body
        return s

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def serialize(self) -> str:
        """Ascending ``exp:num/den`` list, comma separated."""
        out = []
        for e, v in sorted(self._c.items()):
            f = Fraction(v)
            out.append(f"{e}:{f.numerator}/{f.denominator}")
        return ",".join(out)

    @classmethod
    def deserialize(cls, s: str):
        c = {}
        if s.strip():
            for tok in s.split(","):
                e, v = tok.split(":")
                c[int(e)] = Fraction(v)
        return cls(c)


class QPoly(QLaurent):
    """Polynomial in q: a :class:`QLaurent` with non-negative support."""

    __slots__ = ()
    _allow_negative = False


def _raise_neg(p):
    raise ValueError(f"{p} has negative exponents")


q = QPoly({1: 1})
ONE = QPoly({0: 1})
ZERO = QPoly({})


def parse_qpoly(text: str) -> QLaurent:
    """Parse the human form, e.g. ``1+4*q+q^2`` or ``2/3*q^(-1)``."""
    import re

    s = text.replace(" ", "")
    if s in ("", "0"):
        return QPoly()
    if s[0] not in "+-":
        s = "+" + s
    c: dict = {}
    for sign, coef, mon in re.findall(r"([+-])(\d+(?:/\d+)?)?\*?(q(?:\^\(?-?\d+\)?)?)?", s):
        if not coef and not mon:
            continue
        v = Fraction(coef) if coef else Fraction(1)
        if not mon:
            e = 0
        elif mon == "q":
            e = 1
        else:
            e = int(mon[2:].strip("()"))
        c[e] = c.get(e, 0) + (-v if sign == "-" else v)
    cls = QPoly if all(e >= 0 for e in c) else QLaurent
    return cls(c)


def q_int(n: int) -> QPoly:
    """The q-integer [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return QPoly._raw({e: 1 for e in range(n)})


def q_factorial(n: int) -> QPoly:
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


def is_palindromic(p: QLaurent, center) -> bool:
    """True iff coeff(q^k) == coeff(q^(2*center - k)) for every k."""
    if p.is_zero():
        return True
    two_c = Fraction(center) * 2
    if two_c.denominator != 1:
        return False
    m = int(two_c)
    return all(p[m - e] == v for e, v in p._c.items())


def is_unimodal(p: QLaurent) -> bool:
    """Coefficients over low..high degree weakly rise then weakly fall."""
    if p.is_zero():
        return True
    seq = [p[e] for e in range(min(0, p.low_degree), p.degree + 1)]
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i == len(seq) - 1


def exact_div(p: QLaurent, d: QLaurent) -> QLaurent:
    """Return p / d, raising :class:`NotDivisible` if the division leaves a remainder."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return type(p)._raw({})
    # strip the q-power of d, divide a polynomial by a polynomial with nonzero constant term
    dlow = d.low_degree
    dd = d.shift(-dlow)
    plow = min(p.low_degree, 0)
    pp = p.shift(-plow)
    dc = dd._c
    top = max(dc)
    lead = Fraction(dc[top])
    rem = dict(pp._c)
    quo: dict = {}
    while rem:
        e = max(rem)
        if e < top:
            break
        k = e - top
        f = _norm(Fraction(rem[e]) / lead)
        quo[k] = f
        for de, dv in dc.items():
            ee = k + de
            v = rem.get(ee, 0) - f * dv
            if v:
                rem[ee] = _norm(v)
            else:
                rem.pop(ee, None)
    if rem:
        raise NotDivisible(p, d, QLaurent._raw(rem))
    out = QLaurent({k + plow - dlow: v for k, v in quo.items()})
    if isinstance(p, QPoly) and isinstance(d, QPoly) and out.is_polynomial():
        return QPoly._raw(out._c)
    return out


def eulerian_poly(n: int) -> QPoly:
    """Sum over permutations of S_n of q^(number of descents)."""
    if n < 1:
        raise ValueError("eulerian_poly needs n >= 1")
    c: dict = {}
    for w in permutations(range(n)):
        d = sum(1 for i in range(n - 1) if w[i] > w[i + 1])
        c[d] = c.get(d, 0) + 1
    return QPoly(c)


class TPoly:
    """Polynomial in t whose coefficients are q-polynomials."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, QLaurent] | None = None):
        self._c = {}
        for e, v in (coeffs or {}).items():
            if not isinstance(v, QLaurent):
                v = QPoly.const(v)
            if not v.is_zero():
                self._c[int(e)] = v

    @classmethod
    def t_power(cls, k: int, coeff: QLaurent = ONE):
        return cls({k: coeff})

    def __getitem__(self, k):
        return self._c.get(k, ZERO)

    def items(self):
        return sorted(self._c.items())

    def __add__(self, other: "TPoly"):
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, ZERO) + v
        return TPoly(c)

    def __sub__(self, other: "TPoly"):
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, TPoly):
            c: dict = {}
            for e1, v1 in self._c.items():
                for e2, v2 in other._c.items():
                    c[e1 + e2] = c.get(e1 + e2, ZERO) + v1 * v2
            return TPoly(c)
        if isinstance(other, QLaurent):
            return TPoly({e: v * other for e, v in self._c.items()})
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, s):
        return TPoly({e: v.scale(s) for e, v in self._c.items()})

    def at_t_one(self) -> QLaurent:
        out = ZERO
        for v in self._c.values():
            out = out + v
        return out

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"({v})*t^{e}" for e, v in sorted(self._c.items()))

    __repr__ = __str__
