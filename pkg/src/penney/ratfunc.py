"""Exact polynomials and rational functions in the bias variable p.

Polynomials carry arbitrary-precision integer coefficients in ascending
powers of p.  Rational functions are kept in a canonical reduced form so
that equality of functions is equality of coefficient tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd


class PoleError(ZeroDivisionError):
    """Denominator vanishes where a finite value was required."""


class LimitError(ArithmeticError):
    """The p -> 0+ limit is infinite."""


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Integer-coefficient polynomial, ``coeffs[k]`` multiplies p^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip(int(c) for c in coeffs)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @classmethod
    def one_minus_p_power(cls, m: int) -> IntPoly:
        return _ONE_MINUS_P ** m

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def order_at_zero(self) -> int:
        """Index of the lowest nonzero coefficient."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise ValueError("zero polynomial has no order")

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        result, base = IntPoly([1]), self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; exact for ints and Fractions."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> IntPoly:
        """Multiply by p^k."""
        return IntPoly([0] * k + list(self.coeffs)) if self.coeffs else self

    def derivative(self) -> IntPoly:
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def reflect(self) -> IntPoly:
        """Substitute p -> 1 - p."""
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * _ONE_MINUS_P + c
        return acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = igcd(g, c)
        return g

    def primitive(self) -> IntPoly:
        """Content-free part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def norm1(self) -> int:
        return sum(abs(c) for c in self.coeffs)


_ONE_MINUS_P = IntPoly([1, -1])
P = IntPoly([0, 1])


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """lc(b)^(deg a - deg b + 1) * a  mod  b, computed in Z[p]."""
    if not b:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    db, lb = b.degree, b.lc
    r = list(a.coeffs)
    e = len(r) - 1 - db + 1
    if e <= 0:
        return a
    bc = b.coeffs
    while len(r) - 1 >= db and r:
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for k, c in enumerate(bc):
            r[k + shift] -= lead * c
        r = list(_strip(r))
        e -= 1
    return IntPoly(r) * (lb ** e)


def exact_quotient(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return q with a = b*q over Z; raise if b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    q = [0] * max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        lead = r[-1]
        if lead % lb:
            raise ArithmeticError("inexact polynomial division")
        t = lead // lb
        shift = len(r) - 1 - db
        q[shift] = t
        for k, c in enumerate(b.coeffs):
            r[k + shift] -= t * c
        r = list(_strip(r))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return IntPoly(q)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (subresultant PRS)."""
    if not a:
        return b.primitive()
    if not b:
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    if b.degree == 0:
        return IntPoly([1])
    g = h = 1
    while True:
        delta = a.degree - b.degree
        r = pseudo_remainder(a, b)
        if not r:
            return b.primitive()
        if r.degree == 0:
            return IntPoly([1])
        a, b = b, IntPoly(c // (g * h ** delta) for c in r.coeffs)
        g = a.lc
        if delta:
            h = g ** delta // h ** (delta - 1)


class RatFunc:
    """Reduced quotient ``num / den`` of integer polynomials in p.

    Canonical: gcd(num, den) constant, joint integer content 1, positive
    leading denominator coefficient; zero is ``0 / 1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly):
        self.num, self.den = num, den

    def __repr__(self):
        return f"RatFunc({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self):
        return render(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        return (isinstance(other, RatFunc)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    @classmethod
    def const(cls, c) -> RatFunc:
        c = Fraction(c)
        return normalize(IntPoly([c.numerator]), IntPoly([c.denominator]))

    @classmethod
    def poly(cls, coeffs) -> RatFunc:
        return normalize(IntPoly(coeffs), IntPoly([1]))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, IntPoly):
            return normalize(other, IntPoly([1]))
        return RatFunc.const(other)

    def __add__(self, other):
        o = self._coerce(other)
        return normalize(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return normalize(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if not o.num:
            raise ZeroDivisionError("division by the zero function")
        return normalize(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, m: int):
        if m < 0:
            return RatFunc.const(1) / (self ** -m)
        return RatFunc(self.num ** m, self.den ** m)

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num.coeffs],
                "den": [str(c) for c in self.den.coeffs],
                "text": render(self)}

    @classmethod
    def from_json(cls, data: dict) -> RatFunc:
        return normalize(IntPoly(int(c) for c in data["num"]),
                         IntPoly(int(c) for c in data["den"]))


def normalize(num: IntPoly, den: IntPoly) -> RatFunc:
    """Bring ``num/den`` to canonical reduced form."""
    if not den:
        raise PoleError("zero denominator")
    if not num:
        return RatFunc(IntPoly(), IntPoly([1]))
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = exact_quotient(num, g), exact_quotient(den, g)
    c = igcd(num.content(), den.content())
    if den.lc < 0:
        c = -c
    if c != 1:
        num = IntPoly(x // c for x in num.coeffs)
        den = IntPoly(x // c for x in den.coeffs)
    return RatFunc(num, den)


def reflect(f: RatFunc) -> RatFunc:
    """f(1 - p)."""
    return normalize(f.num.reflect(), f.den.reflect())


def evaluate(f: RatFunc, q) -> Fraction:
    q = Fraction(q)
    d = f.den(q)
    if d == 0:
        raise PoleError(f"pole at p = {q}")
    return Fraction(f.num(q)) / d


def limit_at_zero(f: RatFunc) -> Fraction:
    """lim p -> 0+ of f, from the lowest-order coefficients."""
    if not f.num:
        return Fraction(0)
    a, b = f.num.order_at_zero(), f.den.order_at_zero()
    if a > b:
        return Fraction(0)
    if a < b:
        raise LimitError("function diverges as p -> 0+")
    return Fraction(f.num.coeffs[a], f.den.coeffs[b])


def derivative_numerator(f: RatFunc) -> IntPoly:
    """Numerator of f' over den^2."""
    return f.num.derivative() * f.den - f.num * f.den.derivative()


# -- Sturm sequences -------------------------------------------------------

def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    seq = [p, p.derivative()]
    while seq[-1]:
        b = seq[-1]
        r = pseudo_remainder(seq[-2], b)
        # pseudo-division scales by lc(b)^e; undo a negative factor
        e = seq[-2].degree - b.degree + 1
        if b.lc < 0 and e % 2:
            r = -r
        if not r:
            break
        g = r.content()
        seq.append(IntPoly(-(c // g) for c in r.coeffs))
    return seq


def _variations(seq, x) -> int:
    signs = []
    for s in seq:
        v = s(x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def squarefree_part(p: IntPoly) -> IntPoly:
    g = poly_gcd(p, p.derivative())
    return exact_quotient(p.primitive(), g) if g.degree > 0 else p.primitive()


def count_roots(p: IntPoly, lo, hi) -> int:
    """Distinct real roots of ``p`` in the half-open interval (lo, hi]."""
    seq = sturm_sequence(squarefree_part(p))
    return _variations(seq, Fraction(lo)) - _variations(seq, Fraction(hi))


def _strip_endpoint_roots(p: IntPoly, lo: Fraction, hi: Fraction) -> IntPoly:
    s = squarefree_part(p)
    for r in (lo, hi):
        if s(r) == 0:
            s = exact_quotient(s * r.denominator,
                               IntPoly([-r.numerator, r.denominator])).primitive()
    return s


def isolate_roots(p: IntPoly, lo=0, hi=1, tol=None) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct roots of ``p`` strictly inside (lo, hi).

    Each returned ``(a, b)`` either has a == b (an exact rational root) or
    contains exactly one root in the open interval with p(a), p(b) != 0.
    Intervals are refined to width <= ``tol`` when given.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not p:
        raise ValueError("zero polynomial has no isolated roots")
    s = _strip_endpoint_roots(p, lo, hi)
    seq = sturm_sequence(s)
    out = []
    stack = [(lo, hi, _variations(seq, lo), _variations(seq, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1 and (tol is None or b - a <= tol) and s(a) and s(b):
            out.append((a, b))
            continue
        m = (a + b) / 2
        vm = _variations(seq, m)
        if s(m) == 0:
            out.append((m, m))
            # V(m) counts m itself on the left: (a, m] holds va - vm roots
            stack.append((a, m, va, vm + 1))
            stack.append((m, b, vm, vb))
        else:
            stack.append((a, m, va, vm))
            stack.append((m, b, vm, vb))
    out.sort()
    return out


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_changes(p: IntPoly, lo=0, hi=1, tol=None) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals of the roots in (lo, hi) where ``p`` changes sign."""
    out = []
    for a, b in isolate_roots(p, lo, hi, tol):
        if a == b:
            # step off the exact root to root-free probes on either side
            step = Fraction(1, 2)
            while True:
                left, right = a - step * (a - lo), a + step * (hi - a)
                if count_roots(p, left, right) == 1 and p(left) and p(right):
                    break
                step /= 2
            changed = _sign(p(left)) != _sign(p(right))
        else:
            changed = _sign(p(a)) != _sign(p(b))
        if changed:
            out.append((a, b))
    return out


def derivative_sign_changes(f: RatFunc) -> int:
    """Sign changes of f' on (0, 1), counted exactly."""
    return len(derivative_extrema(f))


def derivative_extrema(f: RatFunc, tol=None) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals of interior points where f' changes sign."""
    if f.den.degree > 0 and isolate_roots(f.den, 0, 1):
        raise PoleError("denominator vanishes inside (0, 1)")
    d = derivative_numerator(f)
    if not d:
        return []
    return sign_changes(d, 0, 1, tol)


# -- rendering ---------------------------------------------------------------

def poly_text(p: IntPoly) -> str:
    """Ascending-power text such as ``1 + 1p^1 - 1p^2``."""
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        body = str(abs(c)) if k == 0 else f"{abs(c)}p^{k}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def _factored_text(p: IntPoly) -> str:
    if not p:
        return "0"
    k = p.order_at_zero()
    inner = IntPoly(p.coeffs[k:])
    return f"({poly_text(inner)})" + (f"·p^{k}" if k else "")


def render(f: RatFunc) -> str:
    """``(1 + 1p^1 - 1p^2)·p^4 / (1 + 1p^3)`` style text."""
    return f"{_factored_text(f.num)} / {_factored_text(f.den)}"
