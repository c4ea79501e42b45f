"""Dense univariate polynomials over the rationals.

Coefficients are stored lowest degree first as ``Fraction`` values with
trailing zeros stripped, so the zero polynomial has an empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

from .numutil import DomainError, divisors

Number = Union[int, Fraction]


class PolyQ:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "PolyQ":
        return cls([0, 1])

    @classmethod
    def const(cls, c: Number) -> "PolyQ":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> "PolyQ":
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyQ([other])
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyQ({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> "PolyQ":
        return PolyQ(-c for c in self.coeffs)

    def __add__(self, other) -> "PolyQ":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return PolyQ(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other) -> "PolyQ":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "PolyQ":
        return _lift(other) - self

    def __mul__(self, other) -> "PolyQ":
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PolyQ":
        result, base = PolyQ([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "PolyQ") -> Tuple["PolyQ", "PolyQ"]:
        other = _lift(other)
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return PolyQ(), PolyQ(rem)
        quot = [Fraction(0)] * (len(rem) - dq)
        inv = 1 / other.lc
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            quot[i - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return PolyQ(quot), PolyQ(rem[:dq])

    def __floordiv__(self, other) -> "PolyQ":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "PolyQ":
        return divmod(self, other)[1]

    def divides(self, other: "PolyQ") -> bool:
        """True when ``self`` divides ``other`` exactly."""
        return (other % self).is_zero()

    def monic(self) -> "PolyQ":
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return PolyQ(c * inv for c in self.coeffs)

    def derivative(self) -> "PolyQ":
        return PolyQ(i * c for i, c in enumerate(self.coeffs) if i)

    def shift_arg(self, a: Number) -> "PolyQ":
        """The polynomial ``x -> self(x + a)``."""
        return self(PolyQ([a, 1])) if self.coeffs else PolyQ()

    def scale_arg(self, a: Number) -> "PolyQ":
        """The polynomial ``x -> self(a * x)``."""
        a = Fraction(a)
        return PolyQ(c * a ** i for i, c in enumerate(self.coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def _lift(p) -> PolyQ:
    return p if isinstance(p, PolyQ) else PolyQ([p])


def gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic greatest common divisor (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: PolyQ) -> PolyQ:
    if p.degree <= 0:
        return p.monic()
    return (p // gcd(p, p.derivative())).monic()


def resultant(f: PolyQ, g: PolyQ) -> Fraction:
    """Resultant ``lc(f)**deg(g) * prod g(alpha)`` over the roots ``alpha`` of ``f``.

    Equivalently ``lc(f)**m * lc(g)**n * prod (alpha_i - beta_j)``; with this
    convention ``resultant(x - 2, x - 3) == -1``.
    """
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    res = Fraction(1)
    while True:
        n, m = f.degree, g.degree
        if n == 0:
            return res * f.lc ** m
        if m == 0:
            return res * g.lc ** n
        r = f % g
        if r.is_zero():
            return Fraction(0)
        # Res(f, g) = (-1)^(nm) lc(g)^(n - deg r) Res(g, r)
        if n * m % 2:
            res = -res
        res *= g.lc ** (n - r.degree)
        f, g = g, r


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> PolyQ:
    """The ``d``-th cyclotomic polynomial (integer coefficients)."""
    if d < 1:
        raise DomainError(f"cyclotomic index must be positive, got {d}")
    p = PolyQ([-1] + [0] * (d - 1) + [1])
    for e in divisors(d)[:-1]:
        p = p // cyclotomic(e)
    return p


def lagrange(points: Sequence[Tuple[Number, Number]]) -> PolyQ:
    """Interpolating polynomial through ``(x, y)`` pairs with distinct ``x``."""
    result = PolyQ()
    xs = [Fraction(x) for x, _ in points]
    for i, (_, y) in enumerate(points):
        if y == 0:
            continue
        basis = PolyQ([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * PolyQ([-xj, 1])
                denom *= xs[i] - xj
        result = result + basis * (Fraction(y) / denom)
    return result



def format_coeffs(p: PolyQ) -> List[str]:
    """Coefficients as ``numerator/denominator`` strings, lowest degree first."""
    return [f"{c.numerator}/{c.denominator}" for c in p.coeffs]
