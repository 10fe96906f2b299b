"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction]


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x**i.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients
    and degree -1 (stand-in for minus infinity).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1) -> "Poly":
        return cls([0] * degree + [coeff])

    @classmethod
    def one_minus_xq(cls, q: int) -> "Poly":
        """1 - x**q."""
        return cls([1] + [0] * (q - 1) + [-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly | Number") -> "Poly":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self.coeffs)

    def __sub__(self, other: "Poly | Number") -> "Poly":
        return self + (-_lift(other))

    def __rsub__(self, other: Number) -> "Poly":
        return _lift(other) - self

    def __mul__(self, other: "Poly | Number") -> "Poly":
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        out, base = Poly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        lc = other.lead()
        for i in range(len(rem) - 1, dq - 1, -1):
            f = rem[i] / lc
            if f:
                quot[i - dq] = f
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= f * b
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def monic(self) -> "Poly":
        return Poly(a / self.lead() for a in self.coeffs)

    def reversed(self) -> "Poly":
        """x**deg * p(1/x)."""
        return Poly(reversed(self.coeffs))

    def shift(self, n: int) -> "Poly":
        """Multiply by x**n."""
        return Poly([0] * n + list(self.coeffs)) if self.coeffs else self

    def truncate(self, degree: int) -> "Poly":
        return Poly(self.coeffs[: degree + 1])

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(a) for a in self.coeffs)}])"

    def __str__(self) -> str:
        return format_poly(self)


def _lift(p: "Poly | Number") -> Poly:
    return p if isinstance(p, Poly) else Poly([p])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over Q (gcd(0, 0) = 0)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def format_poly(p: Poly, var: str = "x") -> str:
    """Ascending-degree rendering, e.g. ``1+6x+4x^2``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}" if mag.denominator == 1 else f"({mag}){mono}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out
