"""Polynomials with natural-number coefficients.

Non-negative coefficients make a polynomial non-decreasing on the naturals
syntactically, which is all the binding-function constructions need.  Values
are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import ArgumentError

PolyLike = Union["NonDecPoly", int]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class NonDecPoly:
    """``coeffs[i]`` multiplies ``x**i``; trailing zeros are dropped."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ArgumentError(f"coefficient {c!r} is not an integer")
            if c < 0:
                raise ArgumentError("coefficients must be non-negative")
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def const(cls, c: int) -> "NonDecPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "NonDecPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff: int, degree: int) -> "NonDecPoly":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def parse(cls, text: str) -> "NonDecPoly":
        """``"3,0,2"`` is ``3 + 2x^2``; an empty string is the zero polynomial."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError:
            raise ArgumentError(f"cannot parse coefficients {text!r}") from None

    @staticmethod
    def lift(p: PolyLike) -> "NonDecPoly":
        return p if isinstance(p, NonDecPoly) else NonDecPoly.const(p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: PolyLike) -> "NonDecPoly":
        other = NonDecPoly.lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return NonDecPoly(tuple(c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)))

    __radd__ = __add__

    def __mul__(self, other: PolyLike) -> "NonDecPoly":
        other = NonDecPoly.lift(other)
        if self.is_zero() or other.is_zero():
            return NonDecPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return NonDecPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "NonDecPoly":
        if k < 0:
            raise ArgumentError("negative power")
        out = NonDecPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def compose(self, inner: "NonDecPoly") -> "NonDecPoly":
        """``self(inner(x))``."""
        out = NonDecPoly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def dominates(self, other: "NonDecPoly") -> bool:
        """Coefficient-wise ``self >= other`` (hence pointwise on the naturals)."""
        b = other.coeffs
        return all((self.coeffs[i] if i < len(self.coeffs) else 0) >= c for i, c in enumerate(b))

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data) -> "NonDecPoly":
        if not isinstance(data, list):
            raise ArgumentError("polynomial must be a coefficient list")
        return cls(tuple(data))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


X = NonDecPoly.x()
ZERO = NonDecPoly()
ONE = NonDecPoly.const(1)
