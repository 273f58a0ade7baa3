"""Gaussian integers and point counts for E: y^2 = x^3 + 4x."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np
from sympy import isprime

from .ffield import FieldCtx


@dataclass(frozen=True)
class GaussInt:
    re: int
    im: int = 0

    def __add__(self, other: "GaussInt") -> "GaussInt":
        other = _lift(other)
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __sub__(self, other: "GaussInt") -> "GaussInt":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "GaussInt":
        return _lift(other) - self

    def __mul__(self, other: "GaussInt") -> "GaussInt":
        other = _lift(other)
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GaussInt":
        if k < 0:
            raise ValueError("negative powers leave the Gaussian integers")
        result, base = GaussInt(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def divides(self, other: "GaussInt") -> bool:
        """Whether ``other / self`` is again a Gaussian integer."""
        other = _lift(other)
        nrm = self.norm()
        if nrm == 0:
            return other == GaussInt(0)
        num = other * self.conjugate()
        return num.re % nrm == 0 and num.im % nrm == 0

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


def _lift(x) -> GaussInt:
    return x if isinstance(x, GaussInt) else GaussInt(int(x))


TWO_PLUS_TWO_I = GaussInt(2, 2)


def sqrt_minus_one(p: int) -> int:
    """A square root of -1 mod p (p = 1 mod 4), from the first non-residue 2, 3, ..."""
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            return pow(c, (p - 1) // 4, p)
    raise ValueError(f"no non-residue mod {p}")


def two_squares(p: int) -> tuple[int, int]:
    """Cornacchia: ``(a, b)`` with ``a^2 + b^2 = p`` and ``a`` odd."""
    x = sqrt_minus_one(p)
    if x < p // 2:
        x = p - x
    a, b = p, x
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    c = isqrt(p - b * b)
    if b * b + c * c != p:
        raise ArithmeticError(f"Cornacchia failed for {p}")
    return (b, c) if b % 2 else (c, b)


def is_primary(pi: GaussInt) -> bool:
    """``pi = 1 (mod 2+2i)``."""
    return TWO_PLUS_TWO_I.divides(pi - 1)


def primary_pi(p: int) -> GaussInt:
    """The primary Gaussian prime of norm p, preferring a nonnegative imaginary part."""
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 mod 4")
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    a, b = two_squares(p)
    base = GaussInt(a, b)
    units = [GaussInt(1), GaussInt(0, 1), GaussInt(-1), GaussInt(0, -1)]
    candidates = [u * z for z in (base, base.conjugate()) for u in units]
    primary = [z for z in candidates if is_primary(z)]
    primary.sort(key=lambda z: (z.im < 0, -z.im, z.re))
    return primary[0]


def frobenius_trace(p: int) -> int:
    """``pi + conj(pi)``: ``2 Re(pi)`` for p = 1 mod 4, 0 in the supersingular case."""
    if p == 2:
        raise ValueError("p must be odd")
    if p % 4 == 3:
        return 0
    return 2 * primary_pi(p).re


def trace_power(p: int, n: int) -> int:
    """``pi^n + conj(pi)^n`` as an exact integer."""
    if p == 2 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    if n < 1:
        raise ValueError("n must be positive")
    if p % 4 == 3:
        return 0 if n % 2 else 2 * (-p) ** (n // 2)
    a = frobenius_trace(p)
    prev, cur = 2, a
    for _ in range(n - 1):
        prev, cur = cur, a * cur - p * prev
    return cur


def count_points_closed(p: int, n: int) -> int:
    """Projective point count of y^2 = x^3 + 4x over GF(p^n)."""
    return 1 + p**n - trace_power(p, n)


def count_points_brute(
    ctx: FieldCtx,
    roots: tuple[int, int, int] | None = None,
    infinity: bool = True,
) -> int:
    """Count points of ``y^2 = x^3 + 4x``, or of ``y^2 = (x+r1)(x+r2)(x+r3)`` given ``roots``."""
    if ctx.p == 2:
        raise ValueError("characteristic 2 is out of scope")
    xs = np.arange(ctx.card, dtype=np.int64)
    if roots is None:
        rhs = ctx.add(ctx.mul(ctx.mul(xs, xs), xs), ctx.scale(4, xs))
    else:
        rhs = np.ones_like(xs)
        for root in roots:
            rhs = ctx.mul(rhs, ctx.add(xs, root))
    chi = ctx.quadratic_character(rhs)
    affine = int(ctx.card + chi.sum())
    return affine + 1 if infinity else affine
