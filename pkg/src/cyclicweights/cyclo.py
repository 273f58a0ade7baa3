"""Exact arithmetic in the cyclotomic integers Z[zeta_M].

Values are kept as integer polynomials in ``zeta`` reduced modulo the M-th
cyclotomic polynomial, so there are ``phi(M)`` coefficients and equality is
coefficient-wise. For prime M that basis is ``zeta^0 .. zeta^(M-2)``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from sympy import Symbol, cyclotomic_poly

_z = Symbol("z")


@lru_cache(maxsize=None)
def cyclotomic_coeffs(M: int) -> tuple[int, ...]:
    """Coefficients of Phi_M, constant term first (monic, so exact division works)."""
    poly = cyclotomic_poly(M, _z, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _reduce(M: int, coeffs: Sequence[int]) -> tuple[int, ...]:
    phi = cyclotomic_coeffs(M)
    deg = len(phi) - 1
    work = list(coeffs)
    # x^M = 1 first keeps the division short
    if len(work) > M:
        folded = [0] * M
        for k, c in enumerate(work):
            folded[k % M] += c
        work = folded
    for k in range(len(work) - 1, deg - 1, -1):
        c = work[k]
        if c:
            for j in range(deg + 1):
                work[k - deg + j] -= c * phi[j]
    work = work[:deg] + [0] * (deg - len(work))
    return tuple(work)


class CycInt:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[int] = ()):
        if order < 1:
            raise ValueError("root-of-unity order must be positive")
        self.order = order
        self.coeffs = _reduce(order, [int(c) for c in coeffs])

    @classmethod
    def from_int(cls, order: int, k: int) -> "CycInt":
        return cls(order, [k])

    @classmethod
    def from_counts(cls, order: int, counts: Sequence[int]) -> "CycInt":
        """``sum_j counts[j] * zeta^j`` for exponents ``j`` in ``range(len(counts))``."""
        return cls(order, counts)

    def _check(self, other: "CycInt") -> None:
        if self.order != other.order:
            raise ValueError(f"mismatched orders {self.order} and {other.order}")

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt.from_int(self.order, other)
        if isinstance(other, CycInt):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.order, [-a for a in self.coeffs])

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
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        return CycInt(self.order, prod)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self.order, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{k}")
        return " + ".join(terms) + f" (order {self.order})"


def zeta_pow(M: int, j: int) -> CycInt:
    if M < 1:
        raise ValueError("root-of-unity order must be positive")
    coeffs = [0] * M
    coeffs[j % M] = 1
    return CycInt(M, coeffs)


def add(x: CycInt, y: CycInt) -> CycInt:
    x._check(y)
    return x + y


def mul(x: CycInt, y: CycInt) -> CycInt:
    x._check(y)
    return x * y


def neg(x: CycInt) -> CycInt:
    return -x


def as_rational_integer(x: CycInt) -> int | None:
    """The integer ``k`` if ``x`` is the constant ``k``, else ``None``."""
    if any(x.coeffs[1:]):
        return None
    return x.coeffs[0]
