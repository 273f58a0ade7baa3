"""Additive and multiplicative characters of GF(r) and Gaussian periods."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclo import CycInt, as_rational_integer, zeta_pow
from .ffield import FieldCtx


def psi(ctx: FieldCtx, x: int) -> CycInt:
    """Canonical additive character ``zeta_p ** Tr_p(x)``."""
    return zeta_pow(ctx.p, ctx.absolute_trace(x))


@dataclass(frozen=True)
class MultChar:
    """``chi_j(gen^k) = zeta_N^(j*k)`` with ``chi_j(0) = 0``."""

    ctx: FieldCtx
    order_divisor: int
    index: int

    def __post_init__(self):
        if (self.ctx.card - 1) % self.order_divisor:
            raise ValueError(f"N={self.order_divisor} does not divide {self.ctx.card - 1}")

    def exponent(self, x: int) -> int | None:
        """Exponent of ``zeta_N`` in ``chi(x)``; ``None`` at zero."""
        if x == 0:
            return None
        return (self.index * self.ctx.dlog(x)) % self.order_divisor

    def __call__(self, x: int) -> CycInt:
        k = self.exponent(x)
        if k is None:
            return CycInt.from_int(self.order_divisor, 0)
        return zeta_pow(self.order_divisor, k)

    @property
    def is_principal(self) -> bool:
        return self.index % self.order_divisor == 0


def char_value(chi: MultChar, x: int) -> CycInt:
    return chi(x)


def characters(ctx: FieldCtx, N: int) -> list[MultChar]:
    """All characters whose N-th power is principal."""
    return [MultChar(ctx, N, j) for j in range(N)]


def cyclotomic_class(ctx: FieldCtx, N: int) -> np.ndarray:
    """The nonzero N-th powers, i.e. the subgroup generated by ``gen**N``."""
    if (ctx.card - 1) % N:
        raise ValueError(f"N={N} does not divide {ctx.card - 1}")
    return ctx.exp_table[::N]


def coset_index(ctx: FieldCtx, N: int, u: int) -> int:
    """Which coset of the N-th powers ``u`` lies in (``dlog(u) mod N``)."""
    if u == 0:
        raise ValueError("0 lies in no coset")
    if N == 2 and not ctx.has_tables:
        return 0 if ctx.is_square(u) else 1
    return ctx.dlog(u) % N


def gaussian_period_cyc(ctx: FieldCtx, N: int, u: int) -> CycInt:
    """``sum over z in C^(N,r) of psi(z*u)`` as an exact cyclotomic integer."""
    zs = cyclotomic_class(ctx, N)
    traces = ctx.absolute_trace(ctx.mul(zs, u) if u else np.zeros_like(zs))
    counts = np.bincount(traces, minlength=ctx.p)
    return CycInt.from_counts(ctx.p, [int(c) for c in counts])


def gaussian_period_direct(ctx: FieldCtx, N: int, u: int) -> int | CycInt:
    """Gaussian period by direct summation; an int whenever the value is rational."""
    value = gaussian_period_cyc(ctx, N, u)
    k = as_rational_integer(value)
    return value if k is None else k


def period_table(ctx: FieldCtx, N: int) -> list[int | CycInt]:
    """``[eta_{gen^0}, ..., eta_{gen^(N-1)}]``, one value per coset."""
    return [gaussian_period_direct(ctx, N, ctx.power_of_gen(k)) for k in range(N)]


def periods_closed_N2(p: int, s: int, m: int) -> tuple[int, int]:
    """``(eta_1, eta_alpha)`` for the quadratic periods of GF(p^(s*m)), m even."""
    if p == 2:
        raise ValueError("quadratic periods need odd p")
    if m % 2:
        raise ValueError("m must be even")
    sm = s * m
    root = p ** (sm // 2)
    if p % 4 == 1:
        sign = -1 if sm % 2 else 1
    else:
        # (-i)^sm with sm even
        sign = -1 if (sm // 2) % 2 else 1
    eta1 = (-1 - sign * root) // 2
    return eta1, -1 - eta1
