"""Counting the pairs (a, b) that realise a given class pattern.

For nonzero ``c = (c_1, ..., c_e)`` the set ``F(c)`` holds the pairs with every
``(a + beta^i b) g^i c_i`` a nonzero N-th power. Its size ``f(c)`` is computed
three ways here: by brute force, by the general character-sum expansion, and
(for e=4, N=2) by the elliptic-curve closed form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .code import CodeParams, ParameterError
from .cyclo import CycInt, as_rational_integer
from .ffield import FieldCtx


@dataclass(frozen=True)
class ClassPattern:
    """Coset index mod N of each ``c_i``; ``c_i`` is represented by ``gen**residue``."""

    residues: tuple[int, ...]
    N: int = 2

    def representatives(self, ctx: FieldCtx) -> list[int]:
        return [ctx.power_of_gen(k) for k in self.residues]

    def chi(self, i: int) -> int:
        """Quadratic character of ``c_i`` (1-based), for N=2."""
        return -1 if self.residues[i - 1] % 2 else 1

    def __str__(self) -> str:
        if self.N == 2:
            return "".join("n" if k else "s" for k in self.residues)
        return ",".join(map(str, self.residues))


def all_patterns(e: int, N: int = 2) -> list[ClassPattern]:
    return [ClassPattern(t, N) for t in itertools.product(range(N), repeat=e)]


def gamma_constants(params: CodeParams) -> list[int]:
    """``gamma_i = beta^i / (1 - beta^i)`` for ``i = 1 .. e-1``."""
    ctx = params.ctx
    out = []
    for i in range(1, params.e):
        bi = ctx.pow(params.beta, i)
        out.append(ctx.div(bi, ctx.sub(1, bi)))
    return out


def quad_pair_sum(ctx: FieldCtx, a: int, b: int) -> int:
    """``sum_x chi((x+a)(x+b))`` over GF(r) with the quadratic character."""
    if ctx.p == 2:
        raise ValueError("quadratic character needs odd characteristic")
    xs = np.arange(ctx.card, dtype=np.int64)
    vals = ctx.mul(ctx.add(xs, a), ctx.add(xs, b))
    return int(ctx.quadratic_character(vals).sum())


def _check_pattern(params: CodeParams, pattern: ClassPattern) -> None:
    if len(pattern.residues) != params.e or pattern.N != params.N:
        raise ParameterError(f"pattern {pattern} does not fit e={params.e}, N={params.N}")


def count_F_brute(params: CodeParams, pattern: ClassPattern) -> int:
    _check_pattern(params, pattern)
    ctx = params.ctx.ensure_tables()
    r, N = params.r, params.N
    log = ctx.log_table
    a = np.arange(r, dtype=np.int64)[:, None]
    b = np.arange(r, dtype=np.int64)[None, :]
    ok = np.ones((r, r), dtype=bool)
    for i, k in enumerate(pattern.residues, start=1):
        bi = ctx.pow(params.beta, i)
        v = ctx.add(a, ctx.mul(b, bi))
        shift = ctx.dlog(ctx.pow(params.g, i)) + k
        ok &= (v != 0) & ((log[v] + shift) % N == 0)
    return int(ok.sum())


def f_character_formula(params: CodeParams, pattern: ClassPattern) -> int:
    """``f(c)`` from the expansion over (e-1)-tuples of characters of order dividing N."""
    _check_pattern(params, pattern)
    ctx = params.ctx.ensure_tables()
    r, N, e = params.r, params.N, params.e
    reps = pattern.representatives(ctx)
    ce_inv = ctx.inv(reps[-1])
    gammas = gamma_constants(params)

    # dlog of the prefactor argument g^i (1 - beta^i) c_i / c_e
    pre = []
    for i in range(1, e):
        arg = ctx.mul(ctx.mul(ctx.pow(params.g, i), ctx.sub(1, ctx.pow(params.beta, i))),
                      ctx.mul(reps[i - 1], ce_inv))
        pre.append(ctx.dlog(arg))

    bs = np.arange(r, dtype=np.int64)
    shifted = np.stack([ctx.add(bs, gm) for gm in gammas]) if gammas else np.ones((0, r), dtype=np.int64)
    alive = np.all(shifted != 0, axis=0)
    logs = ctx.log_table[shifted][:, alive]

    counts = np.zeros(N, dtype=object)
    for js in itertools.product(range(N), repeat=e - 1):
        j = np.array(js, dtype=np.int64)
        prefactor = int(np.dot(j, pre)) % N if e > 1 else 0
        inner = (j @ logs + prefactor) % N if e > 1 else np.zeros(logs.shape[1], dtype=np.int64)
        for k, c in enumerate(np.bincount(inner, minlength=N)):
            counts[k] += int(c)
    total = as_rational_integer(CycInt.from_counts(N, list(counts)))
    if total is None:
        raise ArithmeticError("character sum is not rational")
    value = Fraction((r - 1) * total, N**e)
    if value.denominator != 1:
        raise ArithmeticError(f"character sum gives non-integral count {value}")
    return int(value)


def gb1_is_square(params: CodeParams) -> bool:
    ctx = params.ctx
    return ctx.is_square(ctx.mul(params.g, ctx.add(params.beta, 1)))


def f_closed_e4N2(
    params: CodeParams,
    pattern: ClassPattern,
    pi_trace: int,
    gb1_square: bool | None = None,
) -> int:
    """``f(c)`` for e=4, N=2 from the pattern signs and ``pi^(ms) + conj(pi)^(ms)``."""
    if (params.e, params.N) != (4, 2):
        raise ParameterError("closed form requires e=4, N=2")
    _check_pattern(params, pattern)
    if gb1_square is None:
        gb1_square = gb1_is_square(params)
    c = pattern.chi
    x_gb1 = 1 if gb1_square else -1
    inner = (
        params.r - 3
        - 2 * c(2) * c(4)
        - 2 * c(1) * c(3)
        - c(1) * c(2) * c(3) * c(4) * pi_trace
        - 2 * x_gb1 * (c(3) * c(4) + c(1) * c(4) + c(2) * c(3) + c(1) * c(2))
    )
    value = Fraction((params.r - 1) * inner, 16)
    if value.denominator != 1:
        raise ArithmeticError(f"closed form gives non-integral count {value}")
    return int(value)


@dataclass(frozen=True)
class WeilAudit:
    gap: Fraction
    bound: Fraction | float
    holds: bool


def weil_gap(params: CodeParams, pattern: ClassPattern, f: int | None = None) -> WeilAudit:
    """Compare ``|f(c) - (r-1)(r-e+1)/N^e|`` with ``(e-2)(r-1)sqrt(r)/N``, exactly."""
    if f is None:
        f = count_F_brute(params, pattern)
    r, e, N = params.r, params.e, params.N
    gap = abs(Fraction(f) - Fraction((r - 1) * (r - e + 1), N**e))
    coef = Fraction((e - 2) * (r - 1), N)
    holds = gap * gap <= coef * coef * r
    root = isqrt(r)
    bound = coef * root if root * root == r else float(coef) * r**0.5
    return WeilAudit(gap, bound, holds)
