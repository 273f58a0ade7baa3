"""The two-zero cyclic codes: parameters, codewords, weight distributions.

A code instance is fixed by ``(q, m, h, e)`` and a primitive element alpha of
GF(r), r = q^m. Codeword ``c_(a,b)`` has components
``Tr_{r/q}(a g^i + b (beta g)^i)`` for ``i < n``.
"""

from __future__ import annotations

import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np
from sympy import factorint

from .chars import coset_index, period_table, periods_closed_N2
from .ffield import TABLE_LIMIT, FieldCtx, make_field, trace_to_subfield

DEFAULT_MAX_PAIRS = 2**32


class ParameterError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CodeParams:
    ctx: FieldCtx = field(repr=False)
    p: int
    s: int
    m: int
    h: int
    e: int

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def r(self) -> int:
        return self.q**self.m

    @property
    def n(self) -> int:
        return self.h * (self.r - 1) // (self.q - 1)

    @property
    def N(self) -> int:
        return math.gcd(self.m, self.e * (self.q - 1) // self.h)

    @cached_property
    def g(self) -> int:
        return self.ctx.power_of_gen((self.q - 1) // self.h)

    @cached_property
    def beta(self) -> int:
        return self.ctx.power_of_gen((self.r - 1) // self.e)

    @cached_property
    def periods(self) -> list:
        """Gaussian periods indexed by coset of ``C^(N,r)``: ``[eta_{alpha^0}, ...]``."""
        ctx = self.ctx
        if ctx.card <= TABLE_LIMIT:
            ctx.ensure_tables()
            return period_table(ctx, self.N)
        if self.N == 2:
            return list(periods_closed_N2(self.p, self.s, self.m))
        raise ParameterError("Gaussian periods unavailable for this instance")

    def eta(self, u: int):
        """``eta_u^(N,r)``, including ``eta_0 = (r-1)/N``."""
        if u == 0:
            return (self.r - 1) // self.N
        return self.periods[coset_index(self.ctx, self.N, u)]

    def describe(self) -> str:
        return f"C(q={self.q}, m={self.m}, h={self.h}, e={self.e}): n={self.n}, N={self.N}, r={self.r}"


def _split_prime_power(q: int) -> tuple[int, int]:
    f = factorint(q) if q > 1 else {}
    if len(f) != 1:
        raise ParameterError(f"q={q} is not a prime power")
    ((p, s),) = f.items()
    return p, s


def derive_params(
    q: int,
    m: int,
    h: int,
    e: int,
    modulus: Sequence[int] | None = None,
    generator: int | Sequence[int] | None = None,
) -> CodeParams:
    p, s = _split_prime_power(q)
    return code_params(p, s, m, h, e, modulus=modulus, generator=generator)


def code_params(
    p: int,
    s: int,
    m: int,
    h: int,
    e: int,
    modulus: Sequence[int] | None = None,
    generator: int | Sequence[int] | None = None,
    ctx: FieldCtx | None = None,
) -> CodeParams:
    """Validate ``(p^s, m, h, e)`` and build the code over GF(p^(s*m))."""
    if min(s, m, h, e) < 1:
        raise ParameterError("s, m, h, e must be positive")
    q = p**s
    if (q - 1) % h:
        raise ParameterError(f"h={h} does not divide q-1={q - 1}")
    if h % e:
        raise ParameterError(f"e={e} does not divide h={h}")
    if ctx is None:
        try:
            ctx = make_field(p, s * m, modulus=modulus, generator=generator)
        except ValueError as exc:
            raise ParameterError(str(exc)) from exc
    elif (ctx.p, ctx.d) != (p, s * m):
        raise ParameterError("field does not match parameters")
    if ctx.card <= 2**16:
        ctx.ensure_tables()
    params = CodeParams(ctx, p, s, m, h, e)
    if ctx.order(params.g) != params.n:
        raise ParameterError("order of g differs from n")
    if ctx.pow(ctx.mul(params.g, params.beta), params.n) != 1:
        raise ParameterError("(g*beta)^n != 1")
    if ctx.pow(params.beta, e) != 1:
        raise ParameterError("beta^e != 1")
    return params


def codeword(params: CodeParams, a: int, b: int) -> list[int]:
    """The codeword as GF(q)-elements (subfield elements of GF(r), encoded in GF(r))."""
    ctx = params.ctx
    g, bg = params.g, ctx.mul(params.beta, params.g)
    gi, bgi = 1, 1
    word = []
    for _ in range(params.n):
        x = ctx.add(ctx.mul(a, gi), ctx.mul(b, bgi))
        word.append(trace_to_subfield(ctx, params.s, x))
        gi, bgi = ctx.mul(gi, g), ctx.mul(bgi, bg)
    return word


def hamming_weight(word: Sequence[int]) -> int:
    return sum(1 for c in word if c)


# -- weight distributions ------------------------------------------------------


@dataclass
class WeightDistribution:
    entries: dict[int, int]
    n: int
    q: int | None = None

    def __post_init__(self):
        self.entries = {int(w): int(c) for w, c in sorted(self.entries.items()) if c}

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def items(self):
        return self.entries.items()

    def enumerator(self) -> str:
        return format_enumerator(self)

    def minimum_distance(self) -> int | None:
        nonzero = [w for w in self.entries if w > 0]
        return min(nonzero) if nonzero else None

    @classmethod
    def from_pairs(cls, pairs, n: int, q: int | None = None) -> "WeightDistribution":
        merged: dict[int, int] = {}
        for w, c in pairs:
            merged[w] = merged.get(w, 0) + c
        return cls(merged, n, q)


def format_enumerator(dist: WeightDistribution | Mapping[int, int]) -> str:
    """``1+576x^48+...`` in ascending weight; a unit coefficient is dropped unless weight 0."""
    entries = dist.entries if isinstance(dist, WeightDistribution) else dict(dist)
    terms = []
    for w in sorted(entries):
        c = entries[w]
        if c == 0:
            continue
        if w == 0:
            terms.append(str(c))
        else:
            coef = "" if c == 1 else str(c)
            terms.append(f"{coef}x" if w == 1 else f"{coef}x^{w}")
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"^(\d*)(?:x(?:\^(\d+))?)?$")


def parse_enumerator(text: str, n: int | None = None) -> WeightDistribution:
    entries: dict[int, int] = {}
    text = text.replace(" ", "")
    if text != "0":
        for term in text.split("+"):
            mt = _TERM.match(term)
            if not term or mt is None or (mt.group(1) == "" and "x" not in term):
                raise ValueError(f"bad enumerator term {term!r}")
            coef = int(mt.group(1)) if mt.group(1) else 1
            if "x" not in term:
                w = 0
            else:
                w = int(mt.group(2)) if mt.group(2) else 1
            entries[w] = entries.get(w, 0) + coef
    if n is None:
        n = max(entries, default=0)
    return WeightDistribution(entries, n)


# -- brute-force enumeration ---------------------------------------------------


def trace_kernel_matrices(params: CodeParams) -> tuple[np.ndarray, np.ndarray]:
    """GF(p)-linear maps sending ``a`` (resp. ``b``) to its codeword contribution.

    ``Tr_{r/q}(y) = 0`` iff ``Tr_{r/p}(y * w_j) = 0`` for a GF(p)-basis ``w_j``
    of GF(q), so component ``i`` of ``c_(a,b)`` vanishes iff the ``s`` values
    ``coeffs(a) @ KA[:, i, j] + coeffs(b) @ KB[:, i, j]`` vanish mod p.
    Returned shapes are ``(s*m, n*s)``.
    """
    ctx, s = params.ctx, params.s
    omega = ctx.power_of_gen((params.r - 1) // (params.q - 1))
    basis_q = [ctx.pow(omega, j) for j in range(s)]
    monomials = [ctx.p**k for k in range(ctx.d)]
    g, bg = params.g, ctx.mul(params.beta, params.g)
    KA = np.zeros((ctx.d, params.n, s), dtype=np.int64)
    KB = np.zeros_like(KA)
    gi, bgi = 1, 1
    for i in range(params.n):
        for j, w in enumerate(basis_q):
            ga, gb = ctx.mul(gi, w), ctx.mul(bgi, w)
            for k, mono in enumerate(monomials):
                KA[k, i, j] = ctx.absolute_trace(ctx.mul(mono, ga))
                KB[k, i, j] = ctx.absolute_trace(ctx.mul(mono, gb))
        gi, bgi = ctx.mul(gi, g), ctx.mul(bgi, bg)
    return KA.reshape(ctx.d, -1), KB.reshape(ctx.d, -1)


def _slice_counts(CA: np.ndarray, CB: np.ndarray, p: int, n: int, s: int) -> np.ndarray:
    counts = np.zeros(n + 1, dtype=np.int64)
    rows = CB.shape[0]
    for row in CA:
        vals = (CB + row) % p
        nonzero = vals.reshape(rows, n, s).any(axis=2)
        counts += np.bincount(nonzero.sum(axis=1), minlength=n + 1)
    return counts


def brute_weight_distribution(
    params: CodeParams,
    jobs: int = 1,
    max_pairs: int | None = DEFAULT_MAX_PAIRS,
    a_values: Sequence[int] | None = None,
) -> WeightDistribution:
    """Exact weight distribution by enumerating every ``(a, b)`` in GF(r)^2.

    ``jobs > 1`` fans the ``a`` range out over worker processes; the merge is a
    plain sum so the result does not depend on the partition. ``a_values``
    restricts enumeration to a slice of ``a`` (the result is then partial).
    """
    r, n, s, p = params.r, params.n, params.s, params.p
    if max_pairs is not None and r * r > max_pairs:
        raise BudgetExceeded(f"{r}^2 pairs exceeds the budget of {max_pairs}")
    ctx = params.ctx
    if ctx.card > TABLE_LIMIT:
        raise BudgetExceeded(f"GF({r}) is too large to enumerate")
    KA, KB = trace_kernel_matrices(params)
    coeffs = ctx.coeff_matrix
    dtype = np.int16 if p < 2**14 else np.int64
    CA = ((coeffs @ KA) % p).astype(dtype)
    CB = ((coeffs @ KB) % p).astype(dtype)
    if a_values is not None:
        CA = CA[np.asarray(a_values, dtype=np.int64)]
    if jobs <= 1 or len(CA) < 2 * jobs:
        counts = _slice_counts(CA, CB, p, n, s)
    else:
        chunks = np.array_split(CA, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_slice_counts, chunks, [CB] * jobs, [p] * jobs, [n] * jobs, [s] * jobs)
            counts = sum(parts, np.zeros(n + 1, dtype=np.int64))
    dist = WeightDistribution({w: int(c) for w, c in enumerate(counts)}, n, params.q)
    if a_values is None and dist.entries.get(0) != 1:
        raise ParameterError("(a, b) -> codeword is not injective for this instance")
    return dist


def codeword_weights(params: CodeParams) -> np.ndarray:
    """``W[a, b]`` = Hamming weight of ``c_(a,b)``, for desk-scale fields."""
    KA, KB = trace_kernel_matrices(params)
    coeffs = params.ctx.coeff_matrix
    p, n, s, r = params.p, params.n, params.s, params.r
    CA, CB = (coeffs @ KA) % p, (coeffs @ KB) % p
    W = np.empty((r, r), dtype=np.int64)
    for a in range(r):
        W[a] = ((CA[a] + CB) % p).reshape(r, n, s).any(axis=2).sum(axis=1)
    return W


# -- zero counts through Gaussian periods -----------------------------------------


def _as_fraction(value) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    raise ParameterError(f"Gaussian period {value!r} is not rational")


def lambda_value(params: CodeParams, a: int, b: int) -> Fraction:
    """Modified weight: ``(hN/(eq)) * sum_{i=1..e} eta_{(a + beta^i b) g^i}``."""
    ctx = params.ctx
    total = Fraction(0)
    bi, gi = 1, 1
    for _ in range(params.e):
        bi, gi = ctx.mul(bi, params.beta), ctx.mul(gi, params.g)
        u = ctx.mul(ctx.add(a, ctx.mul(bi, b)), gi)
        total += _as_fraction(params.eta(u))
    return Fraction(params.h * params.N, params.e * params.q) * total


def zero_offset(params: CodeParams) -> Fraction:
    """``h(r-1)/(q(q-1))``, the period-free part of the zero count."""
    return Fraction(params.h * (params.r - 1), params.q * (params.q - 1))


def z_value(params: CodeParams, a: int, b: int) -> Fraction:
    """Number of zero components of ``c_(a,b)`` expressed through Gaussian periods."""
    return zero_offset(params) + lambda_value(params, a, b)


def weight_from_lambda(params: CodeParams, lam: Fraction) -> int:
    w = params.n - zero_offset(params) - lam
    if w.denominator != 1 or not 0 <= w <= params.n:
        raise ParameterError(f"modified weight {lam} gives a non-integral or out-of-range weight {w}")
    return int(w)
