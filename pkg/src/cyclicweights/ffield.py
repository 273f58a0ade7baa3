"""Finite fields GF(p^d) in a power basis.

Elements are plain Python ints: the coefficient vector ``(c_0, ..., c_{d-1})``
of ``c_0 + c_1 x + ... + c_{d-1} x^{d-1}`` is stored as ``sum(c_j * p**j)``.
That encoding is a bijection onto ``range(p**d)``, so elements double as
array indices for the discrete-log tables and the numpy fast paths.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np
from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

# fields up to this size get exp/log tables on first use
TABLE_LIMIT = 2**20


def parse_coeffs(text: str) -> list[int]:
    """Parse ``"2,1,1"`` (constant term first) into ``[2, 1, 1]``."""
    return [int(t) for t in text.replace(" ", "").split(",") if t != ""]


def format_coeffs(coeffs: Sequence[int]) -> str:
    return ",".join(str(int(c)) for c in coeffs)


def is_irreducible(p: int, modulus: Sequence[int]) -> bool:
    """Irreducibility over GF(p) of a polynomial given constant term first."""
    return bool(gf_irreducible_p([int(c) % p for c in reversed(modulus)], p, ZZ))


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorint(n)))


class FieldCtx:
    """The field GF(p^d) = GF(p)[x] / (modulus) with a fixed primitive element.

    Construct through :func:`make_field`, which validates its inputs. The
    context is immutable once built; the lookup tables are filled lazily.
    """

    def __init__(self, p: int, d: int, modulus: Sequence[int], gen: int | None = None):
        self.p = p
        self.d = d
        self.modulus = tuple(int(c) % p for c in modulus)
        self.card = p**d
        self._place = tuple(p**j for j in range(d))
        self.gen = find_generator(self) if gen is None else gen

    def __repr__(self) -> str:
        return (
            f"FieldCtx(p={self.p}, d={self.d}, "
            f"modulus='{format_coeffs(self.modulus)}', gen={self.coeffs(self.gen)})"
        )

    # -- encoding ---------------------------------------------------------

    def coeffs(self, x: int) -> list[int]:
        return [(x // w) % self.p for w in self._place]

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.d:
            raise ValueError(f"{len(coeffs)} coefficients for a degree-{self.d} field")
        return sum((int(c) % self.p) * w for c, w in zip(coeffs, self._place))

    def elements(self) -> range:
        return range(self.card)

    @cached_property
    def coeff_matrix(self) -> np.ndarray:
        """Row ``x`` holds the coefficient vector of element ``x``."""
        xs = np.arange(self.card, dtype=np.int64)
        return np.stack([(xs // w) % self.p for w in self._place], axis=1)

    # -- additive structure (works on ints and on numpy arrays) ------------

    def add(self, x, y):
        p = self.p
        if self.d == 1:
            return (x + y) % p
        out = 0
        for w in self._place:
            out = out + ((x // w + y // w) % p) * w
        return out

    def neg(self, x):
        p = self.p
        if self.d == 1:
            return (-x) % p
        out = 0
        for w in self._place:
            out = out + ((-(x // w)) % p) * w
        return out

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scale(self, k: int, x):
        """Multiply by the integer ``k`` viewed in GF(p)."""
        p = self.p
        if self.d == 1:
            return (k * x) % p
        out = 0
        for w in self._place:
            out = out + ((k * (x // w)) % p) * w
        return out

    # -- multiplicative structure -------------------------------------------

    def _polymul(self, x: int, y: int) -> int:
        p, d = self.p, self.d
        a, b = self.coeffs(x), self.coeffs(y)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        mod = self.modulus
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(d):
                    prod[k - d + j] -= c * mod[j]
        return self.from_coeffs(prod[:d])

    def mul(self, x, y):
        if self.d == 1:
            return (x * y) % self.p
        if isinstance(x, np.ndarray) or isinstance(y, np.ndarray):
            log, exp = self.log_table, self.exp_table
            res = exp[(log[x] + log[y]) % (self.card - 1)]
            return np.where((np.asarray(x) == 0) | (np.asarray(y) == 0), 0, res)
        if x == 0 or y == 0:
            return 0
        if self.has_tables:
            return int(self.exp_table[(self.log_table[x] + self.log_table[y]) % (self.card - 1)])
        return self._polymul(x, y)

    def pow(self, x: int, k: int) -> int:
        if x == 0:
            if k < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if k == 0 else 0
        k %= self.card - 1
        if self.d == 1:
            return pow(x, k, self.p)
        if self.has_tables:
            return int(self.exp_table[(self.log_table[x] * k) % (self.card - 1)])
        result, base = 1, x
        while k:
            if k & 1:
                result = self._polymul(result, base)
            base = self._polymul(base, base)
            k >>= 1
        return result

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(x, -1)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def order(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        if x == 0:
            raise ValueError("0 has no multiplicative order")
        order = self.card - 1
        for ell in _prime_factors(order) if order > 1 else ():
            while order % ell == 0 and self.pow(x, order // ell) == 1:
                order //= ell
        return order

    def power_of_gen(self, k: int) -> int:
        return self.pow(self.gen, k)

    # -- tables ----------------------------------------------------------------

    @property
    def has_tables(self) -> bool:
        return self.card <= TABLE_LIMIT and "exp_table" in self.__dict__

    def ensure_tables(self) -> "FieldCtx":
        if self.card > TABLE_LIMIT:
            raise ValueError(f"no log tables for fields above {TABLE_LIMIT} elements")
        self.exp_table  # noqa: B018
        return self

    @cached_property
    def exp_table(self) -> np.ndarray:
        if self.card > TABLE_LIMIT:
            raise ValueError(f"no log tables for fields above {TABLE_LIMIT} elements")
        size = self.card - 1
        exp = np.empty(size, dtype=np.int64)
        x = 1
        if self.d == 1:
            for k in range(size):
                exp[k] = x
                x = (x * self.gen) % self.p
        else:
            for k in range(size):
                exp[k] = x
                x = self._polymul(x, self.gen)
        log = np.full(self.card, -1, dtype=np.int64)
        log[exp] = np.arange(size, dtype=np.int64)
        self.__dict__["log_table"] = log
        return exp

    @cached_property
    def log_table(self) -> np.ndarray:
        self.exp_table  # noqa: B018  (fills log_table as a side effect)
        return self.__dict__["log_table"]

    def dlog(self, x):
        """Discrete log base ``gen``; -1 marks the zero element."""
        return self.log_table[x] if isinstance(x, np.ndarray) else int(self.log_table[x])

    # -- traces and squares ------------------------------------------------

    def frobenius(self, x: int, times: int = 1) -> int:
        return self.pow(x, self.p**times) if x else 0

    def trace(self, x: int, sub_degree: int = 1) -> int:
        return trace_to_subfield(self, sub_degree, x)

    @cached_property
    def absolute_trace_basis(self) -> np.ndarray:
        """``Tr_p(x^j)`` for the basis monomials; the absolute trace is linear."""
        vals = [self.trace(self._place[j], 1) for j in range(self.d)]
        return np.array(vals, dtype=np.int64)

    def absolute_trace(self, x):
        """``Tr_{GF(p^d)/GF(p)}`` as an integer in ``[0, p)``; arrays welcome."""
        if isinstance(x, np.ndarray):
            return (self.coeff_matrix[x] @ self.absolute_trace_basis) % self.p
        return int(np.dot(self.coeffs(x), self.absolute_trace_basis) % self.p)

    def is_square(self, x: int) -> bool:
        return is_square(self, x)

    @cached_property
    def quadratic_character_table(self) -> np.ndarray:
        """chi(x) for every element: 1 on squares, -1 on non-squares, 0 at 0."""
        if self.p == 2:
            raise ValueError("quadratic character needs odd characteristic")
        log = self.log_table
        chi = np.where(log % 2 == 0, 1, -1).astype(np.int64)
        chi[0] = 0
        return chi

    def quadratic_character(self, x):
        if isinstance(x, np.ndarray):
            return self.quadratic_character_table[x]
        if x == 0:
            return 0
        return 1 if is_square(self, x) else -1

    def subfield_elements(self, sub_degree: int) -> list[int]:
        """Elements of the subfield with ``p**sub_degree`` elements."""
        if self.d % sub_degree:
            raise ValueError(f"{sub_degree} does not divide {self.d}")
        k = (self.card - 1) // (self.p**sub_degree - 1)
        w = self.power_of_gen(k)
        out, x = [0], 1
        for _ in range(self.p**sub_degree - 1):
            out.append(x)
            x = self.mul(x, w)
        return out


def make_field(
    p: int,
    d: int,
    modulus: Sequence[int] | None = None,
    generator: int | Sequence[int] | None = None,
) -> FieldCtx:
    """Build GF(p^d).

    Without a modulus, the first monic irreducible of degree ``d`` is used,
    scanning the lower coefficients as the integer ``sum(c_j p^j)`` upward.
    ``generator`` may be an encoded element or a coefficient list; it must be
    primitive. Without one, the smallest primitive element is taken.
    """
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1:
        raise ValueError("extension degree must be at least 1")
    if modulus is None:
        modulus = smallest_irreducible(p, d)
    else:
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != d + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {d}")
        if not is_irreducible(p, modulus):
            raise ValueError(f"modulus {format_coeffs(modulus)} is reducible over GF({p})")
    if generator is None:
        return FieldCtx(p, d, modulus)
    ctx = FieldCtx(p, d, modulus, gen=1)
    gen = generator if isinstance(generator, int) else ctx.from_coeffs(generator)
    if not 0 < gen < ctx.card or ctx.order(gen) != ctx.card - 1:
        raise ValueError("generator is not a primitive element")
    return FieldCtx(p, d, modulus, gen=gen)


def smallest_irreducible(p: int, d: int) -> list[int]:
    if d == 1:
        return [0, 1]
    for k in range(p**d):
        low = [(k // p**j) % p for j in range(d)]
        if low[0] == 0:
            continue
        if is_irreducible(p, low + [1]):
            return low + [1]
    raise AssertionError("unreachable: irreducibles exist in every degree")


def find_generator(ctx: FieldCtx) -> int:
    """Smallest element (in encoded order) of multiplicative order ``card - 1``."""
    if ctx.card == 2:
        return 1
    for x in range(1, ctx.card):
        if ctx.order(x) == ctx.card - 1:
            return x
    raise AssertionError("unreachable: the multiplicative group is cyclic")


def trace_to_subfield(ctx: FieldCtx, sub_degree: int, x: int) -> int:
    """``sum_i x^(p^(sub_degree*i))``, an element of the subfield of size p^sub_degree."""
    if sub_degree < 1 or ctx.d % sub_degree:
        raise ValueError(f"{sub_degree} does not divide {ctx.d}")
    total, y = 0, x
    q = ctx.p**sub_degree
    for _ in range(ctx.d // sub_degree):
        total = ctx.add(total, y)
        y = ctx.pow(y, q) if y else 0
    return total


def is_square(ctx: FieldCtx, x: int) -> bool:
    if ctx.p == 2:
        raise ValueError("square classes need odd characteristic")
    if x == 0:
        raise ValueError("0 has no square class")
    if ctx.has_tables:
        return bool(ctx.log_table[x] % 2 == 0)
    return ctx.pow(x, (ctx.card - 1) // 2) == 1
