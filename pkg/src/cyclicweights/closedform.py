"""Closed-form weight distribution of the e=4, N=2 codes.

Nondegenerate pairs ((a + beta^t b) != 0 for all t) contribute five
(modified weight, frequency) rows whose frequencies come from the point count
of y^2 = x^3 + 4x. The 4(r-1) degenerate pairs contribute two more rows, and
(0, 0) gives the zero codeword.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chars import periods_closed_N2
from .charsum import all_patterns, f_closed_e4N2, gb1_is_square
from .code import CodeParams, ParameterError, WeightDistribution, weight_from_lambda
from .curve import trace_power


@dataclass(frozen=True)
class CaseSelector:
    gb1_square: bool

    @property
    def name(self) -> str:
        return "square" if self.gb1_square else "nonsquare"


def _require_e4N2(params: CodeParams) -> None:
    if (params.e, params.N) != (4, 2) or params.p == 2:
        raise ParameterError("closed form requires e=4, N=2")


def select_case(params: CodeParams) -> CaseSelector:
    """Whether ``g(beta+1)`` is a square in GF(r)."""
    _require_e4N2(params)
    return CaseSelector(gb1_is_square(params))


def pi_trace(params: CodeParams) -> int:
    return trace_power(params.p, params.s * params.m)


def nondegenerate_rows(params: CodeParams, case: CaseSelector | None = None) -> list[tuple[Fraction, int]]:
    """The five (lambda, frequency) rows for pairs off the four degenerate lines."""
    _require_e4N2(params)
    case = case or select_case(params)
    r, h, q = params.r, params.h, params.q
    eta1, eta_a = periods_closed_N2(params.p, params.s, params.m)
    T = pi_trace(params)
    lams = [
        Fraction(2 * h * eta1, q),
        Fraction(2 * h * eta_a, q),
        Fraction(2 * h * (3 * eta1 + eta_a), 4 * q),
        Fraction(2 * h * (eta1 + 3 * eta_a), 4 * q),
        Fraction(-h, q),
    ]
    if case.gb1_square:
        freqs = [
            Fraction((r - 1) * (r - 15 - T), 16),
            Fraction((r - 1) * (r - 15 - T), 16),
            Fraction((r - 1) * (r - 3 + T), 4),
            Fraction((r - 1) * (r - 3 + T), 4),
            Fraction(3 * (r - 1) * (r + 1 - T), 8),
        ]
    else:
        freqs = [
            Fraction((r - 1) * (r + 1 - T), 16),
            Fraction((r - 1) * (r + 1 - T), 16),
            Fraction((r - 1) * (r - 3 + T), 4),
            Fraction((r - 1) * (r - 3 + T), 4),
            Fraction((r - 1) * (3 * r - 13 - 3 * T), 8),
        ]
    for f in freqs:
        if f.denominator != 1 or f < 0:
            raise ParameterError(f"frequency {f} is not a nonnegative integer")
    return [(lam, int(f)) for lam, f in zip(lams, freqs)]


def nondegenerate_rows_from_patterns(params: CodeParams, case: CaseSelector | None = None) -> list[tuple[Fraction, int]]:
    """The same rows, rebuilt by summing the closed ``f(c)`` over all 16 sign patterns."""
    _require_e4N2(params)
    case = case or select_case(params)
    eta1, eta_a = periods_closed_N2(params.p, params.s, params.m)
    T = pi_trace(params)
    scale = Fraction(2 * params.h, 4 * params.q)
    rows: dict[Fraction, int] = {}
    for pattern in all_patterns(4, 2):
        # c_i square <=> c_i^{-1} square, so eta_{c_i^{-1}} follows the pattern
        lam = scale * sum(eta_a if k else eta1 for k in pattern.residues)
        rows[lam] = rows.get(lam, 0) + f_closed_e4N2(params, pattern, T, case.gb1_square)
    return sorted(rows.items())


def degenerate_lambdas(params: CodeParams) -> list[tuple[Fraction, int]]:
    """(lambda, frequency) for pairs ``(-beta^t b, b)``, b != 0, merged over t and b.

    Each term is evaluated from the square class of ``b g^i (beta^i - beta^t)``
    for ``b`` running over one square and one non-square representative; each
    class holds ``(r-1)/2`` values of ``b``.
    """
    _require_e4N2(params)
    ctx = params.ctx
    r, h, q = params.r, params.h, params.q
    eta1, eta_a = periods_closed_N2(params.p, params.s, params.m)
    beta_pows = [ctx.pow(params.beta, i) for i in range(5)]
    g_pows = [ctx.pow(params.g, i) for i in range(5)]
    rows: dict[Fraction, int] = {}
    for t in range(1, 5):
        for b in (1, ctx.gen):
            total = Fraction(r - 1, 2)
            for i in range(1, 5):
                if i == t:
                    continue
                u = ctx.mul(ctx.mul(b, g_pows[i]), ctx.sub(beta_pows[i], beta_pows[t]))
                total += eta1 if ctx.is_square(u) else eta_a
            lam = Fraction(2 * h, 4 * q) * total
            rows[lam] = rows.get(lam, 0) + (r - 1) // 2
    return sorted(rows.items())


def closed_weight_distribution(params: CodeParams) -> WeightDistribution:
    _require_e4N2(params)
    if (params.q - 1) % params.h or params.h % 4:
        raise ParameterError("closed form requires 4 | h | q-1")
    case = select_case(params)
    pairs = [(0, 1)]
    for lam, freq in nondegenerate_rows(params, case) + degenerate_lambdas(params):
        pairs.append((weight_from_lambda(params, lam), freq))
    dist = WeightDistribution.from_pairs(pairs, params.n, params.q)
    if dist.total != params.r**2:
        raise ArithmeticError(f"frequencies sum to {dist.total}, expected {params.r ** 2}")
    return dist
