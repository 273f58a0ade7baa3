"""Desk-scale property suites behind ``cyclicweights oracles``."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sympy import factorint

from .chars import gaussian_period_direct, periods_closed_N2
from .charsum import (
    all_patterns,
    count_F_brute,
    f_character_formula,
    f_closed_e4N2,
    quad_pair_sum,
    weil_gap,
)
from .closedform import pi_trace, select_case
from .code import code_params
from .curve import count_points_brute, count_points_closed, primary_pi
from .ffield import make_field

LEMMA33_INSTANCES = [(5, 1, 2, 4, 4), (3, 2, 2, 4, 4), (3, 2, 2, 8, 4)]
PERIOD_FIELDS = [(3, 2), (5, 2), (3, 4), (13, 2), (17, 2)]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, label: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(label)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.passed} passed, {self.failed} failed"


def odd_prime_powers(lo: int, hi: int) -> list[tuple[int, int]]:
    """``(p, d)`` for every odd prime power ``lo <= p^d <= hi``."""
    out = []
    for card in range(max(lo, 3), hi + 1):
        f = factorint(card)
        if len(f) == 1:
            ((p, d),) = f.items()
            if p != 2:
                out.append((p, d))
    return out


def lemma31(max_r: int = 169, min_r: int = 9) -> SuiteResult:
    """``sum_x chi((x+a)(x+b)) = -1`` for every pair a != b."""
    res = SuiteResult("lemma31")
    for p, d in odd_prime_powers(min_r, max_r):
        ctx = make_field(p, d).ensure_tables()
        r = ctx.card
        xs = np.arange(r, dtype=np.int64)
        chi = ctx.quadratic_character_table
        shifted = ctx.add(xs[:, None], xs[None, :])  # shifted[b, x] = x + b
        for a in range(r):
            sums = chi[ctx.mul(shifted, ctx.add(xs, a)[None, :])].sum(axis=1)
            mask = xs != a
            bad = np.flatnonzero(sums[mask] != -1)
            res.passed += int(mask.sum()) - len(bad)
            res.failed += len(bad)
            for b in bad[:3]:
                res.failures.append(f"GF({r}) a={a} b={xs[mask][b]}")
    return res


def lemma32(max_card: int = 10_000) -> SuiteResult:
    """Closed point count of y^2 = x^3 + 4x against brute force over every odd GF(p^n)."""
    res = SuiteResult("lemma32")
    for p, d in odd_prime_powers(3, max_card):
        ctx = make_field(p, d)
        res.check(count_points_closed(p, d) == count_points_brute(ctx), f"GF({p}^{d})")
    for p, expected in ((17, (1, 4)), (13, (3, 2))):
        pi = primary_pi(p)
        res.check(pi.re == expected[0] and abs(pi.im) == expected[1], f"pi({p}) = {pi}")
    return res


def lemma33(instances=LEMMA33_INSTANCES) -> SuiteResult:
    """Brute force, character expansion, and closed form agree on every pattern."""
    res = SuiteResult("lemma33")
    for args in instances:
        params = code_params(*args)
        T = pi_trace(params)
        case = select_case(params)
        for pattern in all_patterns(4, 2):
            brute = count_F_brute(params, pattern)
            formula = f_character_formula(params, pattern)
            closed = f_closed_e4N2(params, pattern, T, case.gb1_square)
            res.check(brute == formula == closed, f"{args} {pattern}: {brute}/{formula}/{closed}")
    return res


def weil(instances=LEMMA33_INSTANCES) -> SuiteResult:
    res = SuiteResult("weil")
    for args in instances:
        params = code_params(*args)
        for pattern in all_patterns(params.e, params.N):
            audit = weil_gap(params, pattern)
            res.check(audit.holds, f"{args} {pattern}: gap {audit.gap} > {audit.bound}")
    return res


def _normal_form(counts: np.ndarray) -> np.ndarray:
    # Z[zeta_p], p prime: reduce zeta^(p-1) = -(1 + ... + zeta^(p-2))
    return counts[..., :-1] - counts[..., -1:]


def periods(max_r: int = 1000) -> SuiteResult:
    """Quadratic periods: direct sum vs closed form, eta_1 + eta_alpha = -1,
    coset dependence only, and the sum over all u vanishing."""
    res = SuiteResult("periods")
    for p, d in PERIOD_FIELDS:
        ctx = make_field(p, d).ensure_tables()
        eta1, eta_a = periods_closed_N2(p, 1, d)
        d1 = gaussian_period_direct(ctx, 2, 1)
        da = gaussian_period_direct(ctx, 2, ctx.gen)
        res.check(d1 == eta1 and da == eta_a, f"GF({p}^{d}) direct {d1},{da} closed {eta1},{eta_a}")
        res.check(eta1 + eta_a == -1, f"GF({p}^{d}) eta sum")
    for p, d in odd_prime_powers(3, max_r):
        ctx = make_field(p, d).ensure_tables()
        zs = ctx.exp_table[::2]
        us = np.arange(ctx.card, dtype=np.int64)
        traces = ctx.absolute_trace(ctx.mul(zs[:, None], us[None, :]))
        counts = np.zeros((ctx.card, p), dtype=np.int64)
        np.add.at(counts, (np.broadcast_to(us, traces.shape), traces), 1)
        forms = _normal_form(counts)
        res.check(not forms.sum(axis=0).any(), f"GF({p}^{d}) sum over u")
        cosets = ctx.log_table[1:] % 2
        ref = {k: forms[1 + int(np.flatnonzero(cosets == k)[0])] for k in (0, 1)}
        same = all((forms[1:][cosets == k] == ref[k]).all() for k in (0, 1))
        res.check(same, f"GF({p}^{d}) coset dependence")
    return res


SUITES = {
    "lemma31": lemma31,
    "lemma32": lemma32,
    "lemma33": lemma33,
    "weil": weil,
    "periods": periods,
}
