import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclicweights.ffield import (
    find_generator,
    format_coeffs,
    is_irreducible,
    is_square,
    make_field,
    parse_coeffs,
    trace_to_subfield,
)

FIELDS = [(2, 3), (3, 1), (3, 2), (5, 2), (7, 1), (3, 3), (17, 2), (3, 4)]


def naive_order(ctx, x):
    k, y = 1, x
    while y != 1:
        y = ctx._polymul(y, x) if ctx.d > 1 else (y * x) % ctx.p
        k += 1
    return k


def test_make_field_cardinality():
    assert make_field(17, 2).card == 289
    assert make_field(3, 4).card == 81


@pytest.mark.parametrize("p, d", [(4, 2), (1, 3), (15, 1)])
def test_make_field_rejects_non_prime(p, d):
    with pytest.raises(ValueError, match="not prime"):
        make_field(p, d)


def test_make_field_rejects_bad_modulus():
    with pytest.raises(ValueError):
        make_field(3, 0)
    with pytest.raises(ValueError, match="reducible"):
        make_field(3, 2, modulus=[2, 0, 1])  # x^2 - 1
    with pytest.raises(ValueError, match="monic"):
        make_field(3, 2, modulus=[1, 0, 2])


def test_default_modulus_is_first_irreducible():
    # brute-force the first irreducible by trial roots (degree 2 and 3 only)
    for p, d in [(3, 2), (5, 2), (17, 2), (2, 3), (3, 3)]:
        for k in range(p**d):
            low = [(k // p**j) % p for j in range(d)]
            poly = low + [1]
            has_root = any(sum(c * x**i for i, c in enumerate(poly)) % p == 0 for x in range(p))
            if not has_root:
                break
        assert list(make_field(p, d).modulus) == poly


@pytest.mark.parametrize("p, expected", [(5, 2), (7, 3), (11, 2), (13, 2)])
def test_find_generator_prime_fields(p, expected):
    ctx = make_field(p, 1)
    assert ctx.gen == expected
    orders = {x: naive_order(ctx, x) for x in range(1, p)}
    assert min(x for x, o in orders.items() if o == p - 1) == expected


def test_find_generator_gf9():
    ctx = make_field(3, 2)
    assert list(ctx.modulus) == [1, 0, 1]
    assert naive_order(ctx, ctx.gen) == 8
    # x itself squares to -1 under x^2 + 1, so the first primitive element is 1 + x
    assert naive_order(ctx, ctx.from_coeffs([0, 1])) == 4
    assert ctx.coeffs(ctx.gen) == [1, 1]


@pytest.mark.parametrize("p, d", FIELDS)
def test_generator_order_and_determinism(p, d):
    ctx = make_field(p, d)
    assert naive_order(ctx, ctx.gen) == ctx.card - 1
    assert make_field(p, d, modulus=ctx.modulus).gen == ctx.gen
    assert find_generator(ctx) == ctx.gen


def test_custom_generator():
    ctx = make_field(5, 2)
    other = ctx.pow(ctx.gen, 7)
    alt = make_field(5, 2, generator=other)
    assert alt.gen == other
    with pytest.raises(ValueError, match="primitive"):
        make_field(5, 2, generator=ctx.pow(ctx.gen, 2))
    assert make_field(5, 2, generator=ctx.coeffs(other)).gen == other


@pytest.mark.parametrize("p, d", FIELDS)
def test_tables_agree_with_polynomial_arithmetic(p, d):
    ctx = make_field(p, d)
    plain = [(x, y, ctx.mul(x, y)) for x, y in itertools.product(range(ctx.card), repeat=2)
             if x * ctx.card + y < 4000]
    ctx.ensure_tables()
    for x, y, xy in plain:
        assert ctx.mul(x, y) == xy
    xs = np.arange(ctx.card)
    assert (ctx.exp_table[ctx.log_table[1:]] == xs[1:]).all()


@pytest.mark.parametrize("p, d", [(3, 2), (2, 3), (5, 2)])
def test_field_axioms_exhaustive(p, d):
    ctx = make_field(p, d)
    els = range(ctx.card)
    for a in els:
        assert ctx.add(a, ctx.neg(a)) == 0
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
        for b in els:
            assert ctx.add(a, b) == ctx.add(b, a)
            for c in els:
                assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
                assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 288), st.integers(0, 288), st.integers(0, 288))
def test_field_axioms_sampled_gf289(a, b, c):
    ctx = make_field(17, 2)
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
    assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))


def test_vector_ops_match_scalar(gf81):
    xs = np.arange(81)
    y = 37
    assert list(gf81.add(xs, y)) == [gf81.add(int(x), y) for x in xs]
    assert list(gf81.mul(xs, y)) == [gf81.mul(int(x), y) for x in xs]
    assert list(gf81.absolute_trace(xs)) == [gf81.trace(int(x)) for x in xs]


def test_trace_examples():
    ctx = make_field(3, 4)
    assert trace_to_subfield(ctx, 1, 1) == 1  # 4*1 = 1 in GF(3)
    # Tr_{r/q} of c in GF(q) is m*c
    for sub in (1, 2):
        m = ctx.d // sub
        for c in ctx.subfield_elements(sub):
            assert trace_to_subfield(ctx, sub, c) == ctx.scale(m, c)
    with pytest.raises(ValueError):
        trace_to_subfield(ctx, 3, 1)


@pytest.mark.parametrize("p, d, sub", [(3, 4, 2), (3, 4, 1), (5, 2, 1), (2, 6, 3), (17, 2, 1)])
def test_trace_lands_in_subfield_and_kernel_size(p, d, sub):
    ctx = make_field(p, d)
    q = p**sub
    zeros = 0
    for x in range(ctx.card):
        t = trace_to_subfield(ctx, sub, x)
        assert ctx.pow(t, q) == t or t == 0
        zeros += t == 0
    assert zeros == ctx.card // q


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 80), st.integers(0, 80))
def test_trace_additive_and_frobenius_invariant(x, y):
    ctx = make_field(3, 4)
    for sub in (1, 2):
        tr = lambda z: trace_to_subfield(ctx, sub, z)  # noqa: E731
        assert tr(ctx.add(x, y)) == ctx.add(tr(x), tr(y))
        assert tr(ctx.pow(x, 3**sub)) == tr(x)


def test_is_square_examples():
    ctx = make_field(17, 2)
    assert is_square(ctx, ctx.mul(ctx.gen, ctx.gen))
    assert not is_square(ctx, ctx.gen)
    # GF(q)* sits inside the squares when m is even
    assert is_square(ctx, 2)
    assert all(is_square(ctx, c) for c in range(1, 17))
    with pytest.raises(ValueError):
        is_square(ctx, 0)
    with pytest.raises(ValueError):
        is_square(make_field(2, 3), 1)


@pytest.mark.parametrize("p, d", [(3, 2), (5, 2), (7, 2), (3, 5), (13, 2), (11, 3), (53, 2)])
def test_square_classes_exhaustive(p, d):
    ctx = make_field(p, d)
    assert ctx.card <= 3000
    sq = [None] + [is_square(ctx, x) for x in range(1, ctx.card)]
    assert sum(sq[1:]) == (ctx.card - 1) // 2
    ctx.ensure_tables()
    assert [None] + [is_square(ctx, x) for x in range(1, ctx.card)] == sq
    for x in range(1, ctx.card):
        for y in range(1, ctx.card, 7):
            assert sq[ctx.mul(x, y)] == (sq[x] == sq[y])


def test_coefficient_io_roundtrip():
    assert parse_coeffs("2,1,1") == [2, 1, 1]
    assert format_coeffs([2, 1, 1]) == "2,1,1"
    ctx = make_field(3, 4)
    for x in range(ctx.card):
        assert ctx.from_coeffs(parse_coeffs(format_coeffs(ctx.coeffs(x)))) == x


def test_is_irreducible():
    assert is_irreducible(3, [1, 0, 1])
    assert not is_irreducible(3, [2, 0, 1])
