import pytest

from cyclicweights.closedform import (
    closed_weight_distribution,
    degenerate_lambdas,
    nondegenerate_rows,
    nondegenerate_rows_from_patterns,
    pi_trace,
    select_case,
)
from cyclicweights.code import ParameterError, brute_weight_distribution, code_params, parse_enumerator, weight_from_lambda
from cyclicweights.ffield import make_field

EXAMPLES = {
    (17, 1, 2, 4, 4): "1+576x^48+576x^54+5472x^64+18432x^66+34560x^68+18432x^70+5472x^72",
    (13, 1, 2, 4, 4): "1+336x^38+336x^40+1680x^48+7392x^50+9744x^52+7392x^54+1680x^56",
    (3, 2, 2, 4, 4): "1+160x^24+160x^30+240x^32+1920x^34+1920x^36+1920x^38+240x^40",
    (3, 2, 2, 8, 4): "1+160x^52+160x^56+320x^64+1920x^68+1760x^72+1920x^76+320x^80",
}


@pytest.mark.parametrize("args", list(EXAMPLES))
def test_examples_closed(args):
    params = code_params(*args)
    expected = parse_enumerator(EXAMPLES[args], params.n)
    assert closed_weight_distribution(params) == expected


@pytest.mark.parametrize(
    "args, case",
    [((17, 1, 2, 4, 4), "square"), ((13, 1, 2, 4, 4), "nonsquare"),
     ((3, 2, 2, 4, 4), "square"), ((3, 2, 2, 8, 4), "nonsquare")],
)
def test_case_selection_examples(args, case):
    assert select_case(code_params(*args)).name == case


@pytest.mark.parametrize(
    "args",
    [(5, 1, 2, 4, 4), (3, 2, 2, 4, 4), (3, 2, 2, 8, 4), (13, 1, 2, 4, 4), (29, 1, 2, 4, 4), (37, 1, 2, 12, 4), (5, 2, 2, 8, 4)],
)
def test_closed_matches_brute(args):
    params = code_params(*args)
    assert closed_weight_distribution(params) == brute_weight_distribution(params)


@pytest.mark.parametrize("args", [(17, 1, 2, 4, 4), (13, 1, 2, 4, 4), (3, 2, 2, 4, 4), (3, 2, 2, 8, 4)])
def test_table_rows_equal_pattern_sum(args):
    params = code_params(*args)
    assert sorted(nondegenerate_rows(params)) == nondegenerate_rows_from_patterns(params)


def test_degenerate_rows_example1():
    params = code_params(17, 1, 2, 4, 4)
    rows = degenerate_lambdas(params)
    assert sum(f for _, f in rows) == 4 * (params.r - 1)
    assert sorted(weight_from_lambda(params, lam) for lam, _ in rows) == [48, 54]
    assert [f for _, f in rows] == [576, 576]


def test_degenerate_rows_example2():
    params = code_params(13, 1, 2, 4, 4)
    rows = degenerate_lambdas(params)
    assert [f for _, f in rows] == [336, 336]
    assert sorted(weight_from_lambda(params, lam) for lam, _ in rows) == [38, 40]


@pytest.mark.parametrize("args", [(5, 1, 2, 4, 4), (13, 1, 2, 4, 4), (3, 2, 2, 8, 4), (41, 1, 2, 8, 4)])
def test_totality_and_integrality(args):
    params = code_params(*args)
    dist = closed_weight_distribution(params)
    assert dist.total == params.r**2
    assert all(isinstance(w, int) and 0 <= w <= params.n for w, _ in dist.items())
    assert dict(dist.items())[0] == 1


def test_weight_count_small_instance():
    # the two degenerate weights can coincide with nondegenerate ones
    dist = closed_weight_distribution(code_params(5, 1, 2, 4, 4))
    assert len([w for w, _ in dist.items() if w]) == 6


def test_pi_trace_values():
    assert pi_trace(code_params(17, 1, 2, 4, 4)) == -30
    assert pi_trace(code_params(3, 2, 2, 4, 4)) == 18


def test_generator_invariance_gf25():
    ctx = make_field(5, 2).ensure_tables()
    gens = [g for g in range(1, 25) if ctx.order(g) == 24][:3]
    dists = [closed_weight_distribution(code_params(5, 1, 2, 4, 4, generator=g)) for g in gens]
    cases = {select_case(code_params(5, 1, 2, 4, 4, generator=g)) for g in gens}
    assert dists[0] == dists[1] == dists[2]
    assert len(cases) == 1


@pytest.mark.parametrize("args", [(5, 1, 4, 4, 4), (7, 1, 2, 3, 3), (13, 1, 2, 2, 2)])
def test_closed_form_rejects_other_shapes(args):
    params = code_params(*args)
    with pytest.raises(ParameterError):
        closed_weight_distribution(params)
