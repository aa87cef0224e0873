from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nichols_sn.cyclo import ONE, root_of_unity
from nichols_sn.diagonal import DiagonalBraiding
from nichols_sn.nichols import (
    BUDGET_ENV,
    BudgetExceeded,
    GradedDims,
    braid_action,
    braid_lift,
    hilbert_prefix,
    naive_symmetrizer,
    quantum_symmetrizer,
    reduced_word,
    symmetrizer_rank,
)
from nichols_sn.permcore import CycleType, Permutation, enumerate_class
from nichols_sn.reps import resolve_label
from nichols_sn.ydmod import BraidingOperator, braiding, build_module


def module(n: int, s: str, t: str, label: str):
    p = Permutation.parse(s, n)
    return build_module(enumerate_class(n, CycleType.parse(t, n)), p, resolve_label(label, p))


def diagonal(rows) -> BraidingOperator:
    return BraidingOperator.from_diagonal(DiagonalBraiding(tuple(tuple(r) for r in rows)))


def inversions(perm) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])


def word_to_perm(word, d: int) -> tuple[int, ...]:
    w = list(range(d))
    for i in word:
        # right multiplication by s_i swaps positions i, i+1 in one-line notation
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


S3_TRANSPOSITIONS = module(3, "(1 2)", "2", "sgn")


@given(st.permutations(list(range(6))), st.booleans())
def test_reduced_words_are_reduced(perm, last):
    word = reduced_word(perm, last)
    assert len(word) == inversions(perm)
    assert word_to_perm(word, 6) == tuple(perm)


@given(st.permutations(list(range(4))), st.integers(0, 80))
@settings(max_examples=60)
def test_braid_lift_does_not_depend_on_the_reduced_word(perm, seed):
    c = braiding(S3_TRANSPOSITIONS)
    first, last = reduced_word(perm), reduced_word(perm, last=True)
    w = tuple((seed // 3**k) % 3 for k in range(4))
    assert braid_lift(c, first, {w: ONE}) == braid_lift(c, last, {w: ONE})


@given(st.permutations(list(range(4))), st.integers(0, 6**4 - 1))
@settings(max_examples=40)
def test_matsumoto_on_the_two_transposition_module(perm, code):
    m = module(4, "(1 2)(3 4)", "2^2", "d4:rho2")
    c = braiding(m)
    w = tuple((code // 6**k) % 6 for k in range(4))
    assert braid_lift(c, reduced_word(perm), {w: ONE}) == braid_lift(c, reduced_word(perm, True), {w: ONE})


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_recursive_symmetrizer_matches_the_sum_over_reduced_words(d):
    c = braiding(S3_TRANSPOSITIONS)
    fast = quantum_symmetrizer(c, d)
    assert fast == naive_symmetrizer(c, d)
    assert fast == naive_symmetrizer(c, d, last=True)


def test_braid_action_checks_its_range():
    c = braiding(S3_TRANSPOSITIONS)
    with pytest.raises(ValueError):
        braid_action(c, 3, 3)
    sigma = braid_action(c, 2, 1)
    assert sigma({(0, 0): ONE}) == {(0, 0): -ONE}


def test_symmetric_group_module_of_dimension_twelve():
    g = hilbert_prefix(S3_TRANSPOSITIONS, 5)
    assert g.dims == (1, 3, 4, 3, 1, 0)
    assert g.exhausted and g.total == 12
    assert g.dims[:5] == g.dims[4::-1]


def test_dense_and_sparse_agree():
    assert hilbert_prefix(S3_TRANSPOSITIONS, 3, method="dense").dims == (1, 3, 4, 3)
    m = module(3, "(1 2 3)", "3", "chi3")
    assert hilbert_prefix(m, 3, method="dense") == hilbert_prefix(m, 3)


@pytest.mark.parametrize("order", [2, 3, 4, 5, 6])
def test_one_dimensional_braiding_truncates_at_the_order(order):
    # B(V) = k[x]/(x^N) for q a primitive N-th root of unity
    c = diagonal([[root_of_unity(order)]])
    g = hilbert_prefix(c, order + 1)
    assert g.dims == (1,) * order + (0, 0)
    assert g.total == order


@pytest.mark.parametrize("orders", [(2, 2), (2, 3), (3, 3), (2, 2, 2)])
def test_quantum_linear_spaces(orders):
    # q_ij q_ji = 1 off the diagonal: the Hilbert series is Π (1 + t + ... + t^{N_i - 1})
    n = len(orders)
    q = [[ONE] * n for _ in range(n)]
    for i, k in enumerate(orders):
        q[i][i] = root_of_unity(k)
    if n > 1:
        q[0][1], q[1][0] = root_of_unity(3), root_of_unity(3, 2)
    series = [1]
    for k in orders:
        series = [sum(series[j] for j in range(max(0, i - k + 1), min(i, len(series) - 1) + 1))
                  for i in range(len(series) + k - 1)]
    top = len(series)
    g = hilbert_prefix(diagonal(q), top)
    assert g.dims == tuple(series) + (0,)
    assert g.total == math.prod(orders)


def test_cartan_type_a2_at_minus_one():
    # q_ii = -1, q12 q21 = -1: dimension 8 with series (1, 2, 2, 2, 1)
    g = hilbert_prefix(diagonal([[-1, -1], [1, -1]]), 5)
    assert g.dims == (1, 2, 2, 2, 1, 0)


def test_symmetric_algebra_never_exhausts():
    g = hilbert_prefix(diagonal([[1, 1], [1, 1]]), 4)
    assert g.dims == (1, 2, 3, 4, 5)
    assert not g.exhausted and g.total is None


def test_budget(monkeypatch):
    with pytest.raises(BudgetExceeded) as info:
        hilbert_prefix(S3_TRANSPOSITIONS, 5, budget=30)
    assert info.value.degree == 4
    assert info.value.completed.dims == (1, 3, 4, 3)
    monkeypatch.setenv(BUDGET_ENV, "10")
    with pytest.raises(BudgetExceeded):
        hilbert_prefix(S3_TRANSPOSITIONS, 3)


def test_argument_errors():
    with pytest.raises(ValueError):
        hilbert_prefix(S3_TRANSPOSITIONS, -1)
    with pytest.raises(ValueError):
        symmetrizer_rank({}, method="magic")
    with pytest.raises(ValueError):
        GradedDims((2, 1), False)
    assert hilbert_prefix(S3_TRANSPOSITIONS, 0).dims == (1,)
