"""Exact matrix kernel: rref, solvers, rank factorization, subspace tests."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from dualcore import exactmat as xm
from dualcore.scalars import PrimeField, RationalField

Q = RationalField()
F2 = PrimeField(2)


def qmat(rows):
    return xm.mat([[Fraction(v) for v in r] for r in rows])


entries = st.integers(min_value=-6, max_value=6).map(Fraction)


def square(n):
    return st.lists(
        st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(xm.mat)


any_square = st.integers(min_value=1, max_value=4).flatmap(square)


def test_mat_is_hashable_and_frozen():
    a = qmat([[1, 2], [3, 4]])
    assert hash(a) == hash(qmat([[1, 2], [3, 4]]))
    assert xm.shape(a) == (2, 2)


def test_mul_and_eye():
    a = qmat([[1, 2], [3, 4]])
    assert xm.mul(Q, a, xm.eye(Q, 2)) == a
    b = qmat([[0, 1], [1, 0]])
    assert xm.mul(Q, a, b) == qmat([[2, 1], [4, 3]])


@given(any_square)
@settings(max_examples=60)
def test_rref_is_idempotent(a):
    r1, piv1, rank1 = xm.rref(Q, a)
    r2, piv2, rank2 = xm.rref(Q, r1)
    assert r1 == r2
    assert piv1 == piv2
    assert rank1 == rank2 == len(piv1)


def test_rank_golden():
    assert xm.rank(Q, qmat([[1, 2], [2, 4]])) == 1
    assert xm.rank(Q, qmat([[1, 0], [0, 1]])) == 2
    assert xm.rank(Q, qmat([[0, 0], [0, 0]])) == 0


@given(any_square, any_square)
@settings(max_examples=60)
def test_solve_right_is_sound_and_complete(m, t):
    if xm.shape(m)[0] != xm.shape(t)[0]:
        return
    x = xm.solve_right(Q, m, t)
    if x is not None:
        assert xm.mul(Q, m, x) == t
    else:
        # unsolvable iff t's columns escape m's column space
        assert xm.rank(Q, _hstack(m, t)) > xm.rank(Q, m)


def _hstack(a, b):
    return xm.mat([list(ra) + list(rb) for ra, rb in zip(a, b)])


@given(any_square, any_square)
@settings(max_examples=60)
def test_solve_left_is_sound(m, t):
    if xm.shape(m)[1] != xm.shape(t)[1]:
        return
    x = xm.solve_left(Q, m, t)
    if x is not None:
        assert xm.mul(Q, x, m) == t


@given(any_square)
@settings(max_examples=80)
def test_rank_factorization_and_inner_inverse(a):
    f, g, r = xm.rank_factorization(Q, a)
    assert r == xm.rank(Q, a)
    if r > 0:
        assert xm.mul(Q, f, g) == a
    inner = xm.inner_inverse(Q, a)
    assert xm.mul(Q, xm.mul(Q, a, inner), a) == a


def test_inner_inverse_golden():
    a = qmat([[0, 0], [1, 0]])
    g = xm.inner_inverse(Q, a)
    assert xm.mul(Q, xm.mul(Q, a, g), a) == a


def test_inner_inverse_prime_field():
    a = xm.mat([[1, 1], [0, 0]])
    g = xm.inner_inverse(F2, a)
    assert xm.mul(F2, xm.mul(F2, a, g), a) == a


@given(any_square, any_square)
@settings(max_examples=60)
def test_left_ideal_contains_matches_solvability(x, c):
    if xm.shape(x) != xm.shape(c):
        return
    # x in Rc iff some r solves r.c = x
    member = xm.left_ideal_contains(Q, x, c)
    assert member == (xm.solve_left(Q, c, x) is not None)


@given(any_square)
@settings(max_examples=60)
def test_null_space_annihilates(a):
    for v in xm.null_space_basis(Q, a):
        assert all(Q.is_zero(e) for row in xm.mul(Q, a, xm.transpose(xm.mat([v]))) for e in row)


def test_direct_sum_golden():
    # uR = span(e11), r(b) for b = e11 is the column space annihilated by e11
    u = qmat([[1, 0], [0, 0]])
    b = qmat([[1, 0], [0, 0]])
    is_sum, is_direct = xm.direct_sum_right_ideals(Q, u, b)
    assert is_sum and is_direct


def test_transpose_and_conj():
    a = qmat([[1, 2], [3, 4]])
    assert xm.transpose(xm.transpose(a)) == a
    assert xm.conj_entries(Q, a) == a
