from fractions import Fraction
from itertools import combinations, permutations
from math import gcd, prod

from hypothesis import given, settings
from hypothesis import strategies as st

from sigcalc.linalg import (
    det,
    elementary_divisors,
    matmul,
    nullspace,
    rank,
    rref,
    smith_normal_form,
    solve,
)

small = st.integers(-6, 6)


def matrices(min_rows=1, max_rows=4, min_cols=1, max_cols=4):
    return st.integers(min_rows, max_rows).flatmap(
        lambda r: st.integers(min_cols, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


square = st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))


def leibniz(a):
    n = len(a)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i, j in combinations(range(n), 2) if p[i] > p[j])
        total += (-1) ** inv * prod(a[i][p[i]] for i in range(n))
    return total


def determinantal_divisors(a):
    """gcd of all k x k minors, k = 1..rank; the classical SNF invariant."""
    nr, nc = len(a), len(a[0])
    out = []
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for rows in combinations(range(nr), k):
            for cols in combinations(range(nc), k):
                g = gcd(g, leibniz([[a[r][c] for c in cols] for r in rows]))
        if g == 0:
            break
        out.append(g)
    return out


def test_rref_small_example():
    r, pivots = rref([[1, 2, 3], [2, 4, 7]])
    assert pivots == [0, 2]
    assert r == [[1, 2, 0], [0, 0, 1]]


def test_solve_inconsistent_returns_none():
    assert solve([[1, 1], [1, 1]], [1, 2]) is None


def test_nullspace_of_empty_system_is_identity():
    assert nullspace([], 3) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_snf_known_case():
    _, d, _ = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [d[i][i] for i in range(3)] == [2, 6, 12]


@given(square)
def test_det_matches_leibniz(a):
    assert det(a) == leibniz(a)


@given(matrices())
def test_nullspace_vectors_are_annihilated(a):
    basis = nullspace(a)
    assert len(basis) == len(a[0]) - rank(a)
    for v in basis:
        assert all(sum(Fraction(x) * y for x, y in zip(row, v)) == 0 for row in a)


@given(matrices(), st.data())
def test_solve_returns_a_solution_when_consistent(a, data):
    x0 = data.draw(st.lists(small, min_size=len(a[0]), max_size=len(a[0])))
    b = [sum(r * x for r, x in zip(row, x0)) for row in a]
    x = solve(a, b)
    assert x is not None
    assert [sum(r * xi for r, xi in zip(row, x)) for row in a] == b


@settings(max_examples=60)
@given(matrices(max_rows=4, max_cols=4))
def test_smith_normal_form_is_a_valid_factorization(a):
    u, d, v = smith_normal_form(a)
    assert matmul(matmul(u, a), v) == d
    assert abs(det(u)) == 1 and abs(det(v)) == 1
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    assert all(d[i][j] == 0 for i in range(len(d)) for j in range(len(d[0])) if i != j)
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert all(b % a_ == 0 for a_, b in zip(nz, nz[1:]))


@settings(max_examples=60)
@given(matrices(max_rows=3, max_cols=3))
def test_elementary_divisors_match_minor_gcds(a):
    dd = determinantal_divisors(a)
    expected = [dd[0]] + [dd[k] // dd[k - 1] for k in range(1, len(dd))] if dd else []
    assert elementary_divisors(a) == expected
