from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigcalc.homsig import (
    WeightSignSummary,
    coset_parities,
    euler_characteristic_equal_rank,
    homogeneous_dimension,
    homogeneous_signature,
    signature_kernel,
)
from sigcalc.rootsys import build_root_system, sub_root_system
from sigcalc.weyl import generate_weyl, inversion_count_outside


def unit(n, i, j):
    v = [0] * n
    v[i], v[j] = 1, -1
    return tuple(v)


def grassmannian(k, n):
    G = build_root_system("A", n - 1)
    gens = [unit(n, i, i + 1) for i in range(n - 1) if i != k - 1]
    return G, sub_root_system(G, gens)


def quaternionic_projective(m):
    """Sp(m+1) / Sp(1) x Sp(m) as a pair of C-type root systems."""
    G = build_root_system("C", m + 1)
    first = tuple([2] + [0] * m)
    last = tuple([0] * m + [2])
    gens = [first] + [unit(m + 1, i, i + 1) for i in range(1, m)] + ([last] if m else [])
    return G, sub_root_system(G, gens)


def box_partition_counts(k, n):
    """Betti numbers b_{2p} of Gr(k,n): partitions of p fitting in a k x (n-k) box."""
    counts = [0] * (k * (n - k) + 1)
    for parts in product(range(n - k + 1), repeat=k):
        if all(parts[i] >= parts[i + 1] for i in range(k - 1)):
            counts[sum(parts)] += 1
    return counts


def hodge_signature(betti_even):
    # cohomology concentrated in (p,p) type: sigma = sum (-1)^p b_{2p}
    return sum((-1) ** p * b for p, b in enumerate(betti_even))


def full_weyl_sum(G, H):
    W_G = generate_weyl(G)
    W_H = generate_weyl(H, within=G)
    total = sum((-1) ** inversion_count_outside(w, G, H) for w in W_G)
    assert total % len(W_H) == 0
    return total // len(W_H)


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 6), (1, 7)])
def test_grassmannian_against_hodge_oracle(k, n):
    G, H = grassmannian(k, n)
    betti = box_partition_counts(k, n)
    assert euler_characteristic_equal_rank(G, H) == sum(betti)
    expected = hodge_signature(betti) if (k * (n - k)) % 2 == 0 else 0
    assert abs(homogeneous_signature(G, H)) == abs(expected)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_quaternionic_projective_space(m):
    G, H = quaternionic_projective(m)
    assert homogeneous_dimension(G, H) == 4 * m
    assert euler_characteristic_equal_rank(G, H) == m + 1
    assert abs(homogeneous_signature(G, H)) == (1 if m % 2 == 0 else 0)


@pytest.mark.parametrize(
    "family,rank,gens,sigma,chi",
    [
        ("A", 2, [(0, 1, -1)], 1, 3),
        ("A", 4, [(0, 1, -1, 0, 0), (0, 0, 1, -1, 0), (0, 0, 0, 1, -1)], 1, 5),
        ("A", 3, [(1, -1, 0, 0), (0, 0, 1, -1)], 2, 6),
        ("A", 3, [], 0, 24),
        ("C", 2, [], 0, 8),
        ("C", 3, [(2, 0, 0), (0, 1, -1), (0, 0, 2)], 1, 3),
    ],
)
def test_reference_values(family, rank, gens, sigma, chi):
    G = build_root_system(family, rank)
    H = sub_root_system(G, gens)
    assert abs(homogeneous_signature(G, H)) == sigma
    assert euler_characteristic_equal_rank(G, H) == chi


def test_full_flag_of_su3_has_dimension_two_mod_four():
    G = build_root_system("A", 2)
    H = sub_root_system(G, [])
    assert homogeneous_dimension(G, H) == 6
    assert homogeneous_signature(G, H) == 0


@pytest.mark.parametrize(
    "family,rank,gens",
    [
        ("A", 2, [(0, 1, -1)]),
        ("A", 3, [(1, -1, 0, 0), (0, 0, 1, -1)]),
        ("A", 3, []),
        ("B", 2, []),
        ("B", 3, [(0, 1, -1), (0, 0, 1)]),
        ("C", 3, [(2, 0, 0), (0, 1, -1), (0, 0, 2)]),
        ("G2", 2, []),
        ("D", 4, [(1, -1, 0, 0), (0, 0, 1, -1), (0, 0, 1, 1)]),
    ],
)
def test_coset_sum_equals_full_weyl_sum_and_bounds(family, rank, gens):
    G = build_root_system(family, rank)
    H = sub_root_system(G, gens)
    cosets, summary = coset_parities(G, H)
    sigma = signature_kernel(summary)
    chi = euler_characteristic_equal_rank(G, H)
    assert len(cosets) == chi
    assert sigma == full_weyl_sum(G, H)
    assert abs(sigma) <= chi
    assert (sigma - chi) % 2 == 0


def test_signature_kernel_examples():
    assert signature_kernel(WeightSignSummary((1, 0, 0))) == 1
    assert signature_kernel(WeightSignSummary(())) == 0
    assert signature_kernel(WeightSignSummary((0, 0, 0))) == 3


def test_summary_from_rotation_numbers():
    s = WeightSignSummary.from_rotation_numbers([[1, 2], [-1, 2], [-1, -2]])
    assert s.parities == (0, 1, 0)
    assert signature_kernel(s) == 1


def test_summary_validation():
    with pytest.raises(ValueError):
        WeightSignSummary((0,), ((1, 0),))
    with pytest.raises(ValueError):
        WeightSignSummary((0,), ((-1, 2),))
    with pytest.raises(ValueError):
        WeightSignSummary((0, 0), ((1,),))


@given(st.lists(st.lists(st.integers(-5, 5).filter(bool), min_size=1, max_size=6), max_size=12))
def test_kernel_is_parity_count(m_lists):
    s = WeightSignSummary.from_rotation_numbers(m_lists)
    value = signature_kernel(s)
    assert abs(value) <= len(m_lists)
    assert (value - len(m_lists)) % 2 == 0
    flipped = WeightSignSummary.from_rotation_numbers([[-m for m in ms] for ms in m_lists])
    # negating every rotation number rescales each term by (-1)^length
    assert signature_kernel(flipped) == sum(
        (-1) ** (sum(1 for m in ms if m < 0) + len(ms)) for ms in m_lists
    )
