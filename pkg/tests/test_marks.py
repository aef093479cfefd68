"""Fixed-point counts and the mark homomorphism.

Two independent oracles: brute-force fixed-point tallies on explicit
block-tuple G-sets, and truncated power series built with a standalone
polynomial helper (for the generating identities).
"""

import random
from math import factorial, prod

import pytest

from burnside.engine import (
    Permutation,
    natural_gset,
    p_mu_gset,
    symmetric_group,
)
from burnside.marks import (
    fixed_points,
    mark_matrix,
    marks_of,
    marks_vector_order,
    verify_injectivity,
)
from burnside.partitions import Partition, alpha, enumerate_partitions
from burnside.schur import SchurElement, basis_element, closed_lambda, schur_mul, sigma

from test_schur import random_elements


def poly_mul(a, b, truncate):
    """Product of coefficient lists, truncated past degree `truncate`."""
    out = [0] * (truncate + 1)
    for i, ai in enumerate(a):
        if i > truncate or not ai:
            continue
        for j, bj in enumerate(b):
            if i + j > truncate:
                break
            out[i + j] += ai * bj
    return out


def geometric(step, truncate):
    """1/(1 - t^step) as a truncated coefficient list."""
    out = [0] * (truncate + 1)
    for k in range(0, truncate + 1, step):
        out[k] = 1
    return out


def permutation_of_type(nu, n):
    """A concrete permutation with the given cycle type, cycles laid out
    left to right."""
    cycles = []
    start = 1
    for length in nu:
        cycles.append(tuple(range(start, start + length)))
        start += length
    return Permutation.from_cycles([c for c in cycles if len(c) > 1], n)


def test_fixed_points_examples():
    for nu in enumerate_partitions(5):
        assert fixed_points((5,), nu) == 1
    assert fixed_points((2, 2), (2, 2)) == 2
    for mu in enumerate_partitions(6):
        expected = factorial(6) // prod(factorial(p) for p in mu)
        assert fixed_points(mu, (1, 1, 1, 1, 1, 1)) == expected
    with pytest.raises(ValueError):
        fixed_points((2, 1), (2, 2))


def test_fixed_points_against_brute_force():
    for n in range(1, 6):
        nat = natural_gset(symmetric_group(n))
        for mu in enumerate_partitions(n):
            gset = p_mu_gset(nat, mu)
            for nu in enumerate_partitions(n):
                g = permutation_of_type(nu, n)
                brute = sum(1 for p in gset.points if gset.act(g, p) == p)
                assert fixed_points(mu, nu) == brute, (mu, nu)


def test_diagonal_is_product_of_run_factorials():
    # cycles of the diagonal type match blocks bijectively within runs
    for n in range(1, 9):
        for mu in enumerate_partitions(n):
            expected = prod(factorial(a) for a in alpha(mu))
            assert fixed_points(mu, mu) == expected


def test_mark_matrix_small():
    assert mark_matrix(1) == [[1]]
    assert mark_matrix(2) == [[1, 0], [1, 2]]
    matrix = mark_matrix(6)
    for d in range(len(matrix)):
        assert matrix[d][d] != 0


def test_mark_matrix_triangular():
    for n in range(1, 9):
        matrix = mark_matrix(n)
        for r in range(len(matrix)):
            for c in range(r + 1, len(matrix)):
                assert matrix[r][c] == 0, (n, r, c)


def test_verify_injectivity_reports():
    for n in (1, 4, 8):
        report = verify_injectivity(n)
        assert report["triangular"]
        assert report["diagonal_nonzero"]
        assert report["failures"] == []
        assert report["cells_checked"] == len(marks_vector_order(n)) ** 2


def test_marks_of_basics():
    zero = marks_of(SchurElement.zero(5))
    assert set(zero.values) == {0}
    ones = marks_of(SchurElement.one(5))
    assert set(ones.values) == {1}
    doc = marks_of(basis_element((2, 1), 3)).to_json()
    assert doc["n"] == 3
    assert [entry["cycle_type"] for entry in doc["marks"]] == [[3], [2, 1], [1, 1, 1]]


def test_marks_multiplicative():
    for n in (2, 4, 6):
        for a, b in zip(random_elements(n, 5, 31), random_elements(n, 5, 32)):
            lhs = marks_of(schur_mul(a, b)).values
            va, vb = marks_of(a).values, marks_of(b).values
            assert lhs == tuple(x * y for x, y in zip(va, vb))


def test_sigma_marks_are_geometric_series():
    # sum_i marks(sigma^i)_nu t^i = prod_j 1/(1 - t^{nu_j})
    for n in range(1, 7):
        order = marks_vector_order(n)
        i_max = n + 3
        series = {nu: [] for nu in order}
        for i in range(i_max + 1):
            vec = marks_of(sigma(i, n))
            for nu, value in zip(vec.cycle_types, vec.values):
                series[nu].append(value)
        for nu in order:
            expected = [1] + [0] * i_max
            for part in nu:
                expected = poly_mul(expected, geometric(part, i_max), i_max)
            assert series[nu] == expected, nu


def test_lambda_marks_series():
    # sum_i marks(lambda^i)_nu t^i = prod_j (1 - (-t)^{nu_j})
    for n in range(1, 7):
        order = marks_vector_order(n)
        series = {nu: [] for nu in order}
        for i in range(n + 1):
            vec = marks_of(closed_lambda(i, n))
            for nu, value in zip(vec.cycle_types, vec.values):
                series[nu].append(value)
        for nu in order:
            expected = [1] + [0] * n
            for part in nu:
                factor = [0] * (n + 1)
                factor[0] = 1
                if part <= n:
                    factor[part] = -((-1) ** part)
                expected = poly_mul(expected, factor, n)
            assert series[nu] == expected, nu


def test_orbit_count_consistency():
    # P_mu is transitive, so fixed points average to 1 over the group;
    # class sizes n!/z_nu come from the independent centralizer formula
    for n in range(1, 6):
        for mu in enumerate_partitions(n):
            total = 0
            for nu in enumerate_partitions(n):
                counts = {}
                for part in nu:
                    counts[part] = counts.get(part, 0) + 1
                z = prod(m ** c * factorial(c) for m, c in counts.items())
                total += (factorial(n) // z) * fixed_points(mu, nu)
            assert total == factorial(n), mu


def test_marks_nonzero_on_random_nonzero_elements():
    rng_cases = [(n, seed) for n in range(1, 9) for seed in range(3)]
    for n, seed in rng_cases:
        for x in random_elements(n, 10, 100 + seed):
            assert any(marks_of(x).values), x.render()


def test_render_lists_cycle_types():
    text = marks_of(SchurElement.one(2)).render()
    assert text.splitlines() == ["(2): 1", "(1,1): 1"]
