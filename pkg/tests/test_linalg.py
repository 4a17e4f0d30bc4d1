import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from foxcalc.linalg import ModMatrix, echelon_form, xgcd

sympy = pytest.importorskip("sympy")
from sympy.matrices.normalforms import hermite_normal_form  # noqa: E402


def span_mod(rows, n, d):
    """Every combination of rows with coefficients in 0..d-1."""
    out = set()
    for coeffs in itertools.product(range(d), repeat=len(rows)):
        out.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % d for j in range(n)))
    return out


def z_lattice_contains(rows, v):
    """v in the Z-row-span of rows iff adding it leaves sympy's HNF unchanged."""
    if not any(any(r) for r in rows):
        return not any(v)
    a = hermite_normal_form(sympy.Matrix(rows).T)
    b = hermite_normal_form(sympy.Matrix(list(rows) + [list(v)]).T)
    return a == b


def test_xgcd():
    for a, b in [(12, 18), (-4, 6), (0, 5), (7, 0), (0, 0), (-3, -9)]:
        g, s, t = xgcd(a, b)
        assert g == math.gcd(a, b)
        assert s * a + t * b == g


def test_composite_modulus_needs_howell_rows():
    # over Z/4 the row (2, 1) spans (0, 2); plain echelon form would miss it
    m = ModMatrix([[2, 1]], 2, 4)
    assert m.rows == [[2, 1], [0, 2]]
    assert m.contains([0, 2])
    assert not m.contains([0, 1])


def test_worked_example_span():
    m = ModMatrix([[1, 0, 0], [0, 0, 1], [1, 0, 1]], 3, 2)
    assert m.rows == [[1, 0, 0], [0, 0, 1]]
    assert not m.contains([0, 1, 0])
    assert m.contains([1, 0, 1])


def test_hermite_over_z():
    m = ModMatrix([[2, 4, 6], [3, 5, 7], [1, 1, 4]], 3, 0)
    assert m.rows == [[1, 1, 1], [0, 2, 1], [0, 0, 3]]
    assert m.contains([2, 4, 6])
    assert not m.contains([0, 0, 1])
    assert m.contains([0, 0, 6])


def test_empty_and_zero_rows():
    m = ModMatrix([], 3, 5)
    assert m.rank == 0 and m.contains([0, 5, 10]) and not m.contains([1, 0, 0])
    assert ModMatrix([[0, 0]], 2, 0).rows == []


def test_bad_modulus():
    with pytest.raises(ValueError):
        ModMatrix([[1]], 1, 1)


rows_st = st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), max_size=4)))


@settings(max_examples=200)
@given(rows_st, st.sampled_from([2, 3, 4, 6, 8, 9, 12]), st.randoms(use_true_random=False))
def test_mod_membership_matches_enumeration(shape, d, rnd):
    n, rows = shape
    if len(rows) > 3 and d > 6:
        rows = rows[:3]
    m = ModMatrix(rows, n, d)
    span = span_mod(rows, n, d)
    for v in itertools.product(range(d), repeat=n) if d ** n <= 200 else (
            tuple(rnd.randrange(d) for _ in range(n)) for _ in range(100)):
        assert m.contains(v) == (tuple(v) in span)
    if len(m.rows) <= 4:
        assert span_mod(m.rows, n, d) == span


@settings(max_examples=200)
@given(rows_st, st.lists(st.integers(-12, 12), min_size=4, max_size=4), st.lists(st.integers(-3, 3), max_size=4))
def test_z_membership_matches_sympy(shape, raw, coeffs):
    n, rows = shape
    v = raw[:n]
    m = ModMatrix(rows, n, 0)
    assert m.contains(v) == z_lattice_contains(rows, v)
    # integer combinations are always members
    combo = [sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(n)]
    assert m.contains(combo)


@settings(max_examples=100)
@given(rows_st, st.sampled_from([0, 2, 4, 6, 9]), st.randoms(use_true_random=False))
def test_form_is_canonical_under_row_permutation_and_row_ops(shape, d, rnd):
    n, rows = shape
    base = echelon_form(rows, n, d)
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert echelon_form(shuffled, n, d) == base
    if len(rows) >= 2:
        # add a multiple of one row to another
        i, j = rnd.sample(range(len(rows)), 2)
        c = rnd.randint(-3, 3)
        changed = [list(r) for r in rows]
        changed[i] = [a + c * b for a, b in zip(changed[i], changed[j])]
        assert echelon_form(changed, n, d) == base


def test_random_lattices_with_large_entries():
    rnd = random.Random(7)
    for _ in range(50):
        n = rnd.randint(1, 5)
        rows = [[rnd.randint(-1000, 1000) for _ in range(n)] for _ in range(rnd.randint(1, 6))]
        m = ModMatrix(rows, n, 0)
        for r in rows:
            assert m.contains(r)
        v = [rnd.randint(-50, 50) for _ in range(n)]
        assert m.contains(v) == z_lattice_contains(rows, v)
