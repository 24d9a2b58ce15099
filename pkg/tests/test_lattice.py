import random
from fractions import Fraction

import pytest

from fmzv.lattice import congruence_cut, dot, hnf, hnf_contains, lll_reduce


def gram_schmidt(rows):
    """Exact Gram-Schmidt over Fraction; returns (bstar, mu)."""
    bstar = []
    mu = []
    for i, b in enumerate(rows):
        v = [Fraction(x) for x in b]
        mu.append([Fraction(0)] * len(rows))
        for j in range(i):
            denom = sum(x * x for x in bstar[j])
            mu[i][j] = sum(Fraction(a) * x for a, x in zip(b, bstar[j])) / denom
            v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        bstar.append(v)
    return bstar, mu


def assert_lll_reduced(rows, delta=Fraction(99, 100)):
    bstar, mu = gram_schmidt(rows)
    norms = [sum(x * x for x in v) for v in bstar]
    for i in range(len(rows)):
        for j in range(i):
            assert abs(mu[i][j]) <= Fraction(1, 2), (i, j, mu[i][j])
    for k in range(1, len(rows)):
        assert norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1], k


def random_unimodular_mix(rows, rng, steps=30):
    rows = [list(r) for r in rows]
    for _ in range(steps):
        i, j = rng.sample(range(len(rows)), 2)
        q = rng.randint(-3, 3)
        rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
    return rows


def test_hnf_small_example():
    assert hnf([[2, 0], [0, 2], [1, 1]]) == [[1, 1], [0, 2]]
    assert hnf([[0, 0, 0]]) == []
    assert hnf([]) == []


def test_hnf_pivot_normalization():
    out = hnf([[-3, 1], [0, 5]])
    for row in out:
        pivot = next(x for x in row if x)
        assert pivot > 0
    # entries above a pivot sit in [0, pivot)
    assert out == [[3, 4], [0, 5]]


def test_hnf_invariant_under_row_mixing():
    rng = random.Random(10)
    for _ in range(25):
        n = rng.randint(2, 4)
        m = rng.randint(n, 5)
        rows = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
        mixed = random_unimodular_mix(rows, rng)
        assert hnf(rows) == hnf(mixed)


def test_hnf_contains_roundtrip():
    rng = random.Random(11)
    for _ in range(25):
        rows = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(3)]
        h = hnf(rows)
        for r in rows:
            assert hnf_contains(h, r)
        coeffs = [rng.randint(-3, 3) for _ in rows]
        combo = [sum(c * r[i] for c, r in zip(coeffs, rows)) for i in range(4)]
        assert hnf_contains(h, combo)


def test_hnf_contains_negative():
    h = hnf([[2, 0], [0, 2]])
    assert not hnf_contains(h, [1, 0])
    assert not hnf_contains(h, [1, 1])
    assert hnf_contains(h, [4, -2])
    assert hnf_contains(h, [0, 0])


def test_congruence_cut_basics():
    basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    w = [1, 2, 3]
    cut = congruence_cut(basis, w, 5)
    assert len(cut) == 3
    for v in cut:
        assert dot(v, w) % 5 == 0
    # index of the sublattice is exactly p
    diag = 1
    for row in cut:
        diag *= next(x for x in row if x)
    assert diag == 5
    # every lattice member satisfies the congruence
    rng = random.Random(12)
    for _ in range(20):
        coeffs = [rng.randint(-4, 4) for _ in cut]
        combo = [sum(c * r[i] for c, r in zip(coeffs, cut)) for i in range(3)]
        assert dot(combo, w) % 5 == 0


def test_congruence_cut_noop_when_satisfied():
    basis = [[5, 0], [0, 5]]
    assert congruence_cut(basis, [1, 1], 5) == [[5, 0], [0, 5]]


def test_lll_classic_example():
    rows = [[1, 1, 1], [-1, 0, 2], [3, 5, 6]]
    red = lll_reduce(rows)
    assert hnf(red) == hnf(rows)
    assert_lll_reduced(red)


def test_lll_rejects_dependent_rows():
    with pytest.raises(ValueError):
        lll_reduce([[1, 2], [2, 4]])


def test_lll_random_bases():
    rng = random.Random(13)
    for trial in range(15):
        n = rng.randint(2, 5)
        m = n + rng.randint(0, 2)
        while True:
            rows = [[rng.randint(-50, 50) for _ in range(m)] for _ in range(n)]
            try:
                red = lll_reduce(rows)
                break
            except ValueError:
                continue
        assert hnf(red) == hnf(rows)
        assert_lll_reduced(red)


def test_lll_large_entries():
    rng = random.Random(14)
    base = [[10 ** 12 if i == j else rng.randint(-10 ** 9, 10 ** 9) for j in range(4)]
            for i in range(4)]
    red = lll_reduce(base)
    assert hnf(red) == hnf(base)
    assert_lll_reduced(red)


def test_lll_finds_short_kernel_vector():
    # plant the relation 3*x0 - x1 = 0 mod a large modulus and recover it
    M = 10 ** 9 + 7
    rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    w = [2, 6, M - 1]
    cut = congruence_cut(rows, w, M)
    red = lll_reduce(cut)
    short = min(red, key=lambda v: max(abs(x) for x in v))
    assert max(abs(x) for x in short) <= 3
    assert dot(short, w) % M == 0
    # the planted relations lie in the cut lattice
    assert hnf_contains(hnf(cut), [3, -1, 0])
    assert hnf_contains(hnf(cut), [1, 0, 2])
