from fractions import Fraction

import pytest

from fmzv.evaluator import eval_zeta2
from fmzv.harmonic import all_compositions
from fmzv.lattice import dot, hnf, hnf_contains
from fmzv.modmath import sieve_primes
from fmzv.relations import (
    AmbiguousRelationError,
    build_matrix,
    descriptor_str,
    dimension_estimate,
    dseq,
    express_in_basis,
    fib,
    normalize_descriptor,
    relation_lattice,
)

W3 = [("zeta2", ix) for ix in all_compositions(3)]


def test_normalize_descriptor():
    assert normalize_descriptor(("zeta2", (1, 2))) == ("zeta2", (1, 2), None)
    assert normalize_descriptor(("euler", (2,), "-")) == ("euler", (2,), (-1,))
    with pytest.raises(ValueError):
        normalize_descriptor(("zeta2", (1, 2), (1, 1)))
    with pytest.raises(ValueError):
        normalize_descriptor(("euler", (1, 2)))
    with pytest.raises(ValueError):
        normalize_descriptor(("nope", (1,)))
    assert descriptor_str(("euler", (1, 2), (1, -1))) == "euler(1,2;+,-)"
    assert descriptor_str(("zeta", (3,))) == "zeta(3)"


def test_build_matrix_weight3_row():
    m = build_matrix(W3, [7])
    assert [d[1] for d in m.columns] == [(3,), (1, 2), (2, 1), (1, 1, 1)]
    assert m.row(7) == (1, 1, 5, eval_zeta2((1, 1, 1), 7))
    assert m.row(7)[3] == 6


def test_build_matrix_single_cell_and_errors():
    m = build_matrix([("zeta2", (3,))], [7])
    assert len(m.columns) == 1 and len(m.primes) == 1
    with pytest.raises(ValueError):
        build_matrix([], [7])
    with pytest.raises(ValueError):
        build_matrix([("zeta2", (3,))], [])
    with pytest.raises(ValueError):
        build_matrix([("zeta2", (5,))], [7])  # needs p > weight + 2


def test_relation_lattice_weight3():
    m = build_matrix(W3, sieve_primes(7, 199))
    cands = relation_lattice(m)
    assert cands and all(c.status == "verified" for c in cands)
    span = hnf([list(c.coefficients) for c in cands])
    # 4*z2(1,2) + 3*z2(3) = 0 and 4*z2(2,1) + z2(3) = 0, columns (3),(1,2),(2,1),(1^3)
    assert hnf_contains(span, [3, 4, 0, 0])
    assert hnf_contains(span, [1, 0, 4, 0])
    for c in cands:
        for p in m.primes:
            assert dot(c.coefficients, m.row(p)) % p == 0


def test_relation_lattice_single_column_no_relation():
    m = build_matrix([("zeta2", (3,))], sieve_primes(7, 199))
    assert relation_lattice(m) == []


def test_relation_lattice_duplicate_column():
    m = build_matrix([("zeta2", (3,)), ("zeta2", (3,))], sieve_primes(7, 60))
    cands = relation_lattice(m)
    assert any(c.coefficients == (1, -1) and c.status == "verified" for c in cands)


def test_relation_lattice_monotone_in_primes():
    from fmzv.lattice import congruence_cut

    m = build_matrix(W3, sieve_primes(7, 60))
    n = len(m.columns)
    basis = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for p in m.primes:
        nxt = congruence_cut(basis, m.row(p), p)
        old = hnf(basis)
        for row in nxt:
            assert hnf_contains(old, row)
        basis = nxt


def test_express_anchors():
    primes = sieve_primes(7, 199)
    got = express_in_basis(("zeta2", (2, 1)), [("zeta2", (3,)), ("zeta2", (1, 1, 1))], primes)
    assert got == [Fraction(-1, 4), 0]
    got = express_in_basis(("zeta2", (1, 2)), [("zeta2", (3,)), ("zeta2", (1, 1, 1))], primes)
    assert got == [Fraction(-3, 4), 0]


def test_express_target_in_basis_rejected():
    with pytest.raises(ValueError):
        express_in_basis(("zeta2", (3,)), [("zeta2", (3,))], [7, 11])


def test_express_none_when_independent():
    got = express_in_basis(("zeta2", (5,)), [("zeta2", (1, 1, 1, 1, 1))],
                           sieve_primes(11, 120))
    assert got is None


def test_express_ambiguous_on_dependent_basis():
    with pytest.raises(AmbiguousRelationError):
        express_in_basis(("zeta2", (2, 1)), [("zeta2", (3,)), ("zeta2", (1, 2))],
                         sieve_primes(7, 120))


def test_express_stable_across_prime_sets():
    a = express_in_basis(("zeta2", (2, 1)), [("zeta2", (3,))], sieve_primes(7, 80))
    b = express_in_basis(("zeta2", (2, 1)), [("zeta2", (3,))], sieve_primes(81, 200))
    assert a == b == [Fraction(-1, 4)]


def test_dimension_estimates_small():
    assert dimension_estimate(1, primes=sieve_primes(5, 60)) == (0, 1)
    assert dimension_estimate(3, primes=sieve_primes(7, 199)) == (2, 2)
    m, dim = dimension_estimate(4, primes=sieve_primes(7, 199))
    assert dim == 3 == fib(4)
    with pytest.raises(ValueError):
        dimension_estimate(0, primes=[7])


def test_fib_and_dseq_values():
    assert [fib(k) for k in range(1, 7)] == [1, 1, 2, 3, 5, 8]
    assert fib(10) == 55
    assert [dseq(k) for k in range(6)] == [1, 0, 1, 1, 1, 2]
    with pytest.raises(ValueError):
        fib(0)
    with pytest.raises(ValueError):
        dseq(-1)


def test_counting_invariants():
    for k in range(1, 11):
        comps = list(all_compositions(k))
        assert len(comps) == 2 ** (k - 1)
        assert sum(1 for c in comps if all(x % 2 for x in c)) == fib(k)
        if k >= 3:
            assert sum(1 for c in comps if all(x % 2 and x >= 3 for x in c)) == dseq(k - 3)
