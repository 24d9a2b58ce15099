"""Relation discovery and basis experiments over many primes.

Residue vectors of weight-k values, one coordinate per prime, span a lattice
whose integer relations we can hunt with congruence cuts plus lattice
reduction.  Candidate relations found on a training set of primes either
verify or die on the held-out primes.  The counting questions: how many
independent columns survive at level two (Fibonacci?), and at level one
(a lacunary third-order recursion?).  Finally, level-one values should be
expressible over level-two values at all-odd indices, which we test directly.
"""

from fmzv import (
    build_matrix,
    dimension_estimate,
    dseq,
    express_in_basis,
    fib,
    relation_lattice,
)
from fmzv.modmath import sieve_primes
from fmzv.relations import descriptor_str


def main():
    primes = sieve_primes(7, 200)

    print("verified integer relations among weight-3 level-two values:")
    columns = [("zeta2", (3,)), ("zeta2", (1, 2)), ("zeta2", (2, 1)), ("zeta2", (1, 1, 1))]
    matrix = build_matrix(columns, primes)
    for rel in relation_lattice(matrix):
        terms = " + ".join("%d*%s" % (c, descriptor_str(col))
                           for c, col in zip(rel.coefficients, matrix.columns) if c)
        print("  0 = %s   [%s on %d primes]" % (terms, rel.status, len(rel.verified_on)))
    print()

    print("expressing the mixed weight-3 values over the all-odd basis:")
    basis = [("zeta2", (3,)), ("zeta2", (1, 1, 1))]
    for index, expect in (((1, 2), ("-3/4", "0")), ((2, 1), ("-1/4", "0"))):
        coeffs = express_in_basis(("zeta2", index), basis, primes)
        print("  zeta2%s = %s * zeta2(3) + %s * zeta2(1,1,1)" % (index, *coeffs))
        assert tuple(str(c) for c in coeffs) == expect
    print()

    print("level-one values expand over the same level-two odd columns:")
    for index, expect in (((1, 2), ("-1/2", "0")), ((2, 1), ("1/2", "0")),
                          ((1, 1, 1), ("0", "0"))):
        coeffs = express_in_basis(("zeta", index), basis, primes)
        print("  zeta%s = %s * zeta2(3) + %s * zeta2(1,1,1)" % (index, *coeffs))
        assert tuple(str(c) for c in coeffs) == expect
    print()

    print("column counts minus verified relations, against the conjectured dimensions:")
    print("  weight   level-2 dim   fib     level-1 dim   dseq")
    for k in range(1, 7):
        usable = [p for p in primes if p > k + 2]
        _, d2 = dimension_estimate(k, variant="zeta2", primes=usable)
        _, d1 = dimension_estimate(k, variant="zeta", primes=usable)
        want1 = dseq(k - 3) if k >= 3 else 0
        print("  %6d   %11d   %3d     %11d   %4d" % (k, d2, fib(k), d1, want1))
        assert d2 == fib(k) and d1 == want1
    print()

    print("signed (euler) columns of weight 2 alongside a level-two column:")
    cols = [("euler", (2,), (-1,)), ("euler", (1, 1), (1, -1)), ("euler", (1, 1), (-1, -1)),
            ("zeta2", (1, 1))]
    matrix = build_matrix(cols, primes)
    rels = [r for r in relation_lattice(matrix) if r.status == "verified"]
    print("  %d verified relations among %d columns" % (len(rels), len(cols)))
    for rel in rels:
        terms = " + ".join("%d*%s" % (c, descriptor_str(col))
                           for c, col in zip(rel.coefficients, matrix.columns) if c)
        print("    0 = %s" % terms)


if __name__ == "__main__":
    main()
