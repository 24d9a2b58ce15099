"""The symbolic layer: formal sums of indices under the stuffle product.

Products of values expand into sums over interleavings with merges (the
stuffle, or harmonic, product).  On top of it sit the star expansion, an
alternating prefix/suffix sum that telescopes to zero, and two combinatorial
recursions used by the weighted theorems.  Everything on this page is exact
algebra over the rationals; no primes appear until the very end.
"""

from fmzv import IndexCombination, antipode_sum, star_expand, stuffle
from fmzv.evaluator import value_of
from fmzv.harmonic import evaluate_combination, gen_R, lemma_R_check, lemma_g_check


def main():
    a = IndexCombination.term((1,))
    b = IndexCombination.term((2,))
    print("stuffle products:")
    print("  [1] * [2]      =", a * b)
    print("  [1] * [1]      =", a * a)
    print("  [1] * [2,3]    =", a * IndexCombination.term((2, 3)))
    print()

    print("star values expand over gap mergers:")
    for index in ((1, 2), (1, 1, 2)):
        print("  star%s = %s" % (index, star_expand(index)))
    print()

    print("antipode-style alternating sums telescope to zero symbolically:")
    for index in ((2,), (1, 2), (2, 1, 1), (1, 2, 1, 3)):
        s = antipode_sum(index)
        print("  index %-12s -> %s" % (index, s))
        assert s.is_zero()
    print()

    print("the two recursions behind the weighted sum formulas hold exactly:")
    ok = all(lemma_g_check(k, r, a)
             for k in range(1, 9) for r in range(1, k + 1) for a in range(r + 1))
    print("  depth/weight recursion for generating sums: %s" % ("pass" if ok else "FAIL"))
    assert ok
    ok = all(lemma_R_check(ix) for ix in ((1, 2), (2, 3, 1), (1, 1, 2, 3)))
    print("  position-weighted permutation recursion:    %s" % ("pass" if ok else "FAIL"))
    assert ok
    print()

    print("weighted permutation sums as formal combinations:")
    print("  R(1,1,2) =", gen_R((1, 1, 2)))
    print()

    print("symbolic identities specialize to residues; at p = 11:")
    p = 11
    prod = a * b
    lhs = evaluate_combination(prod, "zeta2", p)
    rhs = value_of("zeta2", (1,), None, p) * value_of("zeta2", (2,), None, p) % p
    print("  eval([1]*[2]) = %d,  zeta2(1)*zeta2(2) = %d" % (lhs, rhs))
    assert lhs == rhs


if __name__ == "__main__":
    main()
