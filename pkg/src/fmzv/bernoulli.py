"""Bernoulli numbers and polynomials mod p, plus the two depth-1 constants.

Conventions: B_1 = -1/2 (the generating function x/(e^x - 1)); Zk(k, p) is
B_{p-k}/k mod p for k >= 2; L2(p) is the Fermat quotient (2^{p-1} - 1)/p mod p.
"""

import math
from functools import lru_cache

from .modmath import check_prime, mod_inv, mod_pow

__all__ = ["bernoulli_mod", "bernoulli_poly_mod", "Zk", "L2", "power_sum_oracle"]


@lru_cache(maxsize=None)
def _bernoulli_table(n: int, p: int) -> tuple[int, ...]:
    # B_0..B_n mod p by inverting the series (e^x - 1)/x truncated at degree n.
    # Needs (n+1)! invertible, hence the n <= p - 2 restriction.
    fact = [1] * (n + 2)
    for i in range(1, n + 2):
        fact[i] = fact[i - 1] * i % p
    c = [mod_inv(fact[i + 1], p) for i in range(n + 1)]  # c_i = 1/(i+1)!
    b = [0] * (n + 1)
    b[0] = 1
    for m in range(1, n + 1):
        acc = 0
        for i in range(1, m + 1):
            acc = (acc + c[i] * b[m - i]) % p
        b[m] = -acc % p
    return tuple(b[m] * fact[m] % p for m in range(n + 1))


def bernoulli_mod(n: int, p: int) -> int:
    """B_n mod p.  Requires 0 <= n <= p - 2 (so all needed factorials invert)."""
    check_prime(p)
    if not 0 <= n <= p - 2:
        raise ValueError("need 0 <= n <= p - 2, got n=%d p=%d" % (n, p))
    return _bernoulli_table(p - 2, p)[n]


def bernoulli_poly_mod(n: int, x: int, p: int) -> int:
    """Bernoulli polynomial B_n(x) mod p, expanded as sum binom(n,j) B_j x^(n-j)."""
    check_prime(p)
    if not 0 <= n <= p - 2:
        raise ValueError("need 0 <= n <= p - 2, got n=%d p=%d" % (n, p))
    table = _bernoulli_table(p - 2, p)
    x %= p
    acc = 0
    xpow = 1  # x^(n-j), built from j = n downwards
    for j in range(n, -1, -1):
        acc = (acc + math.comb(n, j) * table[j] % p * xpow) % p
        xpow = xpow * x % p
    return acc


def Zk(k: int, p: int) -> int:
    """The depth-1 constant B_{p-k}/k mod p; defined for k >= 2, p > k + 2."""
    check_prime(p)
    if k < 2:
        raise ValueError("Zk needs k >= 2, got %d" % k)
    if p <= k + 2:
        raise ValueError("Zk needs p > k + 2, got k=%d p=%d" % (k, p))
    return bernoulli_mod(p - k, p) * mod_inv(k, p) % p


def L2(p: int) -> int:
    """Fermat quotient of 2: (2^{p-1} - 1)/p mod p."""
    check_prime(p)
    return (mod_pow(2, p - 1, p * p) - 1) // p % p


def power_sum_oracle(M: int, n: int, p: int) -> int:
    """Direct sum_{m=1}^{M-1} m^n mod p; independent check for the polynomial route."""
    check_prime(p)
    if M < 1 or n < 0:
        raise ValueError("need M >= 1 and n >= 0")
    return sum(pow(m, n, p) for m in range(1, M)) % p
