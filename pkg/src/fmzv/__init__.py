"""fmzv: exact arithmetic for finite multiple zeta values of level one and two.

Evaluation of truncated harmonic-type sums mod p, closed-form and identity
verification suites, and integer-relation experiments over many primes.
"""

__version__ = "0.1.0"

from .bernoulli import L2, Zk, bernoulli_mod, bernoulli_poly_mod
from .evaluator import (
    ResidueCache,
    ResidueTable,
    eval_euler,
    eval_even_form,
    eval_odd_form,
    eval_table,
    eval_zeta,
    eval_zeta2,
    eval_zeta2_star,
    value_of,
)
from .harmonic import (
    IndexCombination,
    all_compositions,
    antipode_sum,
    compositions,
    star_expand,
    stuffle,
)
from .identities import (
    Report,
    coeff_C,
    ppt_constants,
    verify_antipode,
    verify_conj38,
    verify_depth2,
    verify_example24,
    verify_key_identity,
    verify_lemmas,
    verify_parity,
    verify_ppt,
    verify_prop21,
    verify_sum_formula,
    verify_weighted_perm,
)
from .modmath import (
    batch_inv,
    crt_combine,
    is_prime,
    mod_inv,
    mod_pow,
    rat_reconstruct,
    sieve_primes,
)
from .relations import (
    AmbiguousRelationError,
    build_matrix,
    dimension_estimate,
    dseq,
    express_in_basis,
    fib,
    relation_lattice,
)

__all__ = [
    "__version__",
    "is_prime",
    "sieve_primes",
    "mod_pow",
    "mod_inv",
    "batch_inv",
    "crt_combine",
    "rat_reconstruct",
    "bernoulli_mod",
    "bernoulli_poly_mod",
    "Zk",
    "L2",
    "eval_zeta",
    "eval_zeta2",
    "eval_zeta2_star",
    "eval_euler",
    "eval_even_form",
    "eval_odd_form",
    "eval_table",
    "value_of",
    "ResidueTable",
    "ResidueCache",
    "IndexCombination",
    "stuffle",
    "star_expand",
    "antipode_sum",
    "compositions",
    "all_compositions",
    "Report",
    "coeff_C",
    "ppt_constants",
    "verify_prop21",
    "verify_depth2",
    "verify_key_identity",
    "verify_parity",
    "verify_antipode",
    "verify_example24",
    "verify_sum_formula",
    "verify_ppt",
    "verify_weighted_perm",
    "verify_conj38",
    "verify_lemmas",
    "AmbiguousRelationError",
    "build_matrix",
    "relation_lattice",
    "express_in_basis",
    "dimension_estimate",
    "fib",
    "dseq",
]
