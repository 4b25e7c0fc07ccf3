from .arith import (
    Factorization,
    euler_quotient,
    ext_gcd,
    factorize,
    gcd,
    gcd_many,
    is_prime,
    mod_pow,
    pollard_brent,
    totient,
)
from .chain import ChainDecomposition, build_chain, solvable
from .lattice import echelon_pivots, embed_family, express_in_parameters
from .oracle import (
    IntegerLattice,
    euclid_solve,
    lattice_equivalent,
    oracle_check,
    reference_solve,
)
from .solver import (
    evaluate,
    has_triangular_tail,
    is_homogeneous,
    power_equation,
    solve,
    solve_canonical,
    solve_raw,
    solve_raw_form_b,
    solve_two_form_a,
    solve_two_form_b,
    verify,
)

__all__ = [
    "ChainDecomposition",
    "Factorization",
    "IntegerLattice",
    "build_chain",
    "echelon_pivots",
    "embed_family",
    "euclid_solve",
    "euler_quotient",
    "evaluate",
    "express_in_parameters",
    "ext_gcd",
    "factorize",
    "gcd",
    "gcd_many",
    "has_triangular_tail",
    "is_homogeneous",
    "is_prime",
    "lattice_equivalent",
    "mod_pow",
    "oracle_check",
    "pollard_brent",
    "power_equation",
    "reference_solve",
    "solvable",
    "solve",
    "solve_canonical",
    "solve_raw",
    "solve_raw_form_b",
    "solve_two_form_a",
    "solve_two_form_b",
    "totient",
    "verify",
]
