"""Split-prime sets, witness moduli and cyclotomic irreducibility certificates."""

__version__ = "0.1.0"

from .polycore import IntPoly, derivative, discriminant, eval_at, format_poly, parse_poly, resultant
from .finitefield import (ModPoly, count_distinct_roots_mod, gcd_mod, has_root_mod,
                          powmod_frobenius, reduce_mod, splits_completely)
from .primes import (fundamental_discriminant, is_prime, kronecker, next_prime_in_class,
                     sieve_primes)
from .unitgroup import enumerate_generating_sets, subgroup_closure, unit_group
from .witness import (candidate_moduli, density_estimate, quadratic_witness, split_primes,
                      witness_search)
from .certifier import (Certificate, NoCertificate, certify_cyclotomic,
                        check_irreducible_heuristic, semi_split_primes, verify_certificate)

__all__ = [
    "IntPoly", "parse_poly", "format_poly", "derivative", "resultant", "discriminant",
    "eval_at", "ModPoly", "reduce_mod", "powmod_frobenius", "gcd_mod", "splits_completely",
    "has_root_mod", "count_distinct_roots_mod", "sieve_primes", "is_prime",
    "next_prime_in_class", "kronecker", "fundamental_discriminant", "unit_group",
    "subgroup_closure", "enumerate_generating_sets", "split_primes", "density_estimate",
    "candidate_moduli", "witness_search", "quadratic_witness", "Certificate",
    "NoCertificate", "certify_cyclotomic", "semi_split_primes",
    "check_irreducible_heuristic", "verify_certificate",
]
