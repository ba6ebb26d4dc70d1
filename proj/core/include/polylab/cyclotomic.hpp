#pragma once

#include <cstdint>
#include <span>
#include <optional>
#include <vector>

#include "polylab/int_poly.hpp"

namespace polylab {

/// Phi_index, by exact division of z^index - 1 by Phi_d for proper divisors d.
IntPoly cyclotomic(std::uint64_t index);

/// Every kk with euler_phi(kk) == d, ascending.
std::vector<std::uint64_t> inverse_totient(std::uint64_t d);

struct CyclotomicFactor {
  std::uint64_t index;
  IntPoly poly;
};

/// All Phi_kk of degree <= dmax dividing f, ordered by (degree, index).
std::vector<CyclotomicFactor> cyclotomic_factors(const IntPoly& f, int dmax);

/// True iff n+1 is prime and 2 has multiplicative order n modulo n+1; then
/// every monic +-1 polynomial of degree n is irreducible over the integers.
bool rademacher_structural_certificate(int n);

/// Rabin irreducibility test of f mod p (f monic). f must be squarefree mod p;
/// returns false otherwise.
bool irreducible_mod_p(const IntPoly& f, std::uint64_t p);

/// First prime in `primes` modulo which f is squarefree and irreducible; a
/// returned prime certifies irreducibility over the integers.
std::optional<std::uint64_t> modp_irreducibility_certificate(const IntPoly& f,
                                                             std::span<const std::uint64_t> primes);

}  // namespace polylab
