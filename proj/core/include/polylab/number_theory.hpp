#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace polylab {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// Trial-division factorization, ascending primes.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);

int mobius(std::uint64_t d);
std::uint64_t euler_phi(std::uint64_t d);

/// Multiplicative order of a modulo m; nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> multiplicative_order(std::uint64_t a, std::uint64_t m);

/// q = p^e with p prime, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

std::vector<std::uint64_t> first_primes(std::size_t count);

}  // namespace polylab
