#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>

namespace relcomm {

bool is_prime(std::uint64_t n);

// prime -> exponent, ascending primes. factorize(1) is empty.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

// Number of prime factors with multiplicity; big_omega(1) == 0.
unsigned big_omega(std::uint64_t n);

// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// If n == p^k for a prime p (k >= 1), returns {p, k}.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace relcomm
