#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "natural.hpp"

namespace ordseek {

struct SmallFactorResult {
    std::optional<Nat> found;  // smallest prime divisor p <= L, if any
    Nat scanned_bound;         // = L
};

// Blocked Pollard-Strassen scan: with c = ceil(sqrt(L)), evaluates
// f(x) = prod_{j=1..c} (x+j) mod N at block starts 0, c, 2c, ... and takes a
// gcd per block; the first flagged block is resolved by trial division in
// ascending order, so the result is the smallest prime divisor <= L.
// Preconditions: 2 <= L <= N.
SmallFactorResult smallest_prime_factor_upto(const Nat& N, const Nat& L);

// Full factorization of n >= 2 by repeated smallest-prime extraction with
// L = ceil(sqrt(remaining)); a final cofactor > 1 is prime. Primes ascending.
std::vector<std::pair<Nat, unsigned>> factorize_upto_sqrt(const Nat& n);

namespace detail {
// Force the arbitrary-precision code path even when N fits a machine word
// (used by tests to compare the two paths).
SmallFactorResult smallest_prime_factor_upto_mpz(const Nat& N, const Nat& L);
}  // namespace detail

}  // namespace ordseek
