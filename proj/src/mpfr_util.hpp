#pragma once

#include <mpfr.h>

#include "natural.hpp"

namespace ordseek {

// High-precision float estimates used only to seed exact integer
// certification (floats guide, integers certify).

// floor((d-1) * ln T / ln N), estimated; caller fixes up exactly.
long estimate_m(const Nat& T, const Nat& N, unsigned long d_minus_1);

// floor(G~) for G~ = T^(2rm/(d-1)) / (d^(1/(d-1)) * sqrt(2) * N^(rm(m+1)/(d(d-1)))),
// estimated; caller fixes up exactly.
Nat estimate_g_floor(const Nat& T, const Nat& N, unsigned long d, unsigned long r,
                     unsigned long m);

// ceil(4^sqrt(ln N / r)): the cutoff below which divisors are found by direct
// scan. Round-up arithmetic throughout, so the result is deterministic.
Nat brute_prefix_bound(const Nat& N, unsigned long r);

}  // namespace ordseek
