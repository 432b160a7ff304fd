#pragma once

#include <gmpxx.h>
#include <vector>

#include "lattice.hpp"
#include "natural.hpp"

namespace ordseek {

// Monic linear search polynomial for the interval centered at P: roots of g
// modulo a divisor p0 = s*x0 + 1 in the interval encode that divisor.
struct ShiftedPoly {
    Nat s;        // residue-class modulus
    Nat s_inv;    // inverse of s mod N, in [1, N-1]
    Nat p_tilde;  // P mod s, in [0, s-1]
    IntPoly g;    // x + (s_inv + s_inv*(P - p_tilde)) mod N
    Nat center;   // P
};

// Derived lattice-search parameters for one dyadic range starting at T.
struct SearchParams {
    unsigned long r = 1;   // power
    unsigned long d = 2;   // lattice dimension
    unsigned long m = 1;   // multiplicity parameter
    mpq_class theta;       // exact rational proxy r*m/(d-1) for r*logT/logN
    mpq_class alpha;       // largest a/64 with N^a <= s^64
    Nat G;                 // root bound (floor of G~, then exactness-adjusted)
    Nat G_tilde_floor;     // floor of G~ before adjustment
    Nat H;                 // interval half-width, (G-1)*s
    Nat T;
    Nat T_prime;
};

// Search routing knobs. Defaults follow the built-in cost model; tests force
// specific paths. d_override is test-only.
struct SearchOptions {
    unsigned threads = 1;
    enum class Route { Auto, ForceLadder, ForceLattice } route = Route::Auto;
    unsigned long d_override = 0;
};

// g(x) = x + (s' + s'(P - P~)) mod N. For any divisor p0 = s*x0 + 1 of N in
// [P-H, P+H], the integer x' = x0 - (P-P~)/s satisfies p0 | g(x') and
// |x'| <= H/s + 1. Preconditions: gcd(N,s)=1 (NotCoprimeError), s>=2, P>=1.
ShiftedPoly shift_poly(const Nat& N, const Nat& s, const Nat& P);

// Rows are coefficient vectors of f_i(G*x) where f_i = N^(m-floor(i/r)) g^i
// for i < rm and f_i = g^i for rm <= i < d. Lower triangular; determinant
// G^(d(d-1)/2) * N^(rm(m+1)/2), verified exactly after construction.
LatticeBasis build_basis(const Nat& N, unsigned long r, const ShiftedPoly& g,
                         unsigned long d, unsigned long m, const Nat& G);

// Exact integer form of the interval-size inequality, both sides raised to
// the power 4d: G^(2d(d-1)) * d^(2d) * 2^(d(d-1)) * N^(2rm(m+1)) < (P-H)^(4drm).
bool check_size_condition(const SearchParams& params, const Nat& N, const Nat& P);

// All integers p with p^r | N, p = 1 mod s, p in [P-H, P+H], found through the
// lattice: build basis, LLL-reduce, divide first-row entries by G^j (exact),
// isolate integer roots, map roots to divisor candidates, verify each.
std::vector<Nat> search_interval(const Nat& N, unsigned long r, const Nat& s, const Nat& P,
                                 const Nat& H, unsigned long d, unsigned long m);

// Parameters for ranges starting at T: d = ceil(log2 N) + 1; m floor-exact;
// G = floor(G~) adjusted so the size condition holds strictly at P-H = T.
// Throws ParamsDegenerateError when G <= 1.
SearchParams derive_params(const Nat& N, unsigned long r, const Nat& s, const Nat& T,
                           unsigned long d_override = 0);

// Covers [T, T'] with intervals of half-width H centered at T+H, T+3H, ...;
// unions the interval searches, filters to [T, T'], dedupes, sorts.
std::vector<Nat> search_range(const Nat& N, unsigned long r, const Nat& s, const Nat& T,
                              const Nat& T_prime, const SearchOptions& opts = {});

// All r-th power divisors of N congruent to 1 mod s (p > 1; composite
// divisors and N itself included when they qualify), sorted ascending.
std::vector<Nat> divisors_in_class(const Nat& N, unsigned long r, const Nat& s,
                                   const SearchOptions& opts = {});

namespace detail {
// Direct arithmetic-progression scan of [lo, hi] (both inclusive) for
// p = k*s + 1 with p^r | N; the fallback route when lattice parameters
// degenerate and the range route when scanning is cheaper.
std::vector<Nat> brute_progression_scan(const Nat& N, unsigned long r, const Nat& s,
                                        const Nat& lo, const Nat& hi, unsigned threads);
}  // namespace detail

}  // namespace ordseek
