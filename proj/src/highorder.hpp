#pragma once

#include <optional>

#include "natural.hpp"
#include "residue_factor.hpp"

namespace ordseek {

// Result of the main search: an element of certified-large order, a
// nontrivial factor, or the verdict that N is prime.
struct Outcome {
    enum class Kind { Element, Factor, Prime } kind;
    Nat value;            // the element or the factor; unused for Prime
    Nat certified_bound;  // D for Element outcomes

    static Outcome element(Nat a, Nat d) {
        return {Kind::Element, std::move(a), std::move(d)};
    }
    static Outcome factor(Nat f) { return {Kind::Factor, std::move(f), Nat(0)}; }
    static Outcome prime() { return {Kind::Prime, Nat(0), Nat(0)}; }
};

// Per-run instrumentation: loop accounting plus the largest stretch the
// inner element scan had to walk (empirically bounded by 10*ceil(sqrt(D))
// once N has no prime factor <= 2D).
struct HighOrderRunStats {
    unsigned iterations = 0;
    unsigned long max_scan_span = 0;
    bool scan_span_exceeded = false;
};

struct RunOptions {
    // Allow D below the exact sixth-root threshold (testing only; the running
    // time guarantee does not apply).
    bool permissive = false;
    SearchOptions search;
    HighOrderRunStats* run_stats = nullptr;
};

// The main deterministic procedure. Returns Element(a, D) with ord_N(a) > D,
// or Factor(f) with 1 < f < N and f | N, or Prime.
// Preconditions: N >= 2, 1 <= D <= N, and D >= the least D0 with D0^6 >= N
// unless permissive.
Outcome find_high_order_or_factor(const Nat& N, const Nat& D, const RunOptions& opts = {});

// Variant for inputs promised to have an r-th power divisor (r >= 2); the
// residue-class search runs with that r and the D threshold relaxes to the
// least D0 with D0^(6r) >= N.
Outcome find_high_order_or_factor_rpower(const Nat& N, const Nat& D, unsigned long r,
                                         const RunOptions& opts = {});

// Order-uniformity certificate: with m = ord_N(a) (caller-certified), checks
// gcd(N, a^(m/q) - 1) for every prime q | m. A nontrivial gcd is returned as
// a factor (always < N); otherwise ord_p(a) = m for every prime p | N.
struct UniformCertificate {
    bool uniform;
    std::optional<Nat> factor;
};
UniformCertificate certify_uniform_order(const Nat& N, const Nat& a, const Nat& m);

namespace detail {
// Final step of the main loop once M >= D: gcd short-circuit, then the
// residue-class divisor search with modulus M, then the Prime classification
// with its confirming deterministic check.
Outcome resolve_with_residue_search(const Nat& N, unsigned long r, const Nat& M,
                                    const SearchOptions& opts);
}  // namespace detail

}  // namespace ordseek
