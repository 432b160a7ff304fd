#pragma once

#include <optional>

#include "natural.hpp"

namespace ordseek {

// Result of the bounded order computation: either the exact order (when it is
// at most the bound D) or the certificate that it exceeds D.
struct OrderResult {
    std::optional<Nat> exact;  // engaged iff ord <= D
    Nat bound;                 // = D

    bool is_exact() const { return exact.has_value(); }
};

// Baby-step giant-step order bound test: decides whether ord_N(a) <= D and if
// so returns it exactly. Preconditions: N >= 2, 1 <= a < N, gcd(a, N) = 1
// (NotAUnitError carrying the gcd otherwise), 1 <= D <= N.
OrderResult order_upto(const Nat& N, const Nat& a, const Nat& D);

namespace detail {
// Arbitrary-precision path regardless of operand size (tests compare paths).
OrderResult order_upto_mpz(const Nat& N, const Nat& a, const Nat& D);
}  // namespace detail

}  // namespace ordseek
