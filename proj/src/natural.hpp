#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>

#include "error.hpp"

namespace ordseek {

// Arbitrary-precision nonnegative integer. GMP keeps the representation
// canonical; nonnegativity is a contract of the operations that produce them.
using Nat = mpz_class;
// Signed arbitrary-precision integer (lattice entries, polynomial coefficients).
using Int = mpz_class;

inline std::size_t bit_length(const Nat& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

// ceil(log2(n)) for n >= 1.
inline std::size_t ceil_log2(const Nat& n) {
    std::size_t b = bit_length(n);
    if (mpz_popcount(n.get_mpz_t()) == 1) return b - 1;  // exact power of two
    return b;
}

inline bool fits_u64(const Nat& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 63;
}

inline std::uint64_t to_u64(const Nat& n) { return mpz_get_ui(n.get_mpz_t()); }

inline Nat pow_ui(const Nat& base, unsigned long e) {
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Parses a decimal or 0x-prefixed hex numeral. Leading '-' accepted only
// when allow_negative.
inline std::optional<mpz_class> parse_integer(const std::string& text, bool allow_negative = false) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
        neg = true;
        s.erase(0, 1);
    }
    if (s.empty()) return std::nullopt;
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        base = 16;
        s.erase(0, 2);
        if (s.empty()) return std::nullopt;
    }
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), base) != 0) return std::nullopt;
    if (neg) {
        if (!allow_negative) return std::nullopt;
        v = -v;
    }
    return v;
}

}  // namespace ordseek
