#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "natural.hpp"

namespace ordseek {

// base^exp mod modulus by repeated squaring. modulus >= 2.
Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus);

// gcd with gcd(0,0) = 0.
Nat gcd(const Nat& a, const Nat& b);

// lcm(a, b) = a*b / gcd(a, b) for a, b >= 1.
Nat lcm(const Nat& a, const Nat& b);

// Unique inverse of a in [1, modulus-1]. Throws NotInvertibleError carrying
// gcd(a, modulus) when the gcd is not 1.
Nat mod_inv(const Nat& a, const Nat& modulus);

// floor(n^(1/r)) exactly, r >= 1.
Nat iroot(const Nat& n, unsigned long r);

// Smallest integer t with t^r >= n (the exact ceiling of n^(1/r)).
Nat iroot_ceil(const Nat& n, unsigned long r);

// Dense polynomial over Z/modulus, coefficients in [0, modulus) ascending by
// degree. The zero polynomial is the empty coefficient list; its degree is
// the -inf sentinel (an empty optional).
class ModPoly {
public:
    ModPoly(Nat modulus, std::vector<Nat> coeffs);

    static ModPoly zero(Nat modulus);
    static ModPoly constant(Nat modulus, const Nat& c);
    // x + a
    static ModPoly linear(Nat modulus, const Nat& a);

    const Nat& modulus() const { return modulus_; }
    const std::vector<Nat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    Nat eval(const Nat& point) const;  // Horner

    bool operator==(const ModPoly& other) const = default;

private:
    Nat modulus_;
    std::vector<Nat> coeffs_;
    void normalize();
};

// Product with coefficients reduced mod the common modulus. Schoolbook below
// karatsuba_threshold coefficients, Karatsuba above.
ModPoly poly_mul_mod(const ModPoly& p, const ModPoly& q, std::size_t karatsuba_threshold = 32);

// p mod q (polynomial remainder) for monic q. Internal building block of the
// remainder tree. Uses Newton-reciprocal division above a degree threshold,
// schoolbook below.
ModPoly poly_rem_monic(const ModPoly& p, const ModPoly& q);

// p(t) mod modulus for each point t, via subproduct tree + remainder tree.
// Points must already be reduced mod the modulus.
std::vector<Nat> multi_eval(const ModPoly& p, const std::vector<Nat>& points);

}  // namespace ordseek
