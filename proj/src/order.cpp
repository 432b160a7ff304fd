#include "order.hpp"

#include <algorithm>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "u64ops.hpp"

namespace ordseek {

namespace {

void check_preconditions(const Nat& N, const Nat& a, const Nat& D) {
    require(N >= 2, "order_upto: N must be >= 2");
    require(a >= 1 && a < N, "order_upto: need 1 <= a < N");
    require(D >= 1 && D <= N, "order_upto: need 1 <= D <= N");
    Nat g = gcd(a, N);
    if (g != 1) throw NotAUnitError(g);
}

OrderResult order_upto_u64(std::uint64_t N, std::uint64_t a, std::uint64_t D) {
    using namespace u64ops;
    std::uint64_t c = to_u64(iroot_ceil(Nat(static_cast<unsigned long>(D)), 2));

    std::vector<std::pair<std::uint64_t, std::uint64_t>> baby;  // (value, exponent)
    baby.reserve(c);
    std::uint64_t cur = 1;
    for (std::uint64_t j = 0; j < c; ++j) {
        baby.emplace_back(cur, j);
        cur = mulmod(cur, a, N);
    }
    std::sort(baby.begin(), baby.end());

    // giant step factor a^{-c}
    std::uint64_t ainv = 0;
    {
        // extended Euclid in signed 128-bit space
        __int128 r0 = N, r1 = a, t0 = 0, t1 = 1;
        while (r1 != 0) {
            __int128 q = r0 / r1;
            __int128 r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            __int128 t2 = t0 - q * t1;
            t0 = t1;
            t1 = t2;
        }
        __int128 inv = t0 % static_cast<__int128>(N);
        if (inv < 0) inv += N;
        ainv = static_cast<std::uint64_t>(inv);
    }
    std::uint64_t gstep = powmod(ainv, c, N);

    std::uint64_t best = 0;
    bool found = false;
    std::uint64_t g = 1;
    for (std::uint64_t i = 0; i <= c; ++i) {
        auto [lo, hi] = std::equal_range(baby.begin(), baby.end(), std::make_pair(g, std::uint64_t(0)),
                                         [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto it = lo; it != hi; ++it) {
            std::uint64_t k = i * c + it->second;
            if (k >= 1 && (!found || k < best)) {
                best = k;
                found = true;
            }
        }
        g = mulmod(g, gstep, N);
    }
    if (found && best <= D) {
        return {Nat(static_cast<unsigned long>(best)), Nat(static_cast<unsigned long>(D))};
    }
    return {std::nullopt, Nat(static_cast<unsigned long>(D))};
}

}  // namespace

namespace detail {

OrderResult order_upto_mpz(const Nat& N, const Nat& a, const Nat& D) {
    check_preconditions(N, a, D);
    Nat c = iroot_ceil(D, 2);
    unsigned long cu = to_u64(c);

    // Baby list sorted by residue value, original exponent kept alongside;
    // repeats stay (they simply contribute more collision candidates).
    std::vector<std::pair<Nat, unsigned long>> baby;
    baby.reserve(cu);
    Nat cur = 1;
    for (unsigned long j = 0; j < cu; ++j) {
        baby.emplace_back(cur, j);
        cur = cur * a % N;
    }
    std::sort(baby.begin(), baby.end());

    Nat gstep = mod_pow(mod_inv(a, N), c, N);

    std::optional<Nat> best;
    Nat g = 1;
    for (unsigned long i = 0; i <= cu; ++i) {
        auto cmp = [](const std::pair<Nat, unsigned long>& x, const Nat& v) { return x.first < v; };
        auto lo = std::lower_bound(baby.begin(), baby.end(), g, cmp);
        for (auto it = lo; it != baby.end() && it->first == g; ++it) {
            Nat k = Nat(i) * c + it->second;
            if (k >= 1 && (!best || k < *best)) best = k;
        }
        g = g * gstep % N;
    }
    if (best && *best <= D) {
        check_internal(mod_pow(a, *best, N) == 1, "order_upto: collision candidate fails a^k == 1");
        return {*best, D};
    }
    return {std::nullopt, D};
}

}  // namespace detail

OrderResult order_upto(const Nat& N, const Nat& a, const Nat& D) {
    check_preconditions(N, a, D);
    if (fits_u64(N)) {
        return order_upto_u64(to_u64(N), to_u64(a), to_u64(D));
    }
    return detail::order_upto_mpz(N, a, D);
}

}  // namespace ordseek
