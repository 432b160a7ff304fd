#include "smallfactor.hpp"

#include <algorithm>

#include "arith.hpp"
#include "error.hpp"
#include "logging.hpp"
#include "u64ops.hpp"

namespace ordseek {

namespace {

// Resolve a flagged block (start, start+c]: the first v sharing a factor
// with N is the smallest prime divisor of N overall. Returns it if <= L.
std::optional<Nat> resolve_block(const Nat& N, const Nat& start, const Nat& c, const Nat& L) {
    Nat v = start + 1;
    Nat end = start + c;
    for (; v <= end; ++v) {
        if (v < 2) continue;
        if (gcd(v, N) > 1) {
            if (v <= L) return v;
            return std::nullopt;  // only overshoot candidates remain
        }
    }
    return std::nullopt;
}

SmallFactorResult strassen_u64(std::uint64_t N, std::uint64_t L) {
    using namespace u64ops;
    std::uint64_t c = to_u64(iroot_ceil(L, 2));
    // f(x) = prod_{j=1..c} (x+j) mod N, dense coefficients.
    std::vector<std::uint64_t> f{1};
    f.reserve(c + 1);
    for (std::uint64_t j = 1; j <= c; ++j) {
        f.push_back(0);
        std::uint64_t a = j % N;
        for (std::size_t i = f.size() - 1; i > 0; --i) {
            f[i] = (f[i - 1] + static_cast<std::uint64_t>((static_cast<unsigned __int128>(f[i]) * a) % N)) % N;
        }
        f[0] = mulmod(f[0], a, N);
    }
    std::uint64_t blocks = (L + c - 1) / c;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        std::uint64_t start = b * c;
        std::uint64_t x = start % N;
        std::uint64_t val = 0;
        for (std::size_t i = f.size(); i-- > 0;) {  // Horner
            val = (mulmod(val, x, N) + f[i]) % N;
        }
        if (gcd(val == 0 ? N : val, N) > 1) {
            auto hit = resolve_block(N, Nat(static_cast<unsigned long>(start)),
                                     Nat(static_cast<unsigned long>(c)),
                                     Nat(static_cast<unsigned long>(L)));
            if (hit) return {hit, Nat(static_cast<unsigned long>(L))};
            return {std::nullopt, Nat(static_cast<unsigned long>(L))};
        }
    }
    return {std::nullopt, Nat(static_cast<unsigned long>(L))};
}

}  // namespace

namespace detail {

SmallFactorResult smallest_prime_factor_upto_mpz(const Nat& N, const Nat& L) {
    Nat c = iroot_ceil(L, 2);
    unsigned long cu = to_u64(c);

    // f(x) = prod_{j=1..c} (x+j) mod N via a product tree of linear factors.
    std::vector<ModPoly> factors;
    factors.reserve(cu);
    for (unsigned long j = 1; j <= cu; ++j) {
        factors.push_back(ModPoly(N, {Nat(j), Nat(1)}));
    }
    while (factors.size() > 1) {
        std::vector<ModPoly> next;
        next.reserve((factors.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < factors.size(); i += 2) {
            next.push_back(poly_mul_mod(factors[i], factors[i + 1]));
        }
        if (factors.size() % 2) next.push_back(factors.back());
        factors = std::move(next);
    }
    ModPoly f = std::move(factors.front());

    Nat blocks = (L + c - 1) / c;
    // Evaluate block starts in ascending chunks so small factors exit early.
    // Chunks grow with c to keep the number of top-level tree reductions small.
    const unsigned long chunk = std::max<unsigned long>(64, to_u64(blocks) / 8);
    Nat b = 0;
    while (b < blocks) {
        std::vector<Nat> points;
        for (unsigned long i = 0; i < chunk && b + i < blocks; ++i) {
            points.push_back((b + i) * c % N);
        }
        std::vector<Nat> vals = multi_eval(f, points);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            Nat g = gcd(vals[i] == 0 ? N : vals[i], N);
            if (g > 1) {
                Nat start = (b + i) * c;
                auto hit = resolve_block(N, start, c, L);
                return {hit, L};
            }
        }
        b += points.size();
    }
    return {std::nullopt, L};
}

}  // namespace detail

SmallFactorResult smallest_prime_factor_upto(const Nat& N, const Nat& L) {
    require(N >= 2, "smallest_prime_factor_upto: N must be >= 2");
    require(L >= 2 && L <= N, "smallest_prime_factor_upto: need 2 <= L <= N");
    // Dense word-sized evaluation wins for short scans; the subproduct-tree
    // path takes over when c*c work would dominate.
    if (fits_u64(N) && L <= (Nat(1) << 20)) {
        return strassen_u64(to_u64(N), to_u64(L));
    }
    return detail::smallest_prime_factor_upto_mpz(N, L);
}

std::vector<std::pair<Nat, unsigned>> factorize_upto_sqrt(const Nat& n) {
    require(n >= 2, "factorize_upto_sqrt: n must be >= 2");
    std::vector<std::pair<Nat, unsigned>> out;
    Nat rem = n;
    while (rem > 1) {
        Nat L = std::max(Nat(2), std::min(iroot_ceil(rem, 2), rem));
        SmallFactorResult r = smallest_prime_factor_upto(rem, L);
        Nat p = r.found ? *r.found : rem;  // no divisor <= sqrt => rem is prime
        unsigned e = 0;
        while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
            rem /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

}  // namespace ordseek
