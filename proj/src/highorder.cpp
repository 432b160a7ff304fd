#include "highorder.hpp"

#include "arith.hpp"
#include "error.hpp"
#include "logging.hpp"
#include "order.hpp"
#include "smallfactor.hpp"
#include "stats.hpp"

namespace ordseek {

namespace detail {

Outcome resolve_with_residue_search(const Nat& N, unsigned long r, const Nat& M,
                                    const SearchOptions& opts) {
    Nat g = gcd(N, M);
    if (g > 1 && g < N) return Outcome::factor(g);
    // g == N would mean N | M; the uniform-order certificates rule it out,
    // so fall through to the divisor search, which re-derives everything.

    std::vector<Nat> divisors = divisors_in_class(N, r, M, opts);
    for (const Nat& p : divisors) {
        if (p > 1 && p < N) return Outcome::factor(p);
    }

    // Nothing nontrivial found. Every prime factor of N is 1 mod M, so a
    // composite N would have shown a divisor; confirm primality before
    // reporting it.
    if (bit_length(N) <= 66) {
        Nat L = std::min(iroot_ceil(N, 2), N);
        SmallFactorResult r2 = smallest_prime_factor_upto(N, std::max(Nat(2), L));
        if (!r2.found || *r2.found == N) return Outcome::prime();
        throw InternalError(
            "residue search found no divisor but a direct scan did: " + r2.found->get_str());
    }
    throw InternalError(
        "residue search found no divisor and N is too large for the confirming scan");
}

}  // namespace detail

namespace {

Outcome run_main_loop(const Nat& N, const Nat& D, unsigned long final_r, unsigned long d_min_root,
                      const RunOptions& opts) {
    require(N >= 2, "find_high_order_or_factor: N must be >= 2");
    require(D >= 1 && D <= N, "find_high_order_or_factor: need 1 <= D <= N");
    if (!opts.permissive) {
        Nat d0 = iroot_ceil(N, d_min_root);
        require(D >= d0, "find_high_order_or_factor: D below N^(1/" +
                             std::to_string(d_min_root) + ") threshold " + d0.get_str());
    }

    // Step 1: clear out prime factors up to 2D.
    {
        Nat L = std::min(Nat(2 * D), N);
        SmallFactorResult r = smallest_prime_factor_upto(N, L);
        if (r.found) {
            if (*r.found == N) return Outcome::prime();
            return Outcome::factor(*r.found);
        }
    }

    Nat M = 1;
    Nat a = 2;
    Nat scan_cap = 10 * iroot_ceil(D, 2);
    unsigned iterations = 0;

    while (true) {
        ++iterations;
        check_internal(iterations <= bit_length(D) + 2,
                       "find_high_order_or_factor: loop exceeded the doubling bound");

        // Scan for the next candidate whose order does not divide M.
        Nat scan_start = a;
        while (true) {
            if (mpz_divisible_p(N.get_mpz_t(), a.get_mpz_t())) {
                if (a == N) return Outcome::prime();
                return Outcome::factor(a);
            }
            Nat g = gcd(a, N);
            if (g > 1) return Outcome::factor(g);  // g < a < N, nontrivial
            if (mod_pow(a, M, N) != 1) break;
            ++a;
        }
        {
            Nat span = a - scan_start;
            if (opts.run_stats) {
                unsigned long sp = fits_u64(span) ? to_u64(span) : ~0ul;
                opts.run_stats->max_scan_span = std::max(opts.run_stats->max_scan_span, sp);
            }
            if (span > scan_cap) {
                stats().scan_span_violations.fetch_add(1, std::memory_order_relaxed);
                if (opts.run_stats) opts.run_stats->scan_span_exceeded = true;
                ORDSEEK_INFO("element scan walked " << span.get_str() << " > 10*sqrt(D) = "
                                                    << scan_cap.get_str() << " at N = "
                                                    << N.get_str());
            }
        }

        OrderResult ord = order_upto(N, a, D);
        if (!ord.is_exact()) {
            if (opts.run_stats) opts.run_stats->iterations = iterations;
            return Outcome::element(a, D);
        }
        const Nat& m_i = *ord.exact;

        // Factor gcd checks for every prime of m_i (order-uniformity).
        UniformCertificate cert = certify_uniform_order(N, a, m_i);
        if (!cert.uniform) return Outcome::factor(*cert.factor);

        Nat M_next = lcm(M, m_i);
        check_internal(M_next >= 2 * M, "find_high_order_or_factor: lcm accumulator failed to double");
        M = M_next;
        if (opts.run_stats) opts.run_stats->iterations = iterations;

        if (M >= D) {
            return detail::resolve_with_residue_search(N, final_r, M, opts.search);
        }
        ++a;
    }
}

}  // namespace

Outcome find_high_order_or_factor(const Nat& N, const Nat& D, const RunOptions& opts) {
    return run_main_loop(N, D, 1, 6, opts);
}

Outcome find_high_order_or_factor_rpower(const Nat& N, const Nat& D, unsigned long r,
                                         const RunOptions& opts) {
    require(r >= 2, "find_high_order_or_factor_rpower: r must be >= 2");
    return run_main_loop(N, D, r, 6 * r, opts);
}

UniformCertificate certify_uniform_order(const Nat& N, const Nat& a, const Nat& m) {
    require(N >= 2 && m >= 1, "certify_uniform_order: need N >= 2 and m >= 1");
    require(mod_pow(a, m, N) == 1, "certify_uniform_order: m is not a period of a");
    auto factors = (m == 1) ? std::vector<std::pair<Nat, unsigned>>{} : factorize_upto_sqrt(m);
    for (const auto& [q, e] : factors) {
        Nat t = mod_pow(a, m / q, N);
        Nat g = gcd(N, t - 1);
        if (g != 1) {
            check_internal(g < N, "certify_uniform_order: gcd equals N; m was not the order");
            return {false, g};
        }
    }
    return {true, std::nullopt};
}

}  // namespace ordseek
