#include "residue_factor.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "arith.hpp"
#include "error.hpp"
#include "logging.hpp"
#include "mpfr_util.hpp"
#include "smallfactor.hpp"
#include "stats.hpp"
#include "u64ops.hpp"

namespace ordseek {

namespace {

// Numbers this size are factored outright with the quadratic-scan machinery;
// beyond it the dyadic lattice ladder takes over.
constexpr std::size_t kFactorRouteMaxBits = 64;

// Within the ladder, a range whose candidate count is below this is scanned
// directly instead of going through the lattice.
const unsigned long kBruteRouteMaxCandidates = 1ul << 22;

// lhs(x) = x^(2d(d-1)) * d^(2d) * 2^(d(d-1)) * N^(2rm(m+1)); the size
// inequality compares it against base^(4drm). Shared by the G~ floor
// certification (base = T, non-strict) and the per-interval condition
// (base = P-H, strict).
Int size_condition_lhs(const Nat& x, const Nat& N, unsigned long d, unsigned long r,
                       unsigned long m) {
    Int lhs = pow_ui(x, 2 * d * (d - 1));
    lhs *= pow_ui(Nat(d), 2 * d);
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), d * (d - 1));
    lhs *= pow_ui(N, 2 * r * m * (m + 1));
    return lhs;
}

bool below_g_tilde(const Nat& x, const Nat& T, const Nat& N, unsigned long d, unsigned long r,
                   unsigned long m) {
    if (x <= 0) return true;
    return size_condition_lhs(x, N, d, r, m) <= pow_ui(T, 4 * d * r * m);
}

}  // namespace

ShiftedPoly shift_poly(const Nat& N, const Nat& s, const Nat& P) {
    require(s >= 2, "shift_poly: s must be >= 2");
    require(P >= 1, "shift_poly: P must be >= 1");
    require(N >= 2, "shift_poly: N must be >= 2");
    Nat g = gcd(N, s);
    if (g != 1) throw NotCoprimeError(g);

    Nat s_inv = mod_inv(s, N);
    Nat p_tilde = P % s;
    Nat g0 = (s_inv + s_inv * ((P - p_tilde) % N)) % N;
    return ShiftedPoly{s, s_inv, p_tilde, IntPoly{{g0, Int(1)}}, P};
}

LatticeBasis build_basis(const Nat& N, unsigned long r, const ShiftedPoly& g,
                         unsigned long d, unsigned long m, const Nat& G) {
    require(m >= 1 && r * m <= d, "build_basis: need 1 <= m <= d/r");
    require(G >= 1, "build_basis: need G >= 1");
    require(g.g.coeffs.size() == 2 && g.g.coeffs[1] == 1, "build_basis: g must be monic linear");

    std::vector<Nat> gpow(d);
    gpow[0] = 1;
    for (unsigned long j = 1; j < d; ++j) gpow[j] = gpow[j - 1] * G;

    LatticeBasis basis;
    basis.rows.assign(d, std::vector<Int>(d, Int(0)));

    // g^i over Z, grown incrementally.
    std::vector<Int> gg{Int(1)};
    const Int& c0 = g.g.coeffs[0];
    for (unsigned long i = 0; i < d; ++i) {
        Nat scale = (i < r * m) ? pow_ui(N, m - i / r) : Nat(1);
        for (std::size_t j = 0; j < gg.size(); ++j) {
            basis.rows[i][j] = gg[j] * scale * gpow[j];
        }
        if (i + 1 < d) {
            // gg *= (x + c0)
            gg.push_back(Int(0));
            for (std::size_t j = gg.size() - 1; j > 0; --j) {
                gg[j] = gg[j - 1] + gg[j] * c0;
            }
            gg[0] *= c0;
        }
    }

    // det(M) = G^(d(d-1)/2) * N^(rm(m+1)/2), checked against the diagonal.
    Int diag = 1;
    for (unsigned long i = 0; i < d; ++i) diag *= basis.rows[i][i];
    Int expected = pow_ui(Nat(G), d * (d - 1) / 2) * pow_ui(N, r * m * (m + 1) / 2);
    check_internal(diag == expected, "build_basis: determinant mismatch");
    stats().basis_det_checks.fetch_add(1, std::memory_order_relaxed);
    return basis;
}

bool check_size_condition(const SearchParams& params, const Nat& N, const Nat& P) {
    require(P > params.H, "check_size_condition: need P > H");
    stats().size_condition_checks.fetch_add(1, std::memory_order_relaxed);
    Nat base = P - params.H;
    Int lhs = size_condition_lhs(params.G, N, params.d, params.r, params.m);
    return lhs < pow_ui(base, 4 * params.d * params.r * params.m);
}

std::vector<Nat> search_interval(const Nat& N, unsigned long r, const Nat& s, const Nat& P,
                                 const Nat& H, unsigned long d, unsigned long m) {
    require(r >= 1, "search_interval: r must be >= 1");
    require(H >= 1 && H < P, "search_interval: need 1 <= H < P");
    require(m >= 1 && r * m <= d, "search_interval: need 1 <= m <= d/r");
    Nat nroot = iroot(N, r);
    require(P <= nroot + H, "search_interval: P beyond divisor range");

    ShiftedPoly sp = shift_poly(N, s, P);
    Nat G = (H + s - 1) / s + 1;  // ceil(H/s) + 1

    SearchParams params;
    params.r = r;
    params.d = d;
    params.m = m;
    params.G = G;
    params.H = H;
    if (!check_size_condition(params, N, P)) {
        throw ConditionViolatedError("search_interval: size condition fails for this interval");
    }

    LatticeBasis basis = build_basis(N, r, sp, d, m, G);
    LatticeBasis reduced = lll_reduce(basis);
    const std::vector<Int>& w = reduced.rows[0];

    // ||w||^(2d) <= 2^(d(d-1)/2) * det^2, with det known from construction.
    {
        Int norm2 = 0;
        for (const Int& x : w) mpz_addmul(norm2.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
        Int lhs = pow_ui(norm2, d);
        Int det = pow_ui(Nat(G), d * (d - 1) / 2) * pow_ui(N, r * m * (m + 1) / 2);
        Int rhs = det * det;
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), d * (d - 1) / 2);
        check_internal(lhs <= rhs, "search_interval: reduced vector misses the norm bound");
        stats().norm_bound_checks.fetch_add(1, std::memory_order_relaxed);
    }

    // h_j = w_j / G^j, exact by construction of the scaled basis.
    IntPoly h;
    h.coeffs.resize(d);
    Nat gpow = 1;
    for (unsigned long j = 0; j < d; ++j) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[j].get_mpz_t(), gpow.get_mpz_t());
        check_internal(rem == 0, "search_interval: h coefficient division not exact");
        h.coeffs[j] = q;
        gpow *= G;
    }
    stats().h_division_checks.fetch_add(1, std::memory_order_relaxed);
    h.normalize();
    check_internal(!h.is_zero(), "search_interval: zero polynomial from nonzero vector");

    std::vector<Int> roots = integer_roots(h, G);

    Nat offset = (P - sp.p_tilde) + 1;
    Nat lo = P - H;
    Nat hi = P + H;
    std::set<Nat> found;
    for (const Int& x : roots) {
        Int cand = Int(s) * x + offset;
        if (cand <= 1) continue;
        Nat p(cand);
        if (p < lo || p > hi) continue;
        if (p % s != 1) continue;
        Nat pr = pow_ui(p, r);
        if (!mpz_divisible_p(N.get_mpz_t(), pr.get_mpz_t())) continue;
        found.insert(p);
    }
    return std::vector<Nat>(found.begin(), found.end());
}

SearchParams derive_params(const Nat& N, unsigned long r, const Nat& s, const Nat& T,
                           unsigned long d_override) {
    require(N >= 2 && r >= 1, "derive_params: need N >= 2, r >= 1");
    require(s >= 2, "derive_params: s must be >= 2");
    require(T >= 2, "derive_params: T must be >= 2");
    {
        Nat g = gcd(N, s);
        if (g != 1) throw NotCoprimeError(g);
    }

    SearchParams p;
    p.r = r;
    p.d = d_override ? d_override : ceil_log2(N) + 1;
    require(p.d >= 2, "derive_params: dimension must be >= 2");
    require(r <= p.d, "derive_params: r exceeds lattice dimension");
    p.T = T;
    p.T_prime = T;

    // m = floor((d-1) log T / log N): float estimate, then exact adjustment
    // via N^m <= T^(d-1) < N^(m+1).
    long m_est = estimate_m(T, N, p.d - 1);
    if (m_est < 1) m_est = 1;
    unsigned long m = static_cast<unsigned long>(m_est);
    Nat t_pow = pow_ui(T, p.d - 1);
    while (m > 1 && pow_ui(N, m) > t_pow) --m;
    while (pow_ui(N, m + 1) <= t_pow) ++m;
    if (m > p.d / r) m = p.d / r;
    if (m < 1) m = 1;
    p.m = m;
    p.theta = mpq_class(static_cast<unsigned long>(r * m), p.d - 1);
    p.theta.canonicalize();

    // G = floor(G~), certified by the exact power comparison.
    Nat g_floor = estimate_g_floor(T, N, p.d, r, m);
    while (g_floor > 0 && !below_g_tilde(g_floor, T, N, p.d, r, m)) --g_floor;
    while (below_g_tilde(g_floor + 1, T, N, p.d, r, m)) ++g_floor;
    p.G_tilde_floor = g_floor;
    p.G = g_floor;

    // The per-interval inequality is strict; trim G until it holds at the
    // tightest point P-H = T of the first interval.
    while (p.G >= 2) {
        if (size_condition_lhs(p.G, N, p.d, r, m) < pow_ui(T, 4 * p.d * r * m)) {
            break;
        }
        --p.G;
    }
    if (p.G <= 1) {
        throw ParamsDegenerateError("derive_params: interval bound G collapsed to " +
                                    p.G.get_str() + " at T = " + T.get_str());
    }
    p.H = (p.G - 1) * s;

    // largest a/64 with N^a <= s^64
    {
        Nat s64 = pow_ui(s, 64);
        unsigned long lo = 0, hi = 64;
        while (lo < hi) {
            unsigned long mid = (lo + hi + 1) / 2;
            if (pow_ui(N, mid) <= s64) lo = mid;
            else hi = mid - 1;
        }
        p.alpha = mpq_class(lo, 64ul);
        p.alpha.canonicalize();
    }
    return p;
}

namespace detail {

std::vector<Nat> brute_progression_scan(const Nat& N, unsigned long r, const Nat& s,
                                        const Nat& lo, const Nat& hi, unsigned threads) {
    std::vector<Nat> out;
    if (hi < lo) return out;
    // first candidate k*s + 1 >= max(lo, 2)
    Nat start = lo < 2 ? Nat(2) : lo;
    Nat k0 = (start - 2) / s + 1;  // smallest k with k*s + 1 >= start
    Nat kmax = (hi - 1) / s;       // largest k with k*s + 1 <= hi
    if (kmax < k0) return out;

    const bool small = fits_u64(N) && fits_u64(hi);
    Nat total = kmax - k0 + 1;

    auto scan_chunk = [&](const Nat& ka, const Nat& kb) {
        std::vector<Nat> hits;
        if (small) {
            using namespace u64ops;
            std::uint64_t n64 = to_u64(N), s64 = to_u64(s);
            std::uint64_t p = to_u64(ka) * s64 + 1;
            std::uint64_t last = to_u64(kb) * s64 + 1;
            for (; p <= last; p += s64) {
                if (r == 1) {
                    if (n64 % p == 0) hits.emplace_back(static_cast<unsigned long>(p));
                } else {
                    unsigned __int128 pr = 1;
                    bool over = false;
                    for (unsigned long i = 0; i < r; ++i) {
                        pr *= p;
                        if (pr > n64) { over = true; break; }
                    }
                    if (!over && n64 % static_cast<std::uint64_t>(pr) == 0) {
                        hits.emplace_back(static_cast<unsigned long>(p));
                    }
                }
            }
        } else {
            for (Nat k = ka; k <= kb; ++k) {
                Nat p = k * s + 1;
                Nat pr = pow_ui(p, r);
                if (pr <= N && mpz_divisible_p(N.get_mpz_t(), pr.get_mpz_t())) {
                    hits.push_back(p);
                }
            }
        }
        return hits;
    };

    unsigned nthreads = threads;
    if (nthreads <= 1 || total < 4096) {
        return scan_chunk(k0, kmax);
    }
    Nat chunk = total / nthreads + 1;
    std::vector<std::future<std::vector<Nat>>> futs;
    Nat ka = k0;
    while (ka <= kmax) {
        Nat kb = std::min(Nat(ka + chunk - 1), kmax);
        futs.push_back(std::async(std::launch::async, scan_chunk, ka, kb));
        ka = kb + 1;
    }
    for (auto& f : futs) {
        auto part = f.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

std::vector<Nat> search_range(const Nat& N, unsigned long r, const Nat& s, const Nat& T,
                              const Nat& T_prime, const SearchOptions& opts) {
    require(T >= 2 && T <= T_prime, "search_range: need 2 <= T <= T'");
    Nat nroot = iroot(N, r);
    require(T_prime <= nroot, "search_range: T' beyond floor(N^(1/r))");
    require(T >= brute_prefix_bound(N, r), "search_range: T below the direct-scan cutoff");

    SearchParams params = derive_params(N, r, s, T, opts.d_override);
    const Nat& H = params.H;

    // H >= (s/24) N^(theta^2/r) with theta's certified rational proxy
    // rm/(d-1), as exact integer powers: (24(G-1))^((d-1)^2) >= N^(r m^2).
    {
        Int lhs = pow_ui(Nat(24 * (params.G - 1)), (params.d - 1) * (params.d - 1));
        Int rhs = pow_ui(N, r * params.m * params.m);
        check_internal(lhs >= rhs, "search_range: interval width below the guaranteed bound");
        stats().h_lower_bound_checks.fetch_add(1, std::memory_order_relaxed);
    }

    std::vector<Nat> centers;
    for (Nat P = T + H;; P += 2 * H) {
        centers.push_back(P);
        if (P + H >= T_prime) break;
    }
    {
        Nat span = T_prime - T;
        Nat bound = span / (2 * H) + (span % (2 * H) != 0 ? 1 : 0) + 1;
        check_internal(Nat(centers.size()) <= bound,
                       "search_range: more subintervals than the covering bound allows");
        stats().interval_count_checks.fetch_add(1, std::memory_order_relaxed);
    }
    ORDSEEK_DEBUG("search_range [" << T.get_str() << ", " << T_prime.get_str() << "] d="
                                   << params.d << " m=" << params.m << " G=" << params.G.get_str()
                                   << " intervals=" << centers.size());

    auto run_one = [&](const Nat& P) {
        return search_interval(N, r, s, P, H, params.d, params.m);
    };

    std::set<Nat> found;
    if (opts.threads > 1 && centers.size() > 1) {
        std::vector<std::future<std::vector<Nat>>> futs;
        futs.reserve(centers.size());
        for (const Nat& P : centers) {
            futs.push_back(std::async(std::launch::async, run_one, P));
        }
        for (auto& f : futs) {
            for (Nat& p : f.get()) found.insert(std::move(p));
        }
    } else {
        for (const Nat& P : centers) {
            for (Nat& p : run_one(P)) found.insert(std::move(p));
        }
    }

    std::vector<Nat> out;
    for (const Nat& p : found) {
        if (p >= T && p <= T_prime) out.push_back(p);
    }
    return out;
}

namespace {

// Factorization-backed route: factor N outright, then enumerate the divisors
// of its r-th-power part and filter by residue class.
std::vector<Nat> divisors_by_factoring(const Nat& N, unsigned long r, const Nat& s) {
    stats().factor_enumerations.fetch_add(1, std::memory_order_relaxed);
    auto fac = factorize_upto_sqrt(N);
    // root part: prod p^floor(e/r)
    std::vector<std::pair<Nat, unsigned>> root_part;
    for (const auto& [p, e] : fac) {
        if (e / r >= 1) root_part.emplace_back(p, e / static_cast<unsigned>(r));
    }
    std::vector<Nat> divisors{Nat(1)};
    for (const auto& [p, e] : root_part) {
        std::size_t base = divisors.size();
        Nat pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pk);
        }
    }
    std::vector<Nat> out;
    for (const Nat& e : divisors) {
        if (e > 1 && e % s == 1) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Nat> divisors_in_class(const Nat& N, unsigned long r, const Nat& s,
                                   const SearchOptions& opts) {
    require(N >= 2, "divisors_in_class: N must be >= 2");
    require(r >= 1, "divisors_in_class: r must be >= 1");
    require(s >= 2, "divisors_in_class: s must be >= 2");
    {
        Nat g = gcd(N, s);
        if (g != 1) throw NotCoprimeError(g);
    }

    if (opts.route == SearchOptions::Route::Auto && bit_length(N) <= kFactorRouteMaxBits) {
        return divisors_by_factoring(N, r, s);
    }

    Nat nroot = iroot(N, r);
    std::set<Nat> found;

    // Direct scan of the prefix, extended to the power of two where the
    // dyadic ladder starts.
    Nat B0 = brute_prefix_bound(N, r);
    Nat ladder_start = Nat(1) << ceil_log2(B0);
    Nat prefix_hi = std::min(ladder_start, nroot);
    for (Nat& p : detail::brute_progression_scan(N, r, s, Nat(2), prefix_hi, opts.threads)) {
        found.insert(std::move(p));
    }

    Nat T = ladder_start;
    while (T < nroot) {
        Nat T2 = std::min(Nat(2 * T), nroot);
        Nat candidates = (T2 - T) / s + 1;
        bool brute = opts.route != SearchOptions::Route::ForceLattice &&
                     candidates <= kBruteRouteMaxCandidates;
        if (brute) {
            stats().brute_ranges.fetch_add(1, std::memory_order_relaxed);
            for (Nat& p : detail::brute_progression_scan(N, r, s, T, T2, opts.threads)) {
                found.insert(std::move(p));
            }
        } else {
            try {
                stats().lattice_ranges.fetch_add(1, std::memory_order_relaxed);
                for (Nat& p : search_range(N, r, s, T, T2, opts)) {
                    found.insert(std::move(p));
                }
            } catch (const ParamsDegenerateError&) {
                stats().brute_ranges.fetch_add(1, std::memory_order_relaxed);
                for (Nat& p : detail::brute_progression_scan(N, r, s, T, T2, opts.threads)) {
                    found.insert(std::move(p));
                }
            }
        }
        T = T2;
    }

    std::vector<Nat> out;
    for (const Nat& p : found) {
        // soundness recheck before anything is reported
        if (p <= 1 || p % s != 1) continue;
        Nat pr = pow_ui(p, r);
        if (pr > N || !mpz_divisible_p(N.get_mpz_t(), pr.get_mpz_t())) continue;
        out.push_back(p);
    }
    return out;
}

}  // namespace ordseek
