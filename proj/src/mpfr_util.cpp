#include "mpfr_util.hpp"

namespace ordseek {

namespace {

constexpr mpfr_prec_t kPrec = 320;

struct Real {
    mpfr_t v;
    Real() { mpfr_init2(v, kPrec); }
    explicit Real(const Nat& n) {
        mpfr_init2(v, kPrec);
        mpfr_set_z(v, n.get_mpz_t(), MPFR_RNDN);
    }
    ~Real() { mpfr_clear(v); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
};

}  // namespace

long estimate_m(const Nat& T, const Nat& N, unsigned long d_minus_1) {
    Real t(T), n(N), q;
    mpfr_log(t.v, t.v, MPFR_RNDN);
    mpfr_log(n.v, n.v, MPFR_RNDN);
    mpfr_div(q.v, t.v, n.v, MPFR_RNDN);
    mpfr_mul_ui(q.v, q.v, d_minus_1, MPFR_RNDN);
    mpfr_floor(q.v, q.v);
    return mpfr_get_si(q.v, MPFR_RNDN);
}

Nat estimate_g_floor(const Nat& T, const Nat& N, unsigned long d, unsigned long r,
                     unsigned long m) {
    // ln G~ = (2rm/(d-1)) lnT - (ln d)/(d-1) - (ln 2)/2 - (rm(m+1)/(d(d-1))) lnN
    Real lnT(T), lnN(N), acc, tmp;
    mpfr_log(lnT.v, lnT.v, MPFR_RNDN);
    mpfr_log(lnN.v, lnN.v, MPFR_RNDN);

    mpfr_mul_ui(acc.v, lnT.v, 2 * r * m, MPFR_RNDN);
    mpfr_div_ui(acc.v, acc.v, d - 1, MPFR_RNDN);

    mpfr_set_ui(tmp.v, d, MPFR_RNDN);
    mpfr_log(tmp.v, tmp.v, MPFR_RNDN);
    mpfr_div_ui(tmp.v, tmp.v, d - 1, MPFR_RNDN);
    mpfr_sub(acc.v, acc.v, tmp.v, MPFR_RNDN);

    mpfr_const_log2(tmp.v, MPFR_RNDN);
    mpfr_div_ui(tmp.v, tmp.v, 2, MPFR_RNDN);
    mpfr_sub(acc.v, acc.v, tmp.v, MPFR_RNDN);

    mpfr_mul_ui(tmp.v, lnN.v, r * m * (m + 1), MPFR_RNDN);
    mpfr_div_ui(tmp.v, tmp.v, d * (d - 1), MPFR_RNDN);
    mpfr_sub(acc.v, acc.v, tmp.v, MPFR_RNDN);

    mpfr_exp(acc.v, acc.v, MPFR_RNDN);
    mpfr_floor(acc.v, acc.v);
    Nat g;
    mpfr_get_z(g.get_mpz_t(), acc.v, MPFR_RNDN);
    if (g < 0) g = 0;
    return g;
}

Nat brute_prefix_bound(const Nat& N, unsigned long r) {
    Real x(N), e;
    mpfr_log(x.v, x.v, MPFR_RNDU);
    mpfr_div_ui(x.v, x.v, r, MPFR_RNDU);
    mpfr_sqrt(x.v, x.v, MPFR_RNDU);
    mpfr_set_ui(e.v, 4, MPFR_RNDU);
    mpfr_log(e.v, e.v, MPFR_RNDU);
    mpfr_mul(x.v, x.v, e.v, MPFR_RNDU);
    mpfr_exp(x.v, x.v, MPFR_RNDU);
    mpfr_ceil(x.v, x.v);
    Nat b;
    mpfr_get_z(b.get_mpz_t(), x.v, MPFR_RNDU);
    if (b < 2) b = 2;
    return b;
}

}  // namespace ordseek
