#include "lattice.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"
#include "logging.hpp"
#include "stats.hpp"

namespace ordseek {

LatticeBasis LatticeBasis::identity(std::size_t n) {
    LatticeBasis b;
    b.rows.assign(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) b.rows[i][i] = 1;
    return b;
}

void LatticeBasis::validate() const {
    require(!rows.empty(), "LatticeBasis: empty basis");
    for (const auto& r : rows) {
        require(r.size() == rows.size(), "LatticeBasis: matrix must be square");
    }
}

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    }
    return s;
}

// State of the integral LLL loop.
struct LllState {
    std::vector<std::vector<Int>> b;    // basis rows
    std::vector<std::vector<Int>> u;    // transform rows
    std::vector<Int> d;                 // d[0]=1, d[i+1]=Gram det of first i+1
    std::vector<std::vector<Int>> lam;  // lam[i][j], j < i
    std::size_t n;

    // Fill GSO data for row k (rows 0..k-1 already filled).
    void gso_row(std::size_t k) {
        for (std::size_t j = 0; j <= k; ++j) {
            Int v = dot(b[k], b[j]);
            for (std::size_t i = 0; i < j; ++i) {
                v = (d[i + 1] * v - lam[k][i] * lam[j][i]) / d[i];
            }
            if (j < k) {
                lam[k][j] = v;
            } else {
                if (v == 0) throw DegenerateLatticeError("lll_reduce: rows are linearly dependent");
                d[k + 1] = v;
            }
        }
    }

    void red(std::size_t k, std::size_t l) {
        Int two_lam = 2 * lam[k][l];
        if (cmpabs(two_lam, d[l + 1]) <= 0) return;
        // nearest integer to lam[k][l] / d[l+1]
        Int q;
        Int num = two_lam + d[l + 1];
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Int(2 * d[l + 1]).get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) mpz_submul(b[k][i].get_mpz_t(), q.get_mpz_t(), b[l][i].get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) mpz_submul(u[k][i].get_mpz_t(), q.get_mpz_t(), u[l][i].get_mpz_t());
        mpz_submul(lam[k][l].get_mpz_t(), q.get_mpz_t(), d[l + 1].get_mpz_t());
        for (std::size_t i = 0; i < l; ++i) {
            mpz_submul(lam[k][i].get_mpz_t(), q.get_mpz_t(), lam[l][i].get_mpz_t());
        }
    }

    void swap_step(std::size_t k, std::size_t kmax) {
        std::swap(b[k], b[k - 1]);
        std::swap(u[k], u[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Int lambda = lam[k][k - 1];
        Int bb = (d[k - 1] * d[k + 1] + lambda * lambda) / d[k];
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            Int t = lam[i][k];
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lambda * t) / d[k];
            lam[i][k - 1] = (bb * t + lambda * lam[i][k]) / d[k + 1];
        }
        d[k] = bb;
    }

    bool lovasz_fails(std::size_t k) const {
        // B*_k >= (3/4 - mu^2) B*_{k-1}, cleared of denominators:
        // 4 (d[k+1] d[k-1] + lam^2) >= 3 d[k]^2
        Int lhs = 4 * (d[k + 1] * d[k - 1] + lam[k][k - 1] * lam[k][k - 1]);
        Int rhs = 3 * d[k] * d[k];
        return lhs < rhs;
    }

private:
    static int cmpabs(const Int& a, const Int& b) {
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
    }
};

}  // namespace

LllResult lll_reduce_with_transform(const LatticeBasis& basis) {
    basis.validate();
    stats().lll_calls.fetch_add(1, std::memory_order_relaxed);
    const std::size_t n = basis.dim();

    LllState st;
    st.n = n;
    st.b = basis.rows;
    st.u = LatticeBasis::identity(n).rows;
    st.d.assign(n + 1, Int(0));
    st.d[0] = 1;
    st.lam.resize(n);
    for (std::size_t i = 0; i < n; ++i) st.lam[i].assign(i, Int(0));

    st.d[1] = dot(st.b[0], st.b[0]);
    if (st.d[1] == 0) throw DegenerateLatticeError("lll_reduce: zero row");
    if (n == 1) return {LatticeBasis{st.b}, st.u};

    std::size_t k = 1, kmax = 0;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            st.gso_row(k);
        }
        st.red(k, k - 1);
        if (st.lovasz_fails(k)) {
            st.swap_step(k, kmax);
            k = (k > 1) ? k - 1 : 1;
        } else {
            for (std::size_t l = k - 1; l-- > 0;) st.red(k, l);
            ++k;
        }
    }
    return {LatticeBasis{st.b}, st.u};
}

LatticeBasis lll_reduce(const LatticeBasis& basis) {
    return lll_reduce_with_transform(basis).basis;
}

IntegralGso integral_gso(const LatticeBasis& basis) {
    basis.validate();
    const std::size_t n = basis.dim();
    IntegralGso g;
    g.d.assign(n + 1, Int(0));
    g.d[0] = 1;
    g.lambda.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.lambda[i].assign(i, Int(0));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j <= k; ++j) {
            Int v = dot(basis.rows[k], basis.rows[j]);
            for (std::size_t i = 0; i < j; ++i) {
                v = (g.d[i + 1] * v - g.lambda[k][i] * g.lambda[j][i]) / g.d[i];
            }
            if (j < k) {
                g.lambda[k][j] = v;
            } else {
                if (v == 0) throw DegenerateLatticeError("integral_gso: rows are linearly dependent");
                g.d[k + 1] = v;
            }
        }
    }
    return g;
}

NormBoundWitness first_vector_norm_bound(const LatticeBasis& basis) {
    basis.validate();
    stats().norm_bound_checks.fetch_add(1, std::memory_order_relaxed);
    const std::size_t n = basis.dim();
    IntegralGso g = integral_gso(basis);
    Int norm2 = dot(basis.rows[0], basis.rows[0]);
    Int lhs = pow_ui(norm2, static_cast<unsigned long>(n));
    Int rhs = g.d[n];  // det(M)^2
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), n * (n - 1) / 2);
    return {lhs <= rhs, lhs, rhs};
}

// ---------------------------------------------------------------------------
// Integer polynomials and Sturm-based integer root isolation.

void IntPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

IntPoly IntPoly::derivative() const {
    IntPoly d;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        d.coeffs.push_back(coeffs[i] * static_cast<unsigned long>(i));
    }
    d.normalize();
    return d;
}

namespace {

Int poly_content(const IntPoly& p) {
    Int c = 0;
    for (const Int& a : p.coeffs) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
        if (c == 1) break;
    }
    return c;
}

IntPoly primitive_part(IntPoly p) {
    Int c = poly_content(p);
    if (c > 1) {
        for (Int& a : p.coeffs) a /= c;
    }
    return p;
}

// Pseudo-remainder of lc(g)^e * f by g, with e chosen so the scale factor is
// positive (needed so Sturm sign patterns survive the scaling).
IntPoly positive_prem(const IntPoly& f, const IntPoly& g) {
    std::size_t df = *f.degree(), dg = *g.degree();
    const Int& lc = g.coeffs.back();
    unsigned long e = static_cast<unsigned long>(df - dg + 1);
    if (lc < 0 && e % 2 == 1) ++e;
    Int scale = pow_ui(lc, e);

    IntPoly r = f;
    for (Int& a : r.coeffs) a *= scale;
    // long division by g, discarding the quotient
    for (std::size_t i = r.coeffs.size(); i-- > dg;) {
        if (r.coeffs[i] == 0) continue;
        Int q = r.coeffs[i] / lc;
        check_internal(q * lc == r.coeffs[i], "positive_prem: inexact leading division");
        r.coeffs[i] = 0;
        for (std::size_t j = 0; j < dg; ++j) {
            mpz_submul(r.coeffs[i - dg + j].get_mpz_t(), q.get_mpz_t(), g.coeffs[j].get_mpz_t());
        }
    }
    r.coeffs.resize(dg);
    r.normalize();
    return r;
}

// Primitive-PRS gcd over Z (result primitive with positive leading coeff).
IntPoly poly_gcd(IntPoly f, IntPoly g) {
    f = primitive_part(std::move(f));
    g = primitive_part(std::move(g));
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (*f.degree() < *g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        if (*g.degree() == 0) return IntPoly{{Int(1)}};
        IntPoly r = positive_prem(f, g);
        f = std::move(g);
        g = primitive_part(std::move(r));
    }
    if (f.coeffs.back() < 0) {
        for (Int& a : f.coeffs) a = -a;
    }
    return f;
}

// Exact division f / g for primitive g dividing f.
IntPoly poly_exact_div(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero()) return f;
    std::size_t df = *f.degree(), dg = *g.degree();
    check_internal(df >= dg, "poly_exact_div: degree underflow");
    IntPoly r = f;
    IntPoly q;
    q.coeffs.assign(df - dg + 1, Int(0));
    const Int& lc = g.coeffs.back();
    for (std::size_t i = r.coeffs.size(); i-- > dg;) {
        Int c = r.coeffs[i] / lc;
        check_internal(c * lc == r.coeffs[i], "poly_exact_div: inexact division");
        q.coeffs[i - dg] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) {
            mpz_submul(r.coeffs[i - dg + j].get_mpz_t(), c.get_mpz_t(), g.coeffs[j].get_mpz_t());
        }
    }
    for (const Int& a : r.coeffs) check_internal(a == 0, "poly_exact_div: nonzero remainder");
    q.normalize();
    return q;
}

// Sturm chain of a square-free polynomial: p, p', then negated positive-scaled
// pseudo-remainders, content-stripped. Positive scaling keeps it a valid
// Sturm sequence.
std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    chain.push_back(p);
    IntPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (!chain.back().is_zero() && *chain.back().degree() > 0) {
        IntPoly r = positive_prem(chain[chain.size() - 2], chain.back());
        for (Int& a : r.coeffs) a = -a;
        r = primitive_part(std::move(r));
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

// Dyadic rational num / 2^exp.
struct Dyadic {
    Int num;
    unsigned long exp;

    bool is_integer() const { return exp == 0; }
};

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
    unsigned long e = std::max(a.exp, b.exp);
    Int an = a.num << (e - a.exp);
    Int bn = b.num << (e - b.exp);
    Dyadic m{an + bn, e + 1};
    while (m.exp > 0 && mpz_even_p(m.num.get_mpz_t())) {
        m.num >>= 1;
        --m.exp;
    }
    return m;
}

// sign of p(num / 2^exp), exact.
int sign_at(const IntPoly& p, const Dyadic& t) {
    if (p.is_zero()) return 0;
    Int acc = p.coeffs.back();
    Int scale = Int(1) << t.exp;
    Int spow = 1;
    for (std::size_t i = p.coeffs.size() - 1; i-- > 0;) {
        spow *= scale;
        acc *= t.num;
        mpz_addmul(acc.get_mpz_t(), p.coeffs[i].get_mpz_t(), spow.get_mpz_t());
    }
    return sgn(acc);
}

int sign_changes(const std::vector<IntPoly>& chain, const Dyadic& t) {
    int count = 0, prev = 0;
    for (const IntPoly& p : chain) {
        int s = sign_at(p, t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// smallest integer > t
Int int_above(const Dyadic& t) {
    Int q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), t.num.get_mpz_t(), t.exp);
    return q + 1;
}

// largest integer <= t
Int int_below(const Dyadic& t) {
    Int q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), t.num.get_mpz_t(), t.exp);
    return q;
}

struct RootIsolator {
    const IntPoly& sf;
    const std::vector<IntPoly>& chain;
    Int lo_limit, hi_limit;  // only integers in [lo_limit, hi_limit] matter
    std::set<Int> roots;

    void try_integer(const Int& x) {
        if (x < lo_limit || x > hi_limit) return;
        if (sf.eval(x) == 0) roots.insert(x);
    }

    // Move a proposed evaluation point off the roots of sf by shrinking dyadic
    // nudges; records the point itself when it is an integer root.
    Dyadic clear_point(Dyadic t, const Dyadic& hi) {
        while (sign_at(sf, t) == 0) {
            if (t.is_integer()) try_integer(t.num);
            Dyadic next = midpoint(t, hi);
            check_internal(!(next.num == t.num && next.exp == t.exp),
                           "integer_roots: nudge failed to move");
            t = next;
        }
        return t;
    }

    // Roots of sf in (lo, hi]; vlo/vhi are sign-change counts at endpoints,
    // which are themselves non-roots of sf.
    void isolate(const Dyadic& lo, int vlo, const Dyadic& hi, int vhi) {
        if (vlo - vhi <= 0) return;
        Int a = int_above(lo), b = int_below(hi);
        if (a > b) return;  // no integers inside; non-integer roots are irrelevant
        if (a == b) {
            try_integer(a);
            return;
        }
        if (b == a + 1) {
            try_integer(a);
            try_integer(b);
            return;
        }
        Dyadic mid = clear_point(midpoint(lo, hi), hi);
        int vmid = sign_changes(chain, mid);
        isolate(lo, vlo, mid, vmid);
        isolate(mid, vmid, hi, vhi);
    }
};

}  // namespace

std::vector<Int> integer_roots(const IntPoly& h, const Nat& bound) {
    require(!h.is_zero(), "integer_roots: zero polynomial");
    IntPoly p = h;
    p.normalize();
    require(!p.is_zero(), "integer_roots: zero polynomial");
    if (*p.degree() == 0) return {};

    IntPoly sf = poly_exact_div(primitive_part(p), poly_gcd(p, p.derivative()));
    if (sf.is_zero() || *sf.degree() == 0) return {};
    std::vector<IntPoly> chain = sturm_chain(sf);

    RootIsolator iso{sf, chain, -Int(bound), Int(bound), {}};
    // Endpoints just outside [-bound, bound]; nudged outward if they happen to
    // be roots of sf (such roots are non-integers, so nothing in range is lost).
    Dyadic lo{-(2 * Int(bound) + 1), 1};
    Dyadic hi{2 * Int(bound) + 1, 1};
    while (sign_at(sf, lo) == 0) lo = Dyadic{2 * lo.num - 1, lo.exp + 1};
    while (sign_at(sf, hi) == 0) hi = Dyadic{2 * hi.num + 1, hi.exp + 1};
    iso.isolate(lo, sign_changes(chain, lo), hi, sign_changes(chain, hi));

    // endpoints +-bound are inside (lo, hi], already covered by isolate
    return std::vector<Int>(iso.roots.begin(), iso.roots.end());
}

}  // namespace ordseek
