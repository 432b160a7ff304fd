#include "arith.hpp"

#include <algorithm>

#include "error.hpp"

namespace ordseek {

Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus) {
    require(modulus >= 2, "mod_pow: modulus must be >= 2");
    Nat r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Nat gcd(const Nat& a, const Nat& b) {
    Nat r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Nat lcm(const Nat& a, const Nat& b) {
    require(a >= 1 && b >= 1, "lcm: inputs must be >= 1");
    Nat g = gcd(a, b);
    return a / g * b;
}

Nat mod_inv(const Nat& a, const Nat& modulus) {
    require(modulus >= 2, "mod_inv: modulus must be >= 2");
    Nat g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) throw NotInvertibleError(g);
    Nat r = s % modulus;
    if (r < 0) r += modulus;
    return r;
}

Nat iroot(const Nat& n, unsigned long r) {
    require(r >= 1, "iroot: r must be >= 1");
    require(n >= 0, "iroot: n must be nonnegative");
    Nat root;
    mpz_root(root.get_mpz_t(), n.get_mpz_t(), r);
    return root;
}

Nat iroot_ceil(const Nat& n, unsigned long r) {
    Nat t = iroot(n, r);
    if (pow_ui(t, r) == n) return t;
    return t + 1;
}

ModPoly::ModPoly(Nat modulus, std::vector<Nat> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {
    require(modulus_ >= 2, "ModPoly: modulus must be >= 2");
    for (Nat& c : coeffs_) {
        c %= modulus_;
        if (c < 0) c += modulus_;
    }
    normalize();
}

void ModPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ModPoly ModPoly::zero(Nat modulus) { return ModPoly(std::move(modulus), {}); }

ModPoly ModPoly::constant(Nat modulus, const Nat& c) { return ModPoly(std::move(modulus), {c}); }

ModPoly ModPoly::linear(Nat modulus, const Nat& a) {
    return ModPoly(std::move(modulus), {a, Nat(1)});
}

Nat ModPoly::eval(const Nat& point) const {
    Nat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= point;
        acc += *it;
        acc %= modulus_;
    }
    return acc;
}

namespace {

using Coeffs = std::vector<Nat>;

// c += a * b, all plain integer vectors (reduction happens at the end).
void schoolbook_acc(const Nat* a, std::size_t na, const Nat* b, std::size_t nb, Nat* c) {
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
}

void karatsuba(const Nat* a, std::size_t na, const Nat* b, std::size_t nb, Nat* c,
               std::size_t threshold) {
    if (na == 0 || nb == 0) return;
    if (na < threshold || nb < threshold) {
        schoolbook_acc(a, na, b, nb, c);
        return;
    }
    std::size_t h = std::max(na, nb) / 2;
    if (h >= na) {  // lopsided split; fall back on the smaller operand
        schoolbook_acc(a, na, b, nb, c);
        return;
    }
    if (h >= nb) {
        schoolbook_acc(a, na, b, nb, c);
        return;
    }
    // a = a0 + x^h a1, b = b0 + x^h b1
    const Nat *a0 = a, *a1 = a + h;
    const Nat *b0 = b, *b1 = b + h;
    std::size_t na0 = h, na1 = na - h, nb0 = h, nb1 = nb - h;

    Coeffs z0(na0 + nb0 - 1), z2(na1 + nb1 - 1);
    karatsuba(a0, na0, b0, nb0, z0.data(), threshold);
    karatsuba(a1, na1, b1, nb1, z2.data(), threshold);

    std::size_t nsa = std::max(na0, na1), nsb = std::max(nb0, nb1);
    Coeffs sa(nsa), sb(nsb);
    for (std::size_t i = 0; i < na0; ++i) sa[i] = a0[i];
    for (std::size_t i = 0; i < na1; ++i) sa[i] += a1[i];
    for (std::size_t i = 0; i < nb0; ++i) sb[i] = b0[i];
    for (std::size_t i = 0; i < nb1; ++i) sb[i] += b1[i];

    Coeffs z1(nsa + nsb - 1);
    karatsuba(sa.data(), nsa, sb.data(), nsb, z1.data(), threshold);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

    for (std::size_t i = 0; i < z0.size(); ++i) c[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i) c[h + i] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) c[2 * h + i] += z2[i];
}

}  // namespace

ModPoly poly_mul_mod(const ModPoly& p, const ModPoly& q, std::size_t karatsuba_threshold) {
    require(p.modulus() == q.modulus(), "poly_mul_mod: moduli differ");
    if (p.is_zero() || q.is_zero()) return ModPoly::zero(p.modulus());
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    Coeffs c(a.size() + b.size() - 1);
    karatsuba(a.data(), a.size(), b.data(), b.size(), c.data(),
              std::max<std::size_t>(2, karatsuba_threshold));
    for (Nat& x : c) x %= p.modulus();
    return ModPoly(p.modulus(), std::move(c));
}

namespace {

// Plain long division for modest degrees.
Coeffs rem_schoolbook(const Coeffs& p, const Coeffs& d, const Nat& mod) {
    std::size_t dq = d.size() - 1;
    Coeffs r = p;
    for (std::size_t i = r.size(); i-- > dq;) {
        Nat c = r[i] % mod;
        if (c < 0) c += mod;
        if (c == 0) {
            r[i] = 0;
            continue;
        }
        r[i] = 0;
        for (std::size_t j = 0; j < dq; ++j) {
            mpz_submul(r[i - dq + j].get_mpz_t(), c.get_mpz_t(), d[j].get_mpz_t());
        }
        for (std::size_t j = 0; j < dq; ++j) {
            Nat& x = r[i - dq + j];
            x %= mod;
            if (x < 0) x += mod;
        }
    }
    r.resize(dq);
    return r;
}

Coeffs mul_trunc(const Coeffs& a, const Coeffs& b, std::size_t k, const Nat& mod,
                 std::size_t threshold = 32) {
    if (a.empty() || b.empty() || k == 0) return {};
    Coeffs c(std::min(k, a.size() + b.size() - 1));
    Coeffs full(a.size() + b.size() - 1);
    karatsuba(a.data(), a.size(), b.data(), b.size(), full.data(), threshold);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = full[i] % mod;
        if (c[i] < 0) c[i] += mod;
    }
    return c;
}

// Power-series inverse to k terms of a series with unit constant term.
Coeffs series_inverse(const Coeffs& q, std::size_t k, const Nat& mod) {
    Coeffs inv{Nat(1)};  // q[0] == 1
    std::size_t t = 1;
    while (t < k) {
        t = std::min(2 * t, k);
        Coeffs qt(q.begin(), q.begin() + std::min(t, q.size()));
        Coeffs prod = mul_trunc(qt, inv, t, mod);
        // 2 - q*inv
        Coeffs corr(t);
        for (std::size_t i = 0; i < t; ++i) {
            Nat v = (i < prod.size()) ? prod[i] : Nat(0);
            v = -v;
            if (i == 0) v += 2;
            v %= mod;
            if (v < 0) v += mod;
            corr[i] = v;
        }
        inv = mul_trunc(inv, corr, t, mod);
        inv.resize(t);
    }
    return inv;
}

// Remainder via reversal + Newton reciprocal; quasi-linear in the degree.
Coeffs rem_newton(const Coeffs& p, const Coeffs& d, const Nat& mod) {
    std::size_t n = p.size() - 1, m = d.size() - 1;
    std::size_t k = n - m + 1;  // quotient length
    Coeffs drev(d.rbegin(), d.rend());
    Coeffs prev(p.rbegin(), p.rend());
    prev.resize(std::min(prev.size(), k));
    Coeffs inv = series_inverse(drev, k, mod);
    Coeffs qrev = mul_trunc(prev, inv, k, mod);
    qrev.resize(k);
    Coeffs quot(qrev.rbegin(), qrev.rend());
    // rem = p - quot*d, truncated to m terms
    Coeffs prod(quot.size() + d.size() - 1);
    karatsuba(quot.data(), quot.size(), d.data(), d.size(), prod.data(), 32);
    Coeffs r(m);
    for (std::size_t i = 0; i < m; ++i) {
        Nat v = p[i] - prod[i];
        v %= mod;
        if (v < 0) v += mod;
        r[i] = v;
    }
    return r;
}

}  // namespace

ModPoly poly_rem_monic(const ModPoly& p, const ModPoly& q) {
    require(p.modulus() == q.modulus(), "poly_rem_monic: moduli differ");
    require(!q.is_zero(), "poly_rem_monic: division by zero polynomial");
    require(q.coeffs().back() == 1, "poly_rem_monic: divisor must be monic");
    std::size_t dq = *q.degree();
    if (dq == 0) return ModPoly::zero(p.modulus());
    if (p.is_zero() || *p.degree() < dq) return p;

    const Nat& mod = p.modulus();
    const Coeffs& pc = p.coeffs();
    const Coeffs& dc = q.coeffs();
    std::size_t quot_len = pc.size() - dq;
    Coeffs r = (dq >= 48 && quot_len >= 48) ? rem_newton(pc, dc, mod)
                                            : rem_schoolbook(pc, dc, mod);
    return ModPoly(mod, std::move(r));
}

namespace {

// Subproduct tree over linear factors (x - t_i); node 1 is the root.
struct SubproductTree {
    std::vector<ModPoly> nodes;  // 1-indexed heap layout
    std::size_t leaves;
};

SubproductTree build_tree(const Nat& mod, const std::vector<Nat>& points) {
    std::size_t n = points.size();
    std::size_t size = 1;
    while (size < n) size <<= 1;
    SubproductTree tree{std::vector<ModPoly>(2 * size, ModPoly::constant(mod, 1)), size};
    for (std::size_t i = 0; i < n; ++i) {
        Nat neg = (mod - points[i]) % mod;
        tree.nodes[size + i] = ModPoly(mod, {neg, Nat(1)});
    }
    for (std::size_t i = size; i-- > 1;) {
        tree.nodes[i] = poly_mul_mod(tree.nodes[2 * i], tree.nodes[2 * i + 1]);
    }
    return tree;
}

void descend(const SubproductTree& tree, std::size_t node, const ModPoly& rem,
             std::size_t first, std::size_t count, const std::vector<Nat>& points,
             std::vector<Nat>& out) {
    if (count == 0) return;
    if (count == 1) {
        out[first] = rem.eval(points[first]);
        return;
    }
    std::size_t half = tree.leaves >> 1;
    std::size_t span = tree.leaves;
    // Walk down: node spans [first, first+span); recompute span from depth.
    // Simpler: recurse with explicit child spans.
    (void)half;
    (void)span;
    std::size_t left = 2 * node, right = 2 * node + 1;
    std::size_t lcount = 0;
    // Left child covers the first half of this node's leaf slots.
    std::size_t slots = 1;
    {
        // number of leaf slots under `node`
        std::size_t x = node;
        while (x < tree.leaves) {
            x <<= 1;
            slots <<= 1;
        }
    }
    std::size_t half_slots = slots / 2;
    lcount = std::min(count, half_slots);
    ModPoly lrem = poly_rem_monic(rem, tree.nodes[left]);
    descend(tree, left, lrem, first, lcount, points, out);
    if (count > lcount) {
        ModPoly rrem = poly_rem_monic(rem, tree.nodes[right]);
        descend(tree, right, rrem, first + lcount, count - lcount, points, out);
    }
}

}  // namespace

std::vector<Nat> multi_eval(const ModPoly& p, const std::vector<Nat>& points) {
    for (const Nat& t : points) {
        require(t >= 0 && t < p.modulus(), "multi_eval: point not reduced mod the modulus");
    }
    std::vector<Nat> out(points.size());
    if (points.empty()) return out;
    if (p.is_zero() || points.size() <= 2 || p.coeffs().size() <= 4) {
        for (std::size_t i = 0; i < points.size(); ++i) out[i] = p.eval(points[i]);
        return out;
    }
    SubproductTree tree = build_tree(p.modulus(), points);
    ModPoly top = poly_rem_monic(p, tree.nodes[1]);
    descend(tree, 1, top, 0, points.size(), points, out);
    return out;
}

}  // namespace ordseek
