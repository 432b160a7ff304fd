#pragma once

#include <cstddef>
#include <vector>

#include "natural.hpp"

namespace ordseek {

// Square integer matrix; row i is basis vector b_i.
struct LatticeBasis {
    std::vector<std::vector<Int>> rows;

    std::size_t dim() const { return rows.size(); }
    static LatticeBasis identity(std::size_t n);
    void validate() const;  // square, nonempty
};

struct LllResult {
    LatticeBasis basis;
    // Unimodular transform with transform * input == basis, tracked exactly.
    std::vector<std::vector<Int>> transform;
};

// Exact integral LLL reduction at delta = 3/4. No floating point anywhere:
// Gram-Schmidt data is carried as integer lambda/d tables (exact scaled
// rationals). Throws DegenerateLatticeError on dependent rows.
LllResult lll_reduce_with_transform(const LatticeBasis& basis);
LatticeBasis lll_reduce(const LatticeBasis& basis);

// Exact scaled Gram-Schmidt data of a basis: d[0] = 1, d[i+1] = Gram
// determinant of the first i+1 rows, lambda[i][j] = mu_{i,j} * d[j+1].
struct IntegralGso {
    std::vector<Int> d;                       // size n+1
    std::vector<std::vector<Int>> lambda;     // lambda[i] has i entries
};
IntegralGso integral_gso(const LatticeBasis& basis);

// Exact check of ||b_1||^(2n) <= 2^(n(n-1)/2) * det^2 for the first row of a
// reduced basis (the classical LLL first-vector guarantee, squared and raised
// to integer powers so the comparison is exact).
struct NormBoundWitness {
    bool pass;
    Int lhs;  // ||b_1||^(2n)
    Int rhs;  // 2^(n(n-1)/2) * det(M)^2
};
NormBoundWitness first_vector_norm_bound(const LatticeBasis& basis);

// Signed integer polynomial, ascending degree, leading coefficient nonzero
// unless the polynomial is zero (empty coefficient list).
struct IntPoly {
    std::vector<Int> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    // degree of the zero polynomial is the -inf sentinel (no value)
    std::optional<std::size_t> degree() const {
        if (coeffs.empty()) return std::nullopt;
        return coeffs.size() - 1;
    }
    void normalize();
    Int eval(const Int& x) const;
    IntPoly derivative() const;
};

// All integers x with h(x) = 0 and |x| <= bound, sorted ascending. Exact
// arithmetic throughout: Sturm-sequence sign counts over dyadic intervals,
// bisection pruned to intervals containing integers, exact final evaluation.
// h must be nonzero.
std::vector<Int> integer_roots(const IntPoly& h, const Nat& bound);

}  // namespace ordseek
