#pragma once

#include "rscyl/poly/polynomial.hpp"

#include <vector>

namespace rscyl {

enum class Side { left, right };

// sum_j e_j d/dw_j f (left) or sum_j d/dw_j f e_j (right).
template <CliffordScalar S>
CliffordPolynomial<S> dirac_apply(const CliffordPolynomial<S>& f, Side side = Side::left) {
    const int n = f.dim();
    CliffordPolynomial<S> out(n, f.degree() > 0 ? f.degree() - 1 : -1, f.var());
    if (f.degree() <= 0) return out;
    for (int j = 1; j <= n; ++j) {
        const auto ej = Multivector<S>::e(n, j);
        const auto d = f.derivative(j);
        out += side == Side::left ? ej * d : d * ej;
    }
    return out;
}

template <CliffordScalar S>
CliffordPolynomial<S> laplacian(const CliffordPolynomial<S>& f) {
    const int n = f.dim();
    CliffordPolynomial<S> out(n, f.degree() >= 2 ? f.degree() - 2 : -1, f.var());
    if (f.degree() < 2) return out;
    for (int j = 1; j <= n; ++j) out += f.derivative(j).derivative(j);
    return out;
}

template <CliffordScalar S>
bool is_monogenic(const CliffordPolynomial<S>& f, Side side = Side::left) {
    return dirac_apply(f, side).is_zero();
}

namespace detail {

template <CliffordScalar S>
void require_harmonic(const CliffordPolynomial<S>& h) {
    const auto lap = laplacian(h);
    if constexpr (ScalarTraits<S>::field == ScalarField::exact_rational) {
        if (!lap.is_zero())
            throw DomainError("harmonic check failed: Laplacian of the degree-" +
                              std::to_string(h.degree()) + " input is nonzero");
    } else {
        double scale = 1.0;
        for (const auto& [a, c] : h.terms())
            for (double x : c.coeffs()) scale = std::max(scale, std::abs(x));
        if (max_abs_coefficient(lap) > 1e-9 * scale)
            throw DomainError("harmonic check failed: Laplacian of the degree-" +
                              std::to_string(h.degree()) + " input exceeds 1e-9 relative");
    }
}

} // namespace detail

// h = p_k + u p_{k-1} (left) or h = p_k + p_{k-1} u (right).
template <CliffordScalar S>
struct AlmansiFischer {
    CliffordPolynomial<S> monogenic;  // p_k
    CliffordPolynomial<S> remainder;  // p_{k-1}
};

template <CliffordScalar S>
AlmansiFischer<S> almansi_fischer_split(const CliffordPolynomial<S>& h, Side side = Side::left) {
    detail::require_harmonic(h);
    const int n = h.dim();
    const int k = h.degree();
    if (k <= 0) return {h, CliffordPolynomial<S>(n, -1, h.var())};
    auto rem = dirac_apply(h, side) / S(-n - 2 * k + 2);
    const auto w = CliffordPolynomial<S>::variable(n, h.var());
    auto mono = h - (side == Side::left ? w * rem : rem * w);
    return {std::move(mono), std::move(rem)};
}

template <CliffordScalar S>
AlmansiFischer<S> almansi_fischer_split(const CliffordPolynomial<S>& h, int k, Side side = Side::left) {
    if (h.degree() != k)
        throw UsageError("Almansi-Fischer split: input has degree " + std::to_string(h.degree()) +
                         ", expected " + std::to_string(k));
    return almansi_fischer_split(h, side);
}

template <CliffordScalar S>
CliffordPolynomial<S> project_Pk(const CliffordPolynomial<S>& h, Side side = Side::left) {
    return almansi_fischer_split(h, side).monogenic;
}

// u * p_{k-1} (left) or p_{k-1} * u (right).
template <CliffordScalar S>
CliffordPolynomial<S> project_I_minus_Pk(const CliffordPolynomial<S>& h, Side side = Side::left) {
    auto split = almansi_fischer_split(h, side);
    return h - split.monogenic;
}

// Harmonic component of a homogeneous polynomial (coefficient-wise on the
// real components).
template <CliffordScalar S>
CliffordPolynomial<S> harmonic_projection(const CliffordPolynomial<S>& p) {
    const int n = p.dim();
    const int k = p.degree();
    if (k < 2) return p;
    CliffordPolynomial<S> out = p;
    CliffordPolynomial<S> lap_j = p;
    CliffordPolynomial<S> norm2(n, 2, p.var());
    for (int i = 0; i < n; ++i) {
        Exponent a;
        a[static_cast<std::size_t>(i)] = 2;
        norm2.add_term(a, Multivector<S>(n, S(1)));
    }
    CliffordPolynomial<S> norm_pow = CliffordPolynomial<S>::constant(Multivector<S>(n, S(1)), p.var());
    // denominator 4^j j! prod_{i=1}^{j} (n/2 + k - 1 - i)
    S denom(1);
    for (int j = 1; 2 * j <= k; ++j) {
        lap_j = laplacian(lap_j);
        norm_pow = norm_pow * norm2;
        denom *= S(4 * j);
        S half_n = S(n) / S(2);
        denom *= half_n + S(k - 1 - j);
        auto term = norm_pow * lap_j;
        term /= denom;
        if (j % 2) out -= term;
        else out += term;
    }
    return out;
}

// Fueter polynomials P_sigma for |sigma| = k, left-monogenic; right side
// returns their conjugates (right-monogenic).
struct MonogenicBasis {
    int n = 0;
    int k = 0;
    Side side = Side::left;
    std::vector<std::vector<int>> indices;  // sigma = (k_2, ..., k_n)
    std::vector<ExactPoly> elements;

    std::size_t size() const { return elements.size(); }
};

MonogenicBasis fueter_basis(int n, int k, Side side = Side::left);

// Real rank of the coefficient matrix of the polynomials (exact).
int real_rank(const std::vector<ExactPoly>& polys);

} // namespace rscyl
