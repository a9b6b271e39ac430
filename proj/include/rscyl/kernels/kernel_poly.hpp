#pragma once

#include "rscyl/poly/polynomial.hpp"

#include <span>
#include <vector>

namespace rscyl {

// Joint polynomial in (u, v), homogeneous of degree du in u and dv in v,
// with dense binary64 Multivector coefficients: value at (u, v) is
// sum_{alpha, beta} u^alpha v^beta c_{alpha beta}.
class KernelPoly {
public:
    KernelPoly() = default;
    KernelPoly(int n, int du, int dv);

    int dim() const { return n_; }
    int u_degree() const { return du_; }
    int v_degree() const { return dv_; }
    int u_count() const { return nu_; }
    int v_count() const { return nv_; }
    int blade_count() const { return nb_; }

    double* coeff(int iu, int iv) { return data_.data() + offset(iu, iv); }
    const double* coeff(int iu, int iv) const { return data_.data() + offset(iu, iv); }
    Multivector<double> coefficient(int iu, int iv) const;
    void set_coefficient(int iu, int iv, const Multivector<double>& c);

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    KernelPoly& operator+=(const KernelPoly& o);
    KernelPoly& operator-=(const KernelPoly& o);
    KernelPoly& operator*=(double s);
    friend KernelPoly operator+(KernelPoly a, const KernelPoly& b) { return a += b; }
    friend KernelPoly operator-(KernelPoly a, const KernelPoly& b) { return a -= b; }
    friend KernelPoly operator*(KernelPoly a, double s) { return a *= s; }
    friend bool operator==(const KernelPoly&, const KernelPoly&) = default;

    Multivector<double> evaluate(std::span<const double> u, std::span<const double> v) const;
    // Polynomial in u at fixed v.
    FloatPoly u_section(std::span<const double> v) const;
    // Polynomial in v with the u-monomial iu fixed.
    FloatPoly v_slice(int iu) const;
    // Polynomial in u with the v-monomial iv fixed.
    FloatPoly u_slice(int iv) const;
    static KernelPoly from_u_slices(const std::vector<FloatPoly>& slices, int dv);

    // max |coefficient| and sum of coefficient norms.
    double max_abs() const;
    double coefficient_norm_sum() const;
    void require_same_shape(const KernelPoly& o) const;

private:
    std::size_t offset(int iu, int iv) const {
        return (static_cast<std::size_t>(iu) * static_cast<std::size_t>(nv_) + static_cast<std::size_t>(iv)) *
               static_cast<std::size_t>(nb_);
    }
    int n_ = 0, du_ = 0, dv_ = 0, nu_ = 0, nv_ = 0, nb_ = 0;
    std::vector<double> data_;
};

// int_S K(u, v) B(v) dS(v): pairing over the second slot; the result is a
// polynomial in the first slot, labelled with `label`.
FloatPoly pair_second(const KernelPoly& k, const FloatPoly& b, Var label = Var::v);

// Dense coefficient block [monomial * 2^n + blade] in the degree basis, and back.
std::vector<double> dense_coefficients(const FloatPoly& p);
FloatPoly from_dense(int n, int degree, Var var, std::span<const double> coeffs);

// out += scale * int_S K(u, v) B(v) dS(v) on dense blocks; kernel_left = false
// multiplies in the order B K instead.
void pair_second_dense(const KernelPoly& k, std::span<const double> b, std::span<double> out, double scale = 1.0,
                       bool kernel_left = true);

// int_S K(u, v) B(u) dS(u): pairing over the first slot; result in v.
FloatPoly pair_first(const KernelPoly& k, const FloatPoly& b);

// Dense moment table omega_n M(alpha + beta) for alpha of degree d1 and beta of degree d2.
const std::vector<double>& moment_table(int n, int d1, int d2);

} // namespace rscyl
