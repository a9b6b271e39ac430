#pragma once

#include "rscyl/clifford/multivector.hpp"

#include <cmath>
#include <initializer_list>
#include <span>
#include <vector>

namespace rscyl {

// x = sum_j x_j e_j in R^n.
template <CliffordScalar S>
class VectorN {
public:
    VectorN() = default;
    explicit VectorN(int n) : comps_(static_cast<std::size_t>(n), S(0)) { check_dimension(n); }
    explicit VectorN(std::vector<S> comps) : comps_(std::move(comps)) {
        check_dimension(static_cast<int>(comps_.size()));
    }
    VectorN(std::initializer_list<S> comps) : comps_(comps) {
        check_dimension(static_cast<int>(comps_.size()));
    }

    static VectorN unit(int n, int i) {
        VectorN v(n);
        v[i - 1] = S(1);
        return v;
    }

    int dim() const { return static_cast<int>(comps_.size()); }
    const S& operator[](std::size_t i) const { return comps_[i]; }
    S& operator[](std::size_t i) { return comps_[i]; }
    std::span<const S> components() const { return comps_; }

    Multivector<S> to_multivector() const {
        Multivector<S> m(dim());
        for (int i = 0; i < dim(); ++i) m[basis_vector_blade(i + 1)] = comps_[i];
        return m;
    }

    static VectorN from_multivector(const Multivector<S>& m) {
        VectorN v(m.dim());
        for (int i = 0; i < m.dim(); ++i) v[i] = m[basis_vector_blade(i + 1)];
        return v;
    }

    S norm_squared() const {
        S s(0);
        for (const auto& c : comps_) s += c * c;
        return s;
    }

    VectorN& operator+=(const VectorN& o) {
        require_same(o);
        for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
        return *this;
    }
    VectorN& operator-=(const VectorN& o) {
        require_same(o);
        for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
        return *this;
    }
    VectorN& operator*=(const S& s) {
        for (auto& c : comps_) c *= s;
        return *this;
    }
    friend VectorN operator+(VectorN a, const VectorN& b) { return a += b; }
    friend VectorN operator-(VectorN a, const VectorN& b) { return a -= b; }
    friend VectorN operator*(VectorN a, const S& s) { return a *= s; }
    friend VectorN operator*(const S& s, VectorN a) { return a *= s; }
    friend bool operator==(const VectorN& a, const VectorN& b) { return a.comps_ == b.comps_; }

    void require_same(const VectorN& o) const {
        if (dim() != o.dim())
            throw UsageError("vector dimension mismatch: " + std::to_string(dim()) + " vs " +
                             std::to_string(o.dim()));
    }

private:
    std::vector<S> comps_;
};

template <CliffordScalar S>
S dot(const VectorN<S>& a, const VectorN<S>& b) {
    a.require_same(b);
    S s(0);
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const VectorN<double>& a) { return std::sqrt(a.norm_squared()); }

constexpr double kUnitTolerance = 1e-12;

// Grade-1 part of y x y for unit y: -x_parallel + x_perp.
template <CliffordScalar S>
VectorN<S> reflect(const VectorN<S>& y, const VectorN<S>& x) {
    y.require_same(x);
    const S ny = y.norm_squared();
    if constexpr (ScalarTraits<S>::field == ScalarField::exact_rational) {
        if (ny != 1)
            throw UsageError("reflect: mirror vector must be exactly unit, |y|^2 = " + ny.get_str());
    } else {
        if (!(std::abs(ny - 1.0) <= kUnitTolerance))
            throw UsageError("reflect: mirror vector must be unit within 1e-12, |y|^2 = " +
                             std::to_string(ny));
    }
    const Multivector<S> ym = y.to_multivector();
    return VectorN<S>::from_multivector(
        grade_project(geometric_product(geometric_product(ym, x.to_multivector()), ym), 1));
}

} // namespace rscyl
