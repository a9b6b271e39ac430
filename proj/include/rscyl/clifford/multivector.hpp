#pragma once

#include "rscyl/clifford/blade.hpp"
#include "rscyl/clifford/scalar.hpp"
#include "rscyl/errors.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace rscyl {

inline void check_dimension(int n) {
    if (n < 1 || n > kMaxDim)
        throw UsageError("dimension n=" + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxDim) + "]");
}

// Element of Cl_n with dense bitmask-indexed coefficients.
template <CliffordScalar S>
class Multivector {
public:
    using scalar_type = S;

    Multivector() = default;
    explicit Multivector(int n) : n_(n) {
        check_dimension(n);
        coeffs_.assign(std::size_t{1} << n, S(0));
    }
    Multivector(int n, const S& scalar) : Multivector(n) { coeffs_[0] = scalar; }

    static Multivector basis(int n, Blade a, const S& coeff = S(1)) {
        Multivector m(n);
        if (a >= (Blade{1} << n))
            throw UsageError("blade " + blade_name(a) + " not in Cl_" + std::to_string(n));
        m.coeffs_[a] = coeff;
        return m;
    }
    static Multivector e(int n, int i) {
        if (i < 1 || i > n)
            throw UsageError("basis index e" + std::to_string(i) + " outside 1.." + std::to_string(n));
        return basis(n, basis_vector_blade(i));
    }

    int dim() const { return n_; }
    std::size_t size() const { return coeffs_.size(); }
    static constexpr ScalarField field() { return ScalarTraits<S>::field; }

    const S& operator[](Blade a) const { return coeffs_[a]; }
    S& operator[](Blade a) { return coeffs_[a]; }
    const std::vector<S>& coeffs() const { return coeffs_; }
    std::vector<S>& coeffs() { return coeffs_; }

    const S& scalar_part() const { return coeffs_[0]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!ScalarTraits<S>::is_zero(c)) return false;
        return true;
    }

    Multivector& operator+=(const Multivector& o) {
        require_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        require_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    Multivector& operator*=(const S& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    Multivector& operator/=(const S& s) {
        for (auto& c : coeffs_) c /= s;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator-(Multivector a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
    friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
    friend Multivector operator/(Multivector a, const S& s) { return a /= s; }

    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        return geometric_product(a, b);
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

    void require_same(const Multivector& o) const {
        if (n_ != o.n_)
            throw UsageError("multivector dimension mismatch: Cl_" + std::to_string(n_) +
                             " vs Cl_" + std::to_string(o.n_));
    }

private:
    int n_ = 0;
    std::vector<S> coeffs_;
};

template <CliffordScalar S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
    a.require_same(b);
    const int n = a.dim();
    const auto& table = BladeTable::get(n);
    Multivector<S> out(n);
    const Blade count = Blade{1} << n;
    for (Blade i = 0; i < count; ++i) {
        const S& ai = a[i];
        if (ScalarTraits<S>::is_zero(ai)) continue;
        for (Blade j = 0; j < count; ++j) {
            const S& bj = b[j];
            if (ScalarTraits<S>::is_zero(bj)) continue;
            if (table.sign(i, j) > 0)
                out[i ^ j] += ai * bj;
            else
                out[i ^ j] -= ai * bj;
        }
    }
    return out;
}

// out += a * b without allocating.
template <CliffordScalar S>
void accumulate_product(Multivector<S>& out, const Multivector<S>& a, const Multivector<S>& b) {
    a.require_same(b);
    out.require_same(a);
    const auto& table = BladeTable::get(a.dim());
    const Blade count = Blade{1} << a.dim();
    for (Blade i = 0; i < count; ++i) {
        if (ScalarTraits<S>::is_zero(a[i])) continue;
        for (Blade j = 0; j < count; ++j) {
            if (ScalarTraits<S>::is_zero(b[j])) continue;
            if (table.sign(i, j) > 0)
                out[i ^ j] += a[i] * b[j];
            else
                out[i ^ j] -= a[i] * b[j];
        }
    }
}

template <CliffordScalar S>
Multivector<S> conjugate(const Multivector<S>& a) {
    Multivector<S> out = a;
    for (Blade i = 0; i < out.size(); ++i)
        if (conjugation_sign(i) < 0) out[i] = -out[i];
    return out;
}

template <CliffordScalar S>
Multivector<S> reverse(const Multivector<S>& a) {
    Multivector<S> out = a;
    for (Blade i = 0; i < out.size(); ++i)
        if (reversion_sign(i) < 0) out[i] = -out[i];
    return out;
}

template <CliffordScalar S>
Multivector<S> grade_project(const Multivector<S>& a, int g) {
    if (g < 0 || g > a.dim())
        throw UsageError("grade " + std::to_string(g) + " outside 0.." + std::to_string(a.dim()));
    Multivector<S> out(a.dim());
    for (Blade i = 0; i < a.size(); ++i)
        if (grade(i) == g) out[i] = a[i];
    return out;
}

// Scalar part of conjugate(a) * a.
template <CliffordScalar S>
S norm_squared(const Multivector<S>& a) {
    return geometric_product(conjugate(a), a).scalar_part();
}

// Direct coefficient-square sum; equals norm_squared.
template <CliffordScalar S>
S coefficient_norm_squared(const Multivector<S>& a) {
    S s(0);
    for (const auto& c : a.coeffs()) s += c * c;
    return s;
}

inline double norm(const Multivector<double>& a) { return std::sqrt(coefficient_norm_squared(a)); }

inline Multivector<double> to_double(const Multivector<Rational>& a) {
    Multivector<double> out(a.dim());
    for (Blade i = 0; i < a.size(); ++i) out[i] = a[i].get_d();
    return out;
}

template <CliffordScalar S>
std::string to_string(const Multivector<S>& a) {
    std::ostringstream os;
    bool first = true;
    for (Blade i = 0; i < a.size(); ++i) {
        if (ScalarTraits<S>::is_zero(a[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << a[i];
        if (i != 0) os << "*" << blade_name(i);
    }
    if (first) os << "0";
    return os.str();
}

template <CliffordScalar S>
std::ostream& operator<<(std::ostream& os, const Multivector<S>& a) {
    return os << to_string(a);
}

} // namespace rscyl
