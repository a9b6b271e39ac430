#pragma once

#include "rscyl/clifford/multivector.hpp"
#include "rscyl/clifford/vector.hpp"
#include "rscyl/poly/exponent.hpp"

#include <map>
#include <span>
#include <string>

namespace rscyl {

enum class Var { u, v, x };

inline const char* var_name(Var v) {
    switch (v) {
    case Var::u: return "u";
    case Var::v: return "v";
    case Var::x: return "x";
    }
    return "?";
}

// Homogeneous polynomial sum_alpha c_alpha w^alpha with Multivector
// coefficients written on the left of the monomial. Degree -1 denotes the
// zero space (e.g. M_{-1}).
template <CliffordScalar S>
class CliffordPolynomial {
public:
    using Terms = std::map<Exponent, Multivector<S>>;

    CliffordPolynomial() = default;
    CliffordPolynomial(int n, int degree, Var var = Var::u) : n_(n), degree_(degree), var_(var) {
        check_dimension(n);
        if (degree < -1) throw UsageError("polynomial degree below -1");
    }

    static CliffordPolynomial constant(const Multivector<S>& c, Var var = Var::u) {
        CliffordPolynomial p(c.dim(), 0, var);
        p.add_term(Exponent{}, c);
        return p;
    }
    static CliffordPolynomial monomial(int n, const Exponent& alpha, const Multivector<S>& c,
                                       Var var = Var::u) {
        CliffordPolynomial p(n, alpha.degree(), var);
        p.add_term(alpha, c);
        return p;
    }
    // w_i (1-based), real coefficient 1.
    static CliffordPolynomial coordinate(int n, int i, Var var = Var::u) {
        return monomial(n, Exponent::unit(i - 1), Multivector<S>(n, S(1)), var);
    }
    // The vector variable w = sum_i w_i e_i.
    static CliffordPolynomial variable(int n, Var var = Var::u) {
        CliffordPolynomial p(n, 1, var);
        for (int i = 1; i <= n; ++i) p.add_term(Exponent::unit(i - 1), Multivector<S>::e(n, i));
        return p;
    }

    int dim() const { return n_; }
    int degree() const { return degree_; }
    Var var() const { return var_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Multivector<S> coefficient(const Exponent& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Multivector<S>(n_) : it->second;
    }

    void add_term(const Exponent& alpha, const Multivector<S>& c) {
        if (c.dim() != n_) throw UsageError("coefficient dimension differs from polynomial dimension");
        if (alpha.degree() != degree_)
            throw UsageError("monomial " + alpha.to_string(n_) + " has degree " +
                             std::to_string(alpha.degree()) + ", polynomial is homogeneous of degree " +
                             std::to_string(degree_));
        for (int i = n_; i < kMaxDim; ++i)
            if (alpha[static_cast<std::size_t>(i)] != 0) throw UsageError("multi-index exceeds dimension");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CliffordPolynomial& operator+=(const CliffordPolynomial& o) {
        require_compatible(o);
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    CliffordPolynomial& operator-=(const CliffordPolynomial& o) {
        require_compatible(o);
        for (const auto& [a, c] : o.terms_) add_term(a, -c);
        return *this;
    }
    CliffordPolynomial& operator*=(const S& s) {
        if (ScalarTraits<S>::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [a, c] : terms_) c *= s;
        return *this;
    }
    CliffordPolynomial& operator/=(const S& s) {
        for (auto& [a, c] : terms_) c /= s;
        return *this;
    }
    friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) { return a += b; }
    friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) { return a -= b; }
    friend CliffordPolynomial operator-(CliffordPolynomial a) { return a *= S(-1); }
    friend CliffordPolynomial operator*(CliffordPolynomial a, const S& s) { return a *= s; }
    friend CliffordPolynomial operator*(const S& s, CliffordPolynomial a) { return a *= s; }
    friend CliffordPolynomial operator/(CliffordPolynomial a, const S& s) { return a /= s; }

    // c * P
    friend CliffordPolynomial operator*(const Multivector<S>& c, const CliffordPolynomial& p) {
        CliffordPolynomial out(p.n_, p.degree_, p.var_);
        for (const auto& [a, m] : p.terms_) out.add_term(a, geometric_product(c, m));
        return out;
    }
    // P * c
    friend CliffordPolynomial operator*(const CliffordPolynomial& p, const Multivector<S>& c) {
        CliffordPolynomial out(p.n_, p.degree_, p.var_);
        for (const auto& [a, m] : p.terms_) out.add_term(a, geometric_product(m, c));
        return out;
    }
    // Clifford product of polynomials in the same variable; degrees add.
    friend CliffordPolynomial operator*(const CliffordPolynomial& p, const CliffordPolynomial& q) {
        p.require_same_space(q);
        if (p.degree_ < 0 || q.degree_ < 0) return CliffordPolynomial(p.n_, -1, p.var_);
        CliffordPolynomial out(p.n_, p.degree_ + q.degree_, p.var_);
        for (const auto& [a, ca] : p.terms_)
            for (const auto& [b, cb] : q.terms_) out.add_term(a + b, geometric_product(ca, cb));
        return out;
    }

    friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
        return a.n_ == b.n_ && a.var_ == b.var_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    // d/dw_j, 1-based j.
    CliffordPolynomial derivative(int j) const {
        if (degree_ <= 0) return CliffordPolynomial(n_, -1, var_);
        CliffordPolynomial out(n_, degree_ - 1, var_);
        const auto idx = static_cast<std::size_t>(j - 1);
        for (const auto& [a, c] : terms_) {
            if (a[idx] == 0) continue;
            Exponent b = a;
            b[idx] = static_cast<std::uint8_t>(b[idx] - 1);
            out.add_term(b, c * S(static_cast<long>(a[idx])));
        }
        return out;
    }

    // Evaluate at a point (same scalar type).
    Multivector<S> evaluate(std::span<const S> w) const {
        if (static_cast<int>(w.size()) != n_) throw UsageError("evaluation point dimension mismatch");
        Multivector<S> out(n_);
        for (const auto& [a, c] : terms_) {
            S m(1);
            for (int i = 0; i < n_; ++i)
                for (int p = 0; p < a[static_cast<std::size_t>(i)]; ++p) m *= w[static_cast<std::size_t>(i)];
            out += c * m;
        }
        return out;
    }

    CliffordPolynomial with_var(Var v) const {
        CliffordPolynomial out = *this;
        out.var_ = v;
        return out;
    }

    void require_same_space(const CliffordPolynomial& o) const {
        if (n_ != o.n_)
            throw UsageError("polynomial dimension mismatch: " + std::to_string(n_) + " vs " +
                             std::to_string(o.n_));
        if (var_ != o.var_)
            throw UsageError(std::string("mixed polynomial variables: ") + var_name(var_) + " vs " +
                             var_name(o.var_));
    }
    void require_compatible(const CliffordPolynomial& o) const {
        require_same_space(o);
        if (degree_ != o.degree_)
            throw UsageError("degree mismatch: " + std::to_string(degree_) + " vs " +
                             std::to_string(o.degree_));
    }

private:
    int n_ = 0;
    int degree_ = 0;
    Var var_ = Var::u;
    Terms terms_;
};

using ExactPoly = CliffordPolynomial<Rational>;
using FloatPoly = CliffordPolynomial<double>;

template <CliffordScalar S>
CliffordPolynomial<S> conjugate(const CliffordPolynomial<S>& p) {
    CliffordPolynomial<S> out(p.dim(), p.degree(), p.var());
    for (const auto& [a, c] : p.terms()) out.add_term(a, conjugate(c));
    return out;
}

inline FloatPoly to_double(const ExactPoly& p) {
    FloatPoly out(p.dim(), p.degree(), p.var());
    for (const auto& [a, c] : p.terms()) out.add_term(a, to_double(c));
    return out;
}

template <CliffordScalar S>
std::string to_string(const CliffordPolynomial<S>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [a, c] : p.terms()) {
        if (!first) s += " + ";
        first = false;
        s += "[" + to_string(c) + "]";
        for (int i = 0; i < p.dim(); ++i) {
            const int e = a[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            s += std::string("*") + var_name(p.var()) + std::to_string(i + 1);
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

// Largest coefficient magnitude (float polynomials).
inline double max_abs_coefficient(const FloatPoly& p) {
    double m = 0.0;
    for (const auto& [a, c] : p.terms())
        for (double x : c.coeffs()) m = std::max(m, std::abs(x));
    return m;
}

} // namespace rscyl
