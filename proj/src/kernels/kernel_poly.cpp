#include "rscyl/kernels/kernel_poly.hpp"

#include "rscyl/clifford/dense_ops.hpp"
#include "rscyl/poly/sphere.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace rscyl {

KernelPoly::KernelPoly(int n, int du, int dv) : n_(n), du_(du), dv_(dv) {
    check_dimension(n);
    if (du < 0 || dv < 0) throw UsageError("kernel polynomial degrees must be >= 0");
    nu_ = MonomialBasis::get(n, du).size();
    nv_ = MonomialBasis::get(n, dv).size();
    nb_ = 1 << n;
    data_.assign(static_cast<std::size_t>(nu_) * static_cast<std::size_t>(nv_) * static_cast<std::size_t>(nb_), 0.0);
}

Multivector<double> KernelPoly::coefficient(int iu, int iv) const {
    Multivector<double> m(n_);
    const double* c = coeff(iu, iv);
    for (int b = 0; b < nb_; ++b) m[static_cast<Blade>(b)] = c[b];
    return m;
}

void KernelPoly::set_coefficient(int iu, int iv, const Multivector<double>& c) {
    double* out = coeff(iu, iv);
    for (int b = 0; b < nb_; ++b) out[b] = c[static_cast<Blade>(b)];
}

void KernelPoly::require_same_shape(const KernelPoly& o) const {
    if (n_ != o.n_ || du_ != o.du_ || dv_ != o.dv_)
        throw UsageError("kernel polynomial shape mismatch");
}

KernelPoly& KernelPoly::operator+=(const KernelPoly& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

KernelPoly& KernelPoly::operator-=(const KernelPoly& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

KernelPoly& KernelPoly::operator*=(double s) {
    for (double& c : data_) c *= s;
    return *this;
}

namespace {

double monomial_value(const Exponent& a, std::span<const double> w, int n) {
    double m = 1.0;
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < a[static_cast<std::size_t>(i)]; ++p) m *= w[static_cast<std::size_t>(i)];
    return m;
}

} // namespace

Multivector<double> KernelPoly::evaluate(std::span<const double> u, std::span<const double> v) const {
    if (static_cast<int>(u.size()) != n_ || static_cast<int>(v.size()) != n_)
        throw UsageError("kernel evaluation point dimension mismatch");
    const auto& mu = MonomialBasis::get(n_, du_);
    const auto& mv = MonomialBasis::get(n_, dv_);
    Multivector<double> out(n_);
    for (int iu = 0; iu < nu_; ++iu) {
        const double pu = monomial_value(mu[iu], u, n_);
        for (int iv = 0; iv < nv_; ++iv) {
            const double p = pu * monomial_value(mv[iv], v, n_);
            const double* c = coeff(iu, iv);
            for (int b = 0; b < nb_; ++b) out[static_cast<Blade>(b)] += p * c[b];
        }
    }
    return out;
}

FloatPoly KernelPoly::u_section(std::span<const double> v) const {
    const auto& mu = MonomialBasis::get(n_, du_);
    const auto& mv = MonomialBasis::get(n_, dv_);
    FloatPoly out(n_, du_, Var::u);
    for (int iu = 0; iu < nu_; ++iu) {
        Multivector<double> c(n_);
        for (int iv = 0; iv < nv_; ++iv) {
            const double p = monomial_value(mv[iv], v, n_);
            const double* k = coeff(iu, iv);
            for (int b = 0; b < nb_; ++b) c[static_cast<Blade>(b)] += p * k[b];
        }
        out.add_term(mu[iu], c);
    }
    return out;
}

FloatPoly KernelPoly::v_slice(int iu) const {
    const auto& mv = MonomialBasis::get(n_, dv_);
    FloatPoly out(n_, dv_, Var::v);
    for (int iv = 0; iv < nv_; ++iv) out.add_term(mv[iv], coefficient(iu, iv));
    return out;
}

FloatPoly KernelPoly::u_slice(int iv) const {
    const auto& mu = MonomialBasis::get(n_, du_);
    FloatPoly out(n_, du_, Var::u);
    for (int iu = 0; iu < nu_; ++iu) out.add_term(mu[iu], coefficient(iu, iv));
    return out;
}

KernelPoly KernelPoly::from_u_slices(const std::vector<FloatPoly>& slices, int dv) {
    if (slices.empty()) throw UsageError("from_u_slices: no slices");
    const int n = slices.front().dim();
    KernelPoly k(n, slices.front().degree(), dv);
    if (static_cast<int>(slices.size()) != k.v_count()) throw UsageError("from_u_slices: slice count mismatch");
    const auto& mu = MonomialBasis::get(n, k.u_degree());
    for (int iv = 0; iv < k.v_count(); ++iv)
        for (const auto& [a, c] : slices[static_cast<std::size_t>(iv)].terms()) k.set_coefficient(mu.index_of(a), iv, c);
    return k;
}

double KernelPoly::max_abs() const {
    double m = 0.0;
    for (double c : data_) m = std::max(m, std::abs(c));
    return m;
}

double KernelPoly::coefficient_norm_sum() const {
    double s = 0.0;
    for (int iu = 0; iu < nu_; ++iu)
        for (int iv = 0; iv < nv_; ++iv) {
            const double* c = coeff(iu, iv);
            double q = 0.0;
            for (int b = 0; b < nb_; ++b) q += c[b] * c[b];
            s += std::sqrt(q);
        }
    return s;
}

const std::vector<double>& moment_table(int n, int d1, int d2) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<std::vector<double>>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{n, d1, d2}];
    if (!slot) {
        const auto& m1 = MonomialBasis::get(n, d1);
        const auto& m2 = MonomialBasis::get(n, d2);
        slot = std::make_unique<std::vector<double>>(static_cast<std::size_t>(m1.size() * m2.size()));
        for (int i = 0; i < m1.size(); ++i)
            for (int j = 0; j < m2.size(); ++j)
                (*slot)[static_cast<std::size_t>(i * m2.size() + j)] =
                    sphere_area(n) * sphere_moment_ratio(n, m1[i] + m2[j]).get_d();
    }
    return *slot;
}

std::vector<double> dense_coefficients(const FloatPoly& b) {
    const int nb = 1 << b.dim();
    const auto& mb = MonomialBasis::get(b.dim(), std::max(b.degree(), 0));
    std::vector<double> out(static_cast<std::size_t>(mb.size() * nb), 0.0);
    for (const auto& [a, c] : b.terms()) {
        const int i = mb.index_of(a);
        for (int k = 0; k < nb; ++k) out[static_cast<std::size_t>(i * nb + k)] = c[static_cast<Blade>(k)];
    }
    return out;
}

FloatPoly from_dense(int n, int degree, Var var, std::span<const double> coeffs) {
    const int nb = 1 << n;
    const auto& mb = MonomialBasis::get(n, degree);
    if (coeffs.size() != static_cast<std::size_t>(mb.size() * nb))
        throw UsageError("dense coefficient block has the wrong length");
    FloatPoly out(n, degree, var);
    for (int i = 0; i < mb.size(); ++i) {
        Multivector<double> c(n);
        for (int q = 0; q < nb; ++q) c[static_cast<Blade>(q)] = coeffs[static_cast<std::size_t>(i * nb + q)];
        out.add_term(mb[i], c);
    }
    return out;
}

void pair_second_dense(const KernelPoly& k, std::span<const double> b, std::span<double> out, double scale,
                       bool kernel_left) {
    const int n = k.dim();
    const int nb = k.blade_count();
    const int nv = k.v_count();
    if (b.size() != static_cast<std::size_t>(nv * nb) || out.size() != static_cast<std::size_t>(k.u_count() * nb))
        throw UsageError("dense pairing block has the wrong length");
    const auto& mom = moment_table(n, k.v_degree(), k.v_degree());
    std::vector<double> folded(static_cast<std::size_t>(nv * nb), 0.0);
    for (int iv = 0; iv < nv; ++iv)
        for (int ig = 0; ig < nv; ++ig) {
            const double m = mom[static_cast<std::size_t>(iv * nv + ig)];
            if (m == 0.0) continue;
            for (int c = 0; c < nb; ++c)
                folded[static_cast<std::size_t>(iv * nb + c)] += m * b[static_cast<std::size_t>(ig * nb + c)];
        }
    for (int iu = 0; iu < k.u_count(); ++iu) {
        double* acc = out.data() + static_cast<std::size_t>(iu * nb);
        for (int iv = 0; iv < nv; ++iv) {
            const double* f = &folded[static_cast<std::size_t>(iv * nb)];
            if (kernel_left) mv_mul_add(acc, k.coeff(iu, iv), f, n, scale);
            else mv_mul_add(acc, f, k.coeff(iu, iv), n, scale);
        }
    }
}

FloatPoly pair_second(const KernelPoly& k, const FloatPoly& b, Var label) {
    if (b.dim() != k.dim()) throw UsageError("pairing dimension mismatch");
    if (b.degree() != k.v_degree())
        throw UsageError("pairing degree mismatch: kernel slot degree " + std::to_string(k.v_degree()) +
                         ", test polynomial degree " + std::to_string(b.degree()));
    std::vector<double> out(static_cast<std::size_t>(k.u_count() * k.blade_count()), 0.0);
    pair_second_dense(k, dense_coefficients(b), out);
    return from_dense(k.dim(), k.u_degree(), label, out);
}

FloatPoly pair_first(const KernelPoly& k, const FloatPoly& b) {
    if (b.dim() != k.dim()) throw UsageError("pairing dimension mismatch");
    if (b.degree() != k.u_degree())
        throw UsageError("pairing degree mismatch: kernel slot degree " + std::to_string(k.u_degree()) +
                         ", test polynomial degree " + std::to_string(b.degree()));
    const int n = k.dim();
    const int nb = k.blade_count();
    const int nu = k.u_count();
    const auto bd = dense_coefficients(b);
    const auto& mom = moment_table(n, k.u_degree(), b.degree());
    const auto& mv = MonomialBasis::get(n, k.v_degree());
    FloatPoly out(n, k.v_degree(), Var::v);
    std::vector<double> acc(static_cast<std::size_t>(nb));
    for (int iv = 0; iv < k.v_count(); ++iv) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (int iu = 0; iu < nu; ++iu)
            for (int ig = 0; ig < nu; ++ig) {
                const double m = mom[static_cast<std::size_t>(iu * nu + ig)];
                if (m == 0.0) continue;
                mv_mul_add(acc.data(), k.coeff(iu, iv), &bd[static_cast<std::size_t>(ig * nb)], n, m);
            }
        Multivector<double> c(n);
        for (int q = 0; q < nb; ++q) c[static_cast<Blade>(q)] = acc[static_cast<std::size_t>(q)];
        out.add_term(mv[iv], c);
    }
    return out;
}

} // namespace rscyl
