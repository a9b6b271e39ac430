#include "rscyl/kernels/fundamental.hpp"

#include "rscyl/clifford/dense_ops.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace rscyl {

namespace {

ZonalTable make_table(const ZonalKernel& z) {
    ZonalTable t;
    t.n = z.n;
    t.k = z.k;
    const auto& mono = MonomialBasis::get(z.n, z.k);
    t.count = mono.size();
    const int nb = 1 << z.n;
    t.coeffs.assign(static_cast<std::size_t>(t.count * t.count * nb), 0.0);
    const double w = std::pow(sphere_area(z.n), z.omega_power);
    for (const auto& [key, c] : z.terms) {
        const int ia = mono.index_of(key.first);
        const int ib = mono.index_of(key.second);
        for (int b = 0; b < nb; ++b)
            t.coeffs[static_cast<std::size_t>((ia * t.count + ib) * nb + b)] = c[static_cast<Blade>(b)].get_d() * w;
    }
    return t;
}

} // namespace

const ZonalTable& ZonalTable::get(int n, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<ZonalTable>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({n, k}); it != cache.end()) return *it->second;
    }
    auto table = std::make_unique<ZonalTable>(make_table(zonal_kernel(n, k)));
    std::lock_guard lock(mu);
    auto& slot = cache[{n, k}];
    if (!slot) slot = std::move(table);
    return *slot;
}

KernelAccumulator::KernelAccumulator(Family family, int n, int k) : family_(family), n_(n), k_(k) {
    if (n < 3 || n > kMaxDim) throw UsageError("kernels need 3 <= n <= 8");
    if (k < 0) throw UsageError("kernel weight k must be >= 0");
    if (family == Family::Q && k < 1) throw UsageError("Q-family kernels need k >= 1 (M_{-1} is empty)");
    zdeg_ = family == Family::R ? k : k - 1;
    zonal_ = &ZonalTable::get(n, zdeg_);
    count_ = zonal_->count;
    const Rational ck = family == Family::R ? ck_rarita_schwinger(n, k) : ck_remaining(n, k);
    scale_ = 1.0 / (sphere_area(n) * ck.get_d());
    for (int d = 0; d < zdeg_; ++d) {
        const auto& lo = MonomialBasis::get(n, d);
        const auto& hi = MonomialBasis::get(n, d + 1);
        std::vector<int> r(static_cast<std::size_t>(lo.size() * n));
        for (int i = 0; i < lo.size(); ++i)
            for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(i * n + j)] = hi.index_of(lo[i] + Exponent::unit(j));
        raise_.push_back(std::move(r));
    }
    expand_.assign(static_cast<std::size_t>(count_ * count_), 0.0);
    work_.assign(static_cast<std::size_t>(2 * count_), 0.0);
    acc_ = CompensatedArray(static_cast<std::size_t>(n * count_ * count_));
}

void KernelAccumulator::add(std::span<const double> x, double sign) {
    if (static_cast<int>(x.size()) != n_) throw UsageError("kernel base point dimension mismatch");
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    if (r2 == 0.0) throw SingularityError("fundamental solution evaluated at its singularity x = 0");
    const double inv_rn = 1.0 / std::pow(std::sqrt(r2), n_);

    // expand_[ia][ig]: coefficient of u^gamma in (T u)^alpha, T = I - 2 x x^T / |x|^2.
    const auto& mono = MonomialBasis::get(n_, zdeg_);
    double trow[kMaxDim];
    std::vector<double> cur, next;
    for (int ia = 0; ia < count_; ++ia) {
        cur.assign(1, 1.0);
        int d = 0;
        for (int i = 0; i < n_; ++i)
            for (int p = 0; p < mono[ia][static_cast<std::size_t>(i)]; ++p) {
                for (int j = 0; j < n_; ++j)
                    trow[j] = (i == j ? 1.0 : 0.0) - 2.0 * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)] / r2;
                next.assign(static_cast<std::size_t>(MonomialBasis::get(n_, d + 1).size()), 0.0);
                const auto& raise = raise_[static_cast<std::size_t>(d)];
                for (std::size_t g = 0; g < cur.size(); ++g) {
                    if (cur[g] == 0.0) continue;
                    for (int j = 0; j < n_; ++j)
                        next[static_cast<std::size_t>(raise[g * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)])] += cur[g] * trow[j];
                }
                cur.swap(next);
                ++d;
            }
        for (int ig = 0; ig < count_; ++ig) expand_[static_cast<std::size_t>(ia * count_ + ig)] = cur[static_cast<std::size_t>(ig)];
    }
    const std::size_t block = static_cast<std::size_t>(count_ * count_);
    for (int i = 0; i < n_; ++i) {
        const double gi = sign * x[static_cast<std::size_t>(i)] * inv_rn;
        if (gi == 0.0) continue;
        for (std::size_t q = 0; q < block; ++q) acc_.add(static_cast<std::size_t>(i) * block + q, gi * expand_[q]);
    }
}

KernelPoly KernelAccumulator::finish() const {
    const auto a = acc_.values();
    const int nb = 1 << n_;
    const std::size_t block = static_cast<std::size_t>(count_ * count_);
    KernelPoly inner(n_, zdeg_, zdeg_);
    std::vector<double> tmp(static_cast<std::size_t>(nb));
    for (int ig = 0; ig < count_; ++ig)
        for (int ib = 0; ib < count_; ++ib) {
            double* out = inner.coeff(ig, ib);
            for (int i = 0; i < n_; ++i) {
                std::fill(tmp.begin(), tmp.end(), 0.0);
                bool any = false;
                for (int ia = 0; ia < count_; ++ia) {
                    const double w = a[static_cast<std::size_t>(i) * block + static_cast<std::size_t>(ia * count_ + ig)];
                    if (w == 0.0) continue;
                    any = true;
                    const double* z = &zonal_->coeffs[static_cast<std::size_t>((ia * count_ + ib) * nb)];
                    for (int b = 0; b < nb; ++b) tmp[static_cast<std::size_t>(b)] += w * z[b];
                }
                if (any) vec_left_mul_add(out, i, tmp.data(), n_);
            }
        }
    if (family_ == Family::R) return inner *= scale_;

    // H: -scale * u * inner * v
    KernelPoly outer(n_, k_, k_);
    const auto& lo = MonomialBasis::get(n_, zdeg_);
    const auto& hi = MonomialBasis::get(n_, k_);
    std::vector<double> left(static_cast<std::size_t>(nb));
    for (int ia = 0; ia < count_; ++ia)
        for (int ib = 0; ib < count_; ++ib) {
            const double* c = inner.coeff(ia, ib);
            for (int i = 0; i < n_; ++i) {
                std::fill(left.begin(), left.end(), 0.0);
                vec_left_mul_add(left.data(), i, c, n_);
                const int iu = hi.index_of(lo[ia] + Exponent::unit(i));
                for (int j = 0; j < n_; ++j) {
                    const int iv = hi.index_of(lo[ib] + Exponent::unit(j));
                    vec_right_mul_add(outer.coeff(iu, iv), left.data(), j, n_, -scale_);
                }
            }
        }
    return outer;
}

KernelPoly ek_upoly(const VectorN<double>& x, const ZonalKernel& z) {
    KernelAccumulator acc(Family::R, z.n, z.k);
    acc.add(x.components());
    return acc.finish();
}

KernelPoly hk_upoly(const VectorN<double>& x, int k, const ZonalKernel& z) {
    if (k < 1) throw UsageError("H_k needs k >= 1 (Q_0 is undefined)");
    if (z.k != k - 1) throw UsageError("H_k needs the zonal kernel of degree k-1");
    KernelAccumulator acc(Family::Q, z.n, k);
    acc.add(x.components());
    return acc.finish();
}

} // namespace rscyl
