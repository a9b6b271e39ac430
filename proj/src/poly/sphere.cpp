#include "rscyl/poly/sphere.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace rscyl {

double sphere_area(int n) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

Rational sphere_moment_ratio(int n, const Exponent& alpha) {
    for (int i = 0; i < kMaxDim; ++i)
        if (alpha[static_cast<std::size_t>(i)] % 2) return Rational(0);
    Rational num(1);
    for (int i = 0; i < n; ++i)
        for (int j = alpha[static_cast<std::size_t>(i)] - 1; j > 0; j -= 2) num *= j;
    Rational den(1);
    const int half = alpha.degree() / 2;
    for (int j = 0; j < half; ++j) den *= n + 2 * j;
    Rational r = num / den;
    r.canonicalize();
    return r;
}

double sphere_moment(int n, const Exponent& alpha) {
    static std::mutex mu;
    static std::map<std::pair<int, Exponent>, double> cache;
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.try_emplace({n, alpha}, 0.0);
    if (inserted) it->second = sphere_area(n) * sphere_moment_ratio(n, alpha).get_d();
    return it->second;
}

OmegaScaled<Multivector<Rational>> sphere_pair(const ExactPoly& p, const ExactPoly& q) {
    p.require_same_space(q);
    const int n = p.dim();
    Multivector<Rational> out(n);
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms()) {
            const Rational m = sphere_moment_ratio(n, a + b);
            if (sgn(m) == 0) continue;
            out += geometric_product(ca, cb) * m;
        }
    return {out, 1};
}

Multivector<double> sphere_pair(const FloatPoly& p, const FloatPoly& q) {
    p.require_same_space(q);
    const int n = p.dim();
    Multivector<double> out(n);
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms()) {
            const double m = sphere_moment(n, a + b);
            if (m == 0.0) continue;
            out += geometric_product(ca, cb) * m;
        }
    return out;
}

} // namespace rscyl
