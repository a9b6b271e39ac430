#include "rscyl/kernels/cauchy.hpp"

#include <cmath>
#include <map>
#include <tuple>

namespace rscyl {

VectorN<double> cauchy_kernel_G(const VectorN<double>& x) {
    const double r2 = x.norm_squared();
    if (r2 == 0.0) throw SingularityError("Cauchy kernel evaluated at x = 0");
    const double r = std::sqrt(r2);
    return x * (1.0 / std::pow(r, x.dim()));
}

namespace {

// coefficient * x^gamma * |x|^{-power} * e_component
using TermKey = std::tuple<int, Exponent, int>;
using Terms = std::map<TermKey, Rational>;

Terms differentiate(const Terms& terms, int j) {
    Terms out;
    const auto jj = static_cast<std::size_t>(j);
    for (const auto& [key, c] : terms) {
        const auto& [comp, gamma, power] = key;
        if (gamma[jj] > 0) {
            Exponent g = gamma;
            g[jj] = static_cast<std::uint8_t>(g[jj] - 1);
            out[{comp, g, power}] += c * static_cast<long>(gamma[jj]);
        }
        Exponent g = gamma;
        g[jj] = static_cast<std::uint8_t>(g[jj] + 1);
        out[{comp, g, power + 2}] -= c * static_cast<long>(power);
    }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

} // namespace

Multivector<double> g_derivative(const Exponent& beta, const VectorN<double>& x) {
    const int n = x.dim();
    const double r2 = x.norm_squared();
    if (r2 == 0.0) throw SingularityError("Cauchy kernel derivative evaluated at x = 0");
    Terms terms;
    for (int i = 0; i < n; ++i) terms[{i, Exponent::unit(i), n}] = 1;
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < beta[static_cast<std::size_t>(j)]; ++r) terms = differentiate(terms, j);
    const double r = std::sqrt(r2);
    Multivector<double> out(n);
    for (const auto& [key, c] : terms) {
        const auto& [comp, gamma, power] = key;
        double m = c.get_d() * std::pow(r, -power);
        for (int i = 0; i < n; ++i) m *= std::pow(x[static_cast<std::size_t>(i)], gamma[static_cast<std::size_t>(i)]);
        out[basis_vector_blade(comp + 1)] += m;
    }
    return out;
}

double q0_derivative_bound(int n, int order, double radius) {
    double num = 1.0;
    for (int j = 1; j <= order; ++j) num *= n - 2 + j;
    return num / std::pow(radius, n - 1 + order);
}

} // namespace rscyl
