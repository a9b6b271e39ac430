#include "rscyl/util/gauss.hpp"

#include "rscyl/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace rscyl {

namespace {

// Monic recurrence for Gegenbauer lambda = a + 1/2:
// beta_k = k (k + 2 lambda - 1) / (4 (k + lambda)(k + lambda - 1)).
GaussRule build(int order, double a) {
    const double lambda = a + 0.5;
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        const double b = k * (k + 2 * lambda - 1) / (4 * (k + lambda) * (k + lambda - 1));
        jac(k, k - 1) = jac(k - 1, k) = std::sqrt(b);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jac);
    const double mu0 = std::sqrt(M_PI) * std::tgamma(a + 1) / std::tgamma(a + 1.5);
    GaussRule rule;
    for (int i = 0; i < order; ++i) {
        rule.nodes.push_back(solver.eigenvalues()(i));
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights.push_back(mu0 * v0 * v0);
    }
    // enforce exact symmetry
    for (int i = 0; i < order / 2; ++i) {
        const int j = order - 1 - i;
        const double x = 0.5 * (rule.nodes[static_cast<std::size_t>(j)] - rule.nodes[static_cast<std::size_t>(i)]);
        const double w = 0.5 * (rule.weights[static_cast<std::size_t>(i)] + rule.weights[static_cast<std::size_t>(j)]);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(j)] = x;
        rule.weights[static_cast<std::size_t>(i)] = rule.weights[static_cast<std::size_t>(j)] = w;
    }
    if (order % 2) rule.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
    return rule;
}

} // namespace

const GaussRule& gauss_symmetric_jacobi(int order, double a) {
    if (order < 1 || order > 512) throw UsageError("Gauss rule order must be in [1, 512]");
    if (!(a > -1.0)) throw UsageError("Gauss-Jacobi exponent must exceed -1");
    static std::mutex mu;
    static std::map<std::pair<int, double>, std::unique_ptr<GaussRule>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{order, a}];
    if (!slot) slot = std::make_unique<GaussRule>(build(order, a));
    return *slot;
}

GaussRule gauss_legendre(int order, double lo, double hi) {
    const auto& base = gauss_legendre(order);
    GaussRule out;
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
        out.nodes.push_back(mid + half * base.nodes[i]);
        out.weights.push_back(half * base.weights[i]);
    }
    return out;
}

} // namespace rscyl
