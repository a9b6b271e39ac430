#pragma once

#include <vector>

namespace rscyl {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Jacobi rule on [-1, 1] for the weight (1 - t^2)^a, a > -1
// (a = 0: Gauss-Legendre). Golub-Welsch; cached.
const GaussRule& gauss_symmetric_jacobi(int order, double a);
inline const GaussRule& gauss_legendre(int order) { return gauss_symmetric_jacobi(order, 0.0); }

// Gauss-Legendre mapped to [lo, hi].
GaussRule gauss_legendre(int order, double lo, double hi);

} // namespace rscyl
