#pragma once

#include "rscyl/kernels/fundamental.hpp"

namespace rscyl {

// sum_j e_j dK/dx_j (left) by central differences of step h.
KernelPoly kernel_dirac_fd(Family family, int n, int k, const VectorN<double>& x, double h);

// max coefficient of P_k D_x E_k (family R) or (I - P_k) D_x H_k (family Q),
// projections applied to every u-slice.
double annihilation_residual(Family family, int n, int k, const VectorN<double>& x, double h);

// Companion with the complementary projection (must not vanish); used as a
// negative control.
double complementary_residual(Family family, int n, int k, const VectorN<double>& x, double h);

} // namespace rscyl
