#pragma once

#include "rscyl/clifford/vector.hpp"
#include "rscyl/poly/exponent.hpp"

namespace rscyl {

// G(x) = x / |x|^n.
VectorN<double> cauchy_kernel_G(const VectorN<double>& x);

// d^beta G / dx^beta as a vector-valued multivector, from exact symbolic
// differentiation of x_i |x|^{-n}.
Multivector<double> g_derivative(const Exponent& beta, const VectorN<double>& x);

// prod_{j=1}^{|beta|} (n-2+j) / |x|^{n-1+|beta|}, bound on |d^beta q_0(x)|, q_0 = -G.
double q0_derivative_bound(int n, int order, double radius);

} // namespace rscyl
