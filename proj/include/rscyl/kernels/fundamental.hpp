#pragma once

#include "rscyl/kernels/constants.hpp"
#include "rscyl/kernels/kernel_poly.hpp"
#include "rscyl/poly/zonal.hpp"
#include "rscyl/util/compensated.hpp"

namespace rscyl {

enum class Family { R, Q };

inline const char* family_name(Family f) { return f == Family::R ? "R" : "Q"; }

// Binary64 copy of Z_k with omega_n applied: zc[(ia * nv + ib) * 2^n + blade].
struct ZonalTable {
    int n = 0;
    int k = 0;
    int count = 0;
    std::vector<double> coeffs;

    static const ZonalTable& get(int n, int k);
};

// Accumulates sum_m s_m * K(x_m, u, v) for the base kernel K = E_k (family R)
// or H_k (family Q). Only the real tensor sum_m s_m G(x_m) (x) T_{x_m}-expansion
// is accumulated per point; Clifford products happen once in finish().
class KernelAccumulator {
public:
    KernelAccumulator(Family family, int n, int k);

    Family family() const { return family_; }
    int dim() const { return n_; }
    int weight() const { return k_; }

    // Adds sign * K(x); throws SingularityError for x = 0.
    void add(std::span<const double> x, double sign = 1.0);
    void reset() { acc_.reset(); }
    KernelPoly finish() const;

    // Zonal degree used by the base kernel (k for R, k-1 for Q).
    int zonal_degree() const { return zdeg_; }

private:
    Family family_;
    int n_;
    int k_;
    int zdeg_;
    int count_;  // monomials of degree zdeg_
    double scale_;
    const ZonalTable* zonal_;
    std::vector<std::vector<int>> raise_;  // raise_[d][i * n + j]: index of alpha_i + e_j
    std::vector<double> expand_;           // scratch: [ia][ig]
    std::vector<double> work_;
    CompensatedArray acc_;                 // [i][ia][ig]
};

// E_k(x, u, v) = (1/(omega c_k)) G(x) Z_k(x u x / |x|^2, v).
KernelPoly ek_upoly(const VectorN<double>& x, const ZonalKernel& z);
// H_k(x, u, v) = -(1/(omega c_k)) u G(x) Z_{k-1}(x u x / |x|^2, v) v.
KernelPoly hk_upoly(const VectorN<double>& x, int k, const ZonalKernel& z);

} // namespace rscyl
