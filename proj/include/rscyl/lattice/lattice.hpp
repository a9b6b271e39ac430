#pragma once

#include <cstddef>
#include <vector>

namespace rscyl {

// m in Z^l, embedded in the first l coordinates of R^n.
using LatticeVector = std::vector<int>;

int sup_norm(const LatticeVector& m);

// All m with sup-norm exactly r, lexicographic order.
std::vector<LatticeVector> enumerate_shell(int l, int r);

// Number of points in shell r: (2r+1)^l - (2r-1)^l, 1 for r = 0.
long shell_count(int l, int r);

enum class HalfLattice { zero, positive, negative };

// positive iff the last nonzero coordinate is positive (m in Lambda_l).
HalfLattice half_lattice_classify(const LatticeVector& m);

// (-1)^{m_1 + ... + m_p}
int twist_sign(const LatticeVector& m, int p);

// Eisenstein convergence of sum_{m != 0} |m|^{-(p + alpha)} over Z^p.
bool eisenstein_converges(int p, double alpha);

// Partial sum over 0 < |m|_inf <= M, compensated, shell-major.
double eisenstein_partial_sum(int p, double alpha, int M);

} // namespace rscyl
