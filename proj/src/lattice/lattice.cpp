#include "rscyl/lattice/lattice.hpp"

#include "rscyl/errors.hpp"
#include "rscyl/util/compensated.hpp"

#include <cmath>
#include <cstdlib>

namespace rscyl {

int sup_norm(const LatticeVector& m) {
    int r = 0;
    for (int c : m) r = std::max(r, std::abs(c));
    return r;
}

std::vector<LatticeVector> enumerate_shell(int l, int r) {
    if (l < 1) throw UsageError("lattice rank must be >= 1");
    if (r < 0) throw UsageError("shell radius must be >= 0");
    std::vector<LatticeVector> out;
    if (r == 0) {
        out.emplace_back(static_cast<std::size_t>(l), 0);
        return out;
    }
    LatticeVector m(static_cast<std::size_t>(l), -r);
    while (true) {
        if (sup_norm(m) == r) out.push_back(m);
        int i = l - 1;
        while (i >= 0 && m[static_cast<std::size_t>(i)] == r) {
            m[static_cast<std::size_t>(i)] = -r;
            --i;
        }
        if (i < 0) break;
        ++m[static_cast<std::size_t>(i)];
    }
    return out;
}

long shell_count(int l, int r) {
    if (r == 0) return 1;
    long a = 1, b = 1;
    for (int i = 0; i < l; ++i) {
        a *= 2L * r + 1;
        b *= 2L * r - 1;
    }
    return a - b;
}

HalfLattice half_lattice_classify(const LatticeVector& m) {
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (*it > 0) return HalfLattice::positive;
        if (*it < 0) return HalfLattice::negative;
    }
    return HalfLattice::zero;
}

int twist_sign(const LatticeVector& m, int p) {
    long s = 0;
    for (int i = 0; i < p && i < static_cast<int>(m.size()); ++i) s += m[static_cast<std::size_t>(i)];
    return (s % 2 == 0) ? 1 : -1;
}

bool eisenstein_converges(int p, double alpha) {
    if (p < 1) throw UsageError("Eisenstein predicate needs rank p >= 1");
    return alpha > 0.0;
}

double eisenstein_partial_sum(int p, double alpha, int M) {
    if (p < 1) throw UsageError("Eisenstein partial sum needs rank p >= 1");
    CompensatedSum sum;
    const double s = p + alpha;
    for (int r = 1; r <= M; ++r) {
        CompensatedSum shell;
        for (const auto& m : enumerate_shell(p, r)) {
            double q = 0.0;
            for (int c : m) q += static_cast<double>(c) * c;
            shell.add(std::pow(q, -0.5 * s));
        }
        sum.add(shell.value());
    }
    return sum.value();
}

} // namespace rscyl
