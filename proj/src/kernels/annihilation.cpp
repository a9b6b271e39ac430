#include "rscyl/kernels/annihilation.hpp"

#include "rscyl/clifford/dense_ops.hpp"
#include "rscyl/poly/monogenic.hpp"

namespace rscyl {

namespace {

KernelPoly base_kernel(Family family, int n, int k, const VectorN<double>& x) {
    KernelAccumulator acc(family, n, k);
    acc.add(x.components());
    return acc.finish();
}

double projected_max(const KernelPoly& d, bool keep_monogenic) {
    double m = 0.0;
    for (int iv = 0; iv < d.v_count(); ++iv) {
        const FloatPoly slice = d.u_slice(iv);
        const FloatPoly proj = keep_monogenic ? project_Pk(slice) : project_I_minus_Pk(slice);
        m = std::max(m, max_abs_coefficient(proj));
    }
    return m;
}

} // namespace

KernelPoly kernel_dirac_fd(Family family, int n, int k, const VectorN<double>& x, double h) {
    KernelPoly out;
    bool first = true;
    for (int j = 0; j < n; ++j) {
        VectorN<double> xp = x, xm = x;
        xp[static_cast<std::size_t>(j)] += h;
        xm[static_cast<std::size_t>(j)] -= h;
        KernelPoly diff = base_kernel(family, n, k, xp) - base_kernel(family, n, k, xm);
        diff *= 1.0 / (2.0 * h);
        if (first) {
            out = KernelPoly(n, diff.u_degree(), diff.v_degree());
            first = false;
        }
        for (int iu = 0; iu < diff.u_count(); ++iu)
            for (int iv = 0; iv < diff.v_count(); ++iv) vec_left_mul_add(out.coeff(iu, iv), j, diff.coeff(iu, iv), n);
    }
    return out;
}

double annihilation_residual(Family family, int n, int k, const VectorN<double>& x, double h) {
    return projected_max(kernel_dirac_fd(family, n, k, x, h), family == Family::R);
}

double complementary_residual(Family family, int n, int k, const VectorN<double>& x, double h) {
    return projected_max(kernel_dirac_fd(family, n, k, x, h), family != Family::R);
}

} // namespace rscyl
