#pragma once

#include "rscyl/clifford/blade.hpp"

namespace rscyl {

// Raw-array Clifford kernels over binary64; arrays hold 2^n coefficients.

// out += s * a * b
inline void mv_mul_add(double* out, const double* a, const double* b, int n, double s = 1.0) {
    const auto& table = BladeTable::get(n);
    const Blade count = Blade{1} << n;
    for (Blade i = 0; i < count; ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        const double sa = s * ai;
        for (Blade j = 0; j < count; ++j) {
            const double bj = b[j];
            if (bj == 0.0) continue;
            out[i ^ j] += table.sign(i, j) * sa * bj;
        }
    }
}

// out += s * e_i * b, 0-based i.
inline void vec_left_mul_add(double* out, int i, const double* b, int n, double s = 1.0) {
    const auto& table = BladeTable::get(n);
    const Blade ei = Blade{1} << i;
    const Blade count = Blade{1} << n;
    for (Blade j = 0; j < count; ++j)
        if (b[j] != 0.0) out[ei ^ j] += table.sign(ei, j) * s * b[j];
}

// out += s * a * e_j, 0-based j.
inline void vec_right_mul_add(double* out, const double* a, int j, int n, double s = 1.0) {
    const auto& table = BladeTable::get(n);
    const Blade ej = Blade{1} << j;
    const Blade count = Blade{1} << n;
    for (Blade i = 0; i < count; ++i)
        if (a[i] != 0.0) out[i ^ ej] += table.sign(i, ej) * s * a[i];
}

} // namespace rscyl
