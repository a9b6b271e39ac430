#pragma once

#include "rscyl/clifford/scalar.hpp"

namespace rscyl {

// c_k = (n-2)/(n+2k-2), the E_k normalization.
Rational ck_rarita_schwinger(int n, int k);
// c_k = (n-2)/(n-2+2k), the H_k normalization (same value).
Rational ck_remaining(int n, int k);

struct KernelConstants {
    int n = 0;
    int k = 0;
    double omega = 0.0;
    Rational c_k;

    static KernelConstants make(int n, int k);
    // 1 / (omega_n c_k)
    double scale() const { return 1.0 / (omega * c_k.get_d()); }
};

} // namespace rscyl
