#include "rscyl/kernels/constants.hpp"

#include "rscyl/errors.hpp"
#include "rscyl/poly/sphere.hpp"

namespace rscyl {

Rational ck_rarita_schwinger(int n, int k) {
    if (n < 3) throw UsageError("c_k needs n >= 3");
    if (k < 0) throw UsageError("c_k needs k >= 0");
    Rational c(n - 2, n + 2 * k - 2);
    c.canonicalize();
    return c;
}

Rational ck_remaining(int n, int k) {
    if (n < 3) throw UsageError("c_k needs n >= 3");
    if (k < 0) throw UsageError("c_k needs k >= 0");
    Rational c(n - 2, n - 2 + 2 * k);
    c.canonicalize();
    return c;
}

KernelConstants KernelConstants::make(int n, int k) {
    KernelConstants kc;
    kc.n = n;
    kc.k = k;
    kc.omega = sphere_area(n);
    kc.c_k = ck_rarita_schwinger(n, k);
    return kc;
}

} // namespace rscyl
