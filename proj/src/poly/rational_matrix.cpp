#include "rscyl/poly/rational_matrix.hpp"

#include "rscyl/errors.hpp"

#include <string>
#include <utility>

namespace rscyl {

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw UsageError("matrix product shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

namespace {

void swap_rows(RationalMatrix& m, int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

} // namespace

int rank(RationalMatrix a) {
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (sgn(a(i, c)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        swap_rows(a, r, piv);
        for (int i = r + 1; i < a.rows(); ++i) {
            if (sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c) / a(r, c);
            for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

RationalMatrix solve(RationalMatrix a, RationalMatrix b) {
    const int n = a.rows();
    if (a.cols() != n || b.rows() != n) throw UsageError("solve: shape mismatch");
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (sgn(a(i, c)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw InternalError("exact solve: matrix is singular at column " + std::to_string(c) +
                                " of " + std::to_string(n));
        swap_rows(a, c, piv);
        swap_rows(b, c, piv);
        const Rational inv = 1 / a(c, c);
        for (int j = c; j < n; ++j) a(c, j) *= inv;
        for (int j = 0; j < b.cols(); ++j) b(c, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c);
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            for (int j = 0; j < b.cols(); ++j) b(i, j) -= f * b(c, j);
        }
    }
    return b;
}

} // namespace rscyl
