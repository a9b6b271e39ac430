#pragma once

#include "rscyl/clifford/scalar.hpp"

#include <vector>

namespace rscyl {

// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return a_[index(i, j)]; }
    const Rational& operator()(int i, int j) const { return a_[index(i, j)]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

int rank(RationalMatrix a);

// Solves A X = B for square nonsingular A; throws InternalError when singular.
RationalMatrix solve(RationalMatrix a, RationalMatrix b);

} // namespace rscyl
