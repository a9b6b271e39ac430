#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace rscyl {

constexpr int kMaxDim = 8;

// Basis blade e_A encoded as a bitmask: bit i-1 set <=> e_i in A.
using Blade = std::uint32_t;

constexpr int grade(Blade a) { return std::popcount(a); }

constexpr Blade basis_vector_blade(int i) { return Blade{1} << (i - 1); }

// Sign of e_A e_B = sign * e_{A xor B} under e_i^2 = -1.
constexpr int blade_product_sign(Blade a, Blade b) {
    int swaps = 0;
    Blade shifted = a >> 1;
    while (shifted != 0) {
        swaps += std::popcount(shifted & b);
        shifted >>= 1;
    }
    swaps += std::popcount(a & b);
    return (swaps & 1) ? -1 : 1;
}

// Sign applied to e_A by conjugation: (-1)^{|A|(|A|+1)/2}.
constexpr int conjugation_sign(Blade a) {
    const int g = grade(a);
    return ((g * (g + 1) / 2) & 1) ? -1 : 1;
}

// Sign applied to e_A by reversion: (-1)^{|A|(|A|-1)/2}.
constexpr int reversion_sign(Blade a) {
    const int g = grade(a);
    return ((g * (g - 1) / 2) & 1) ? -1 : 1;
}

std::string blade_name(Blade a);

// Precomputed sign table for dimension n; sign(a, b) for all a, b < 2^n.
class BladeTable {
public:
    static const BladeTable& get(int n);
    int dim() const { return n_; }
    int size() const { return size_; }
    int sign(Blade a, Blade b) const { return signs_[(a << n_) | b]; }

private:
    explicit BladeTable(int n);
    int n_;
    int size_;
    std::vector<std::int8_t> signs_;
};

} // namespace rscyl
