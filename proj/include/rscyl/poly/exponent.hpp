#pragma once

#include "rscyl/clifford/blade.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rscyl {

// Multi-index alpha in N^n (n <= kMaxDim), unused slots zero.
struct Exponent {
    std::array<std::uint8_t, kMaxDim> e{};

    static Exponent unit(int i) {
        Exponent a;
        a.e[static_cast<std::size_t>(i)] = 1;
        return a;
    }

    int degree() const {
        int d = 0;
        for (auto v : e) d += v;
        return d;
    }
    std::uint8_t operator[](std::size_t i) const { return e[i]; }
    std::uint8_t& operator[](std::size_t i) { return e[i]; }

    friend Exponent operator+(Exponent a, const Exponent& b) {
        for (std::size_t i = 0; i < a.e.size(); ++i) a.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
        return a;
    }
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
    friend bool operator==(const Exponent&, const Exponent&) = default;

    std::vector<int> to_vector(int n) const {
        return std::vector<int>(e.begin(), e.begin() + n);
    }
    static Exponent from_vector(const std::vector<int>& v);
    std::string to_string(int n) const;
};

// All exponents of total degree d in n variables, lexicographically descending
// ((d,0,..) first). Cached and shared.
class MonomialBasis {
public:
    static const MonomialBasis& get(int n, int d);
    int dim() const { return n_; }
    int degree() const { return d_; }
    int size() const { return static_cast<int>(list_.size()); }
    const Exponent& operator[](int i) const { return list_[static_cast<std::size_t>(i)]; }
    const std::vector<Exponent>& list() const { return list_; }
    // Index of alpha in this basis, -1 if absent.
    int index_of(const Exponent& alpha) const;

private:
    MonomialBasis(int n, int d);
    int n_;
    int d_;
    std::vector<Exponent> list_;
};

long binomial(long n, long k);

} // namespace rscyl
