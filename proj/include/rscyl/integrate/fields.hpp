#pragma once

#include "rscyl/kernels/fundamental.hpp"
#include "rscyl/poly/monogenic.hpp"

#include <span>
#include <string>
#include <vector>

namespace rscyl {

// Scalar x-dependence phi(x) of a test field term.
struct Envelope {
    enum class Kind { constant, affine, bump, exponential };

    Kind kind = Kind::constant;
    double offset = 1.0;           // constant value, or affine offset
    std::vector<double> slope;     // affine gradient or exponential rate
    std::vector<double> center;    // bump center
    double radius = 1.0;           // bump support radius
    int power = 4;                 // bump (1 - |x-c|^2/r^2)^power

    static Envelope constant(double c = 1.0);
    static Envelope affine(double offset, std::vector<double> slope);
    static Envelope coordinate(int n, int i);  // x_i, 1-based
    static Envelope bump(std::vector<double> center, double radius, int power = 4);
    static Envelope exponential(std::vector<double> rate);

    double value(std::span<const double> x) const;
    void gradient(std::span<const double> x, std::span<double> out) const;
    std::string tag() const;
};

struct FieldTerm {
    Envelope envelope;
    ExactPoly poly;
};

// f(x, u) = sum_i phi_i(x) p_i(u) with p_i in M_k (family R) or
// f(x, u) = u * sum_i phi_i(x) g_i(u) with g_i in M_{k-1} (family Q).
// Right-sided fields use right-monogenic polynomials and g_i * u.
class TestField {
public:
    TestField(Family family, int n, int k, std::vector<FieldTerm> terms, Side side = Side::left);

    Family family() const { return family_; }
    Side side() const { return side_; }
    int dim() const { return n_; }
    int weight() const { return k_; }
    std::size_t block_size() const { return block_; }
    const std::vector<FieldTerm>& terms() const { return terms_; }
    std::string tag() const;
    bool constant_in_x() const;

    // Dense degree-k coefficients of f(x, .).
    void value(std::span<const double> x, std::span<double> out) const;
    FloatPoly value(std::span<const double> x, Var var = Var::v) const;

    // out += scale * projection of (normal f) for the normal sign * e_{axis+1};
    // the projection is P_k for family R and I - P_k for family Q (swapped
    // when `wrong` is set). Right-sided fields multiply the normal on the right.
    void add_boundary_data(std::span<const double> x, int axis, double sign, std::span<double> out,
                           bool wrong = false) const;
    // out += projection of D_x f: the Rarita-Schwinger (R) or remaining (Q) operator.
    void add_operator_data(std::span<const double> x, std::span<double> out, bool wrong = false) const;

private:
    Family family_;
    Side side_;
    int n_;
    int k_;
    std::size_t block_;
    std::vector<FieldTerm> terms_;
    std::vector<std::vector<double>> values_;            // [term]
    std::vector<std::vector<std::vector<double>>> proj_;  // [term][j]
    std::vector<std::vector<std::vector<double>>> alt_;   // [term][j] other projection
};

} // namespace rscyl
