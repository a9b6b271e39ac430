#include "rscyl/integrate/fields.hpp"

#include "rscyl/kernels/kernel_poly.hpp"

#include <cmath>
#include <numeric>

namespace rscyl {

Envelope Envelope::constant(double c) {
    Envelope e;
    e.offset = c;
    return e;
}

Envelope Envelope::affine(double offset, std::vector<double> slope) {
    Envelope e;
    e.kind = Kind::affine;
    e.offset = offset;
    e.slope = std::move(slope);
    return e;
}

Envelope Envelope::coordinate(int n, int i) {
    if (i < 1 || i > n) throw UsageError("coordinate index out of range");
    std::vector<double> s(static_cast<std::size_t>(n), 0.0);
    s[static_cast<std::size_t>(i - 1)] = 1.0;
    return affine(0.0, std::move(s));
}

Envelope Envelope::bump(std::vector<double> center, double radius, int power) {
    if (!(radius > 0.0) || power < 1) throw UsageError("bump needs positive radius and power >= 1");
    Envelope e;
    e.kind = Kind::bump;
    e.center = std::move(center);
    e.radius = radius;
    e.power = power;
    return e;
}

Envelope Envelope::exponential(std::vector<double> rate) {
    Envelope e;
    e.kind = Kind::exponential;
    e.slope = std::move(rate);
    return e;
}

double Envelope::value(std::span<const double> x) const {
    switch (kind) {
    case Kind::constant:
        return offset;
    case Kind::affine:
        return offset + std::inner_product(slope.begin(), slope.end(), x.begin(), 0.0);
    case Kind::exponential:
        return std::exp(std::inner_product(slope.begin(), slope.end(), x.begin(), 0.0));
    case Kind::bump: {
        double r2 = 0.0;
        for (std::size_t j = 0; j < center.size(); ++j) r2 += (x[j] - center[j]) * (x[j] - center[j]);
        const double t = 1.0 - r2 / (radius * radius);
        return t > 0.0 ? std::pow(t, power) : 0.0;
    }
    }
    return 0.0;
}

void Envelope::gradient(std::span<const double> x, std::span<double> out) const {
    std::fill(out.begin(), out.end(), 0.0);
    switch (kind) {
    case Kind::constant:
        return;
    case Kind::affine:
        std::copy(slope.begin(), slope.end(), out.begin());
        return;
    case Kind::exponential: {
        const double v = value(x);
        for (std::size_t j = 0; j < slope.size(); ++j) out[j] = slope[j] * v;
        return;
    }
    case Kind::bump: {
        double r2 = 0.0;
        for (std::size_t j = 0; j < center.size(); ++j) r2 += (x[j] - center[j]) * (x[j] - center[j]);
        const double t = 1.0 - r2 / (radius * radius);
        if (t <= 0.0) return;
        const double f = -2.0 * power * std::pow(t, power - 1) / (radius * radius);
        for (std::size_t j = 0; j < center.size(); ++j) out[j] = f * (x[j] - center[j]);
        return;
    }
    }
}

std::string Envelope::tag() const {
    switch (kind) {
    case Kind::constant: return "constant";
    case Kind::affine: return "linear";
    case Kind::bump: return "bump";
    case Kind::exponential: return "exponential";
    }
    return "?";
}

namespace {

ExactPoly field_polynomial(Family family, Side side, const ExactPoly& p) {
    if (family == Family::R) return p.with_var(Var::u);
    const auto u = ExactPoly::variable(p.dim(), Var::u);
    const auto g = p.with_var(Var::u);
    return side == Side::left ? u * g : g * u;
}

ExactPoly project(Family family, Side side, const ExactPoly& h) {
    return family == Family::R ? project_Pk(h, side) : project_I_minus_Pk(h, side);
}

Family other(Family f) { return f == Family::R ? Family::Q : Family::R; }

} // namespace

TestField::TestField(Family family, int n, int k, std::vector<FieldTerm> terms, Side side)
    : family_(family), side_(side), n_(n), k_(k), terms_(std::move(terms)) {
    check_dimension(n);
    if (family == Family::Q && k < 1) throw UsageError("Q-side test fields need k >= 1");
    if (k < 0) throw UsageError("test field weight must be >= 0");
    if (terms_.empty()) throw UsageError("test field needs at least one term");
    block_ = MonomialBasis::get(n, k).size() * (std::size_t{1} << n);
    const int pdeg = family == Family::R ? k : k - 1;
    for (const auto& t : terms_) {
        if (t.poly.dim() != n || t.poly.degree() != pdeg)
            throw UsageError("test field polynomial must have dimension " + std::to_string(n) + " and degree " +
                             std::to_string(pdeg));
        if (!is_monogenic(t.poly, side))
            throw DomainError("test field polynomial is not monogenic on the declared side");
        const auto check_len = [&](const std::vector<double>& v, const char* what) {
            if (!v.empty() && static_cast<int>(v.size()) != n)
                throw UsageError(std::string("envelope ") + what + " has the wrong dimension");
        };
        check_len(t.envelope.slope, "slope");
        check_len(t.envelope.center, "center");
        if (t.envelope.kind == Envelope::Kind::bump && t.envelope.center.empty())
            throw UsageError("bump envelope needs a center");
        if ((t.envelope.kind == Envelope::Kind::affine || t.envelope.kind == Envelope::Kind::exponential) &&
            t.envelope.slope.empty())
            throw UsageError("envelope needs a slope vector");

        const ExactPoly f = field_polynomial(family, side, t.poly);
        values_.push_back(dense_coefficients(to_double(f)));
        std::vector<std::vector<double>> pj, aj;
        for (int j = 1; j <= n; ++j) {
            const auto ej = Multivector<Rational>::e(n, j);
            const ExactPoly h = side == Side::left ? ej * f : f * ej;
            pj.push_back(dense_coefficients(to_double(project(family, side, h))));
            aj.push_back(dense_coefficients(to_double(project(other(family), side, h))));
        }
        proj_.push_back(std::move(pj));
        alt_.push_back(std::move(aj));
    }
}

std::string TestField::tag() const {
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty()) s += "+";
        s += t.envelope.tag();
    }
    return s;
}

bool TestField::constant_in_x() const {
    for (const auto& t : terms_)
        if (t.envelope.kind != Envelope::Kind::constant) return false;
    return true;
}

void TestField::value(std::span<const double> x, std::span<double> out) const {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const double phi = terms_[i].envelope.value(x);
        if (phi == 0.0) continue;
        for (std::size_t c = 0; c < block_; ++c) out[c] += phi * values_[i][c];
    }
}

FloatPoly TestField::value(std::span<const double> x, Var var) const {
    std::vector<double> out(block_);
    value(x, out);
    return from_dense(n_, k_, var, out);
}

void TestField::add_boundary_data(std::span<const double> x, int axis, double sign, std::span<double> out,
                                  bool wrong) const {
    const auto& table = wrong ? alt_ : proj_;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const double phi = sign * terms_[i].envelope.value(x);
        if (phi == 0.0) continue;
        const auto& block = table[i][static_cast<std::size_t>(axis)];
        for (std::size_t c = 0; c < block_; ++c) out[c] += phi * block[c];
    }
}

void TestField::add_operator_data(std::span<const double> x, std::span<double> out, bool wrong) const {
    const auto& table = wrong ? alt_ : proj_;
    std::vector<double> grad(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        terms_[i].envelope.gradient(x, grad);
        for (int j = 0; j < n_; ++j) {
            const double g = grad[static_cast<std::size_t>(j)];
            if (g == 0.0) continue;
            const auto& block = table[i][static_cast<std::size_t>(j)];
            for (std::size_t c = 0; c < block_; ++c) out[c] += g * block[c];
        }
    }
}

} // namespace rscyl
