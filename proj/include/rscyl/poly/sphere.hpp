#pragma once

#include "rscyl/poly/polynomial.hpp"

namespace rscyl {

// Surface area of S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

// M(alpha) with int_{S^{n-1}} u^alpha dS = omega_n * M(alpha); zero unless all
// entries are even.
Rational sphere_moment_ratio(int n, const Exponent& alpha);

// Cached binary64 moment omega_n * M(alpha).
double sphere_moment(int n, const Exponent& alpha);

// value * omega_n^omega_power, with omega_n kept symbolic.
template <class T>
struct OmegaScaled {
    T value;
    int omega_power = 0;
};

// (P, Q)_u = int_{S^{n-1}} P(u) Q(u) dS(u), Clifford order preserved, no
// conjugation. Exact result carries omega_n^1 symbolically.
OmegaScaled<Multivector<Rational>> sphere_pair(const ExactPoly& p, const ExactPoly& q);
Multivector<double> sphere_pair(const FloatPoly& p, const FloatPoly& q);

inline Multivector<double> to_double(const OmegaScaled<Multivector<Rational>>& s, int n) {
    return to_double(s.value) * std::pow(sphere_area(n), s.omega_power);
}

} // namespace rscyl
