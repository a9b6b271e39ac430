#pragma once

#include "rscyl/poly/monogenic.hpp"
#include "rscyl/poly/sphere.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>

namespace rscyl {

// Reproducing kernel Z_k(u, v) of M_k under the sphere pairing in v:
// sum over (alpha, beta) of u^alpha v^beta c_{alpha beta} * omega_n^{omega_power}.
struct ZonalKernel {
    using Key = std::pair<Exponent, Exponent>;  // (alpha_u, alpha_v)

    int n = 0;
    int k = 0;
    int omega_power = -1;
    std::map<Key, Multivector<Rational>> terms;

    friend bool operator==(const ZonalKernel&, const ZonalKernel&) = default;
};

// Built by the exact reproducing solve; cached per (n, k).
const ZonalKernel& zonal_kernel(int n, int k);

// (Z(u, .), p(.))_v as an exact polynomial in u (omega factors cancel).
ExactPoly reproduce(const ZonalKernel& z, const ExactPoly& p);

// u-section Z(., v) at a rational point v, as a polynomial in u whose
// coefficients still carry omega_n^{omega_power}.
ExactPoly u_section(const ZonalKernel& z, std::span<const Rational> v);

Multivector<double> evaluate(const ZonalKernel& z, std::span<const double> u, std::span<const double> v);

// {n, k, terms: [{alpha_u, alpha_v, blade, numerator, denominator, omega_exponent}]}
std::string zonal_to_json(const ZonalKernel& z);
ZonalKernel zonal_from_json(const std::string& text);

} // namespace rscyl
