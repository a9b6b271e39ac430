#pragma once

#include "rscyl/poly/monogenic.hpp"

#include <random>

namespace rscyl {

using Rng = std::mt19937_64;

// Rational p/q with |p| <= 9, 1 <= q <= 5; zero with probability ~ 1/19.
Rational random_rational(Rng& rng);
Multivector<Rational> random_multivector(Rng& rng, int n);
VectorN<Rational> random_vector(Rng& rng, int n);
ExactPoly random_polynomial(Rng& rng, int n, int degree, Var var = Var::u);
ExactPoly random_harmonic(Rng& rng, int n, int degree, Var var = Var::u);
// Random element of M_k (left) or of the right-monogenic span.
ExactPoly random_monogenic(Rng& rng, int n, int degree, Side side = Side::left);

} // namespace rscyl
