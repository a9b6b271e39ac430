#include "rscyl/poly/random.hpp"

namespace rscyl {

Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

Multivector<Rational> random_multivector(Rng& rng, int n) {
    Multivector<Rational> m(n);
    for (auto& c : m.coeffs()) c = random_rational(rng);
    return m;
}

VectorN<Rational> random_vector(Rng& rng, int n) {
    VectorN<Rational> v(n);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = random_rational(rng);
    return v;
}

ExactPoly random_polynomial(Rng& rng, int n, int degree, Var var) {
    ExactPoly p(n, degree, var);
    for (const auto& a : MonomialBasis::get(n, degree).list()) p.add_term(a, random_multivector(rng, n));
    return p;
}

ExactPoly random_harmonic(Rng& rng, int n, int degree, Var var) {
    return harmonic_projection(random_polynomial(rng, n, degree, var));
}

ExactPoly random_monogenic(Rng& rng, int n, int degree, Side side) {
    const auto basis = fueter_basis(n, degree, side);
    ExactPoly p(n, degree);
    for (const auto& b : basis.elements) {
        const auto c = random_multivector(rng, n);
        p += side == Side::left ? b * c : c * b;
    }
    return p;
}

} // namespace rscyl
