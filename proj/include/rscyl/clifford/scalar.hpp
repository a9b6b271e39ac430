#pragma once

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <string>

namespace rscyl {

using Rational = mpq_class;

enum class ScalarField { exact_rational, binary64 };

template <class S> struct ScalarTraits;

template <> struct ScalarTraits<double> {
    static constexpr ScalarField field = ScalarField::binary64;
    static bool is_zero(double s) { return s == 0.0; }
    static double to_double(double s) { return s; }
};

template <> struct ScalarTraits<Rational> {
    static constexpr ScalarField field = ScalarField::exact_rational;
    static bool is_zero(const Rational& s) { return sgn(s) == 0; }
    static double to_double(const Rational& s) { return s.get_d(); }
};

template <class S>
concept CliffordScalar = requires { ScalarTraits<S>::field; };

inline const char* field_name(ScalarField f) {
    return f == ScalarField::exact_rational ? "exact-rational" : "binary64";
}

// Rational with canonicalized representation.
inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace rscyl
