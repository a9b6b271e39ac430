#include "cli/commands.hpp"

#include "rscyl/poly/random.hpp"
#include "rscyl/poly/zonal.hpp"

#include <deque>

namespace rscyl::cli {

namespace {

using MV = Multivector<Rational>;

class Recorder {
public:
    SelftestCheck& check(const std::string& name, bool randomized) {
        for (auto& c : checks_)
            if (c.name == name) return c;
        checks_.push_back({name, 0, 0, randomized, ""});
        return checks_.back();
    }
    static void record(SelftestCheck& c, bool ok, const std::string& where) {
        ++c.trials;
        if (ok) return;
        if (c.failures++ == 0) c.first_failure = where;
    }
    std::vector<SelftestCheck> take() { return {checks_.begin(), checks_.end()}; }

private:
    std::deque<SelftestCheck> checks_;
};

// Exact unit vector by inverse stereographic projection of a rational point.
VectorN<Rational> rational_unit(Rng& rng, int n) {
    std::vector<Rational> t(static_cast<std::size_t>(n - 1));
    Rational s2(0);
    for (auto& c : t) {
        c = random_rational(rng);
        s2 += c * c;
    }
    VectorN<Rational> y(n);
    for (int i = 0; i < n - 1; ++i) y[static_cast<std::size_t>(i)] = Rational(2) * t[static_cast<std::size_t>(i)] / (s2 + 1);
    y[static_cast<std::size_t>(n - 1)] = (s2 - 1) / (s2 + 1);
    return y;
}

} // namespace

std::vector<SelftestCheck> run_selftest_checks(const std::vector<int>& dims, int trials, int poly_trials,
                                               std::uint64_t seed, const std::string& fault) {
    if (!fault.empty() && fault != "conjugate-sign") throw UsageError("unknown fault '" + fault + "'");
    const bool flip = fault == "conjugate-sign";
    const auto conj = [flip](const MV& a) {
        MV c = conjugate(a);
        if (flip) c = c - grade_project(c, 2) * Rational(2);
        return c;
    };
    Recorder rec;
    for (int n : dims) {
        check_dimension(n);
        Rng rng(seed * 7919u + static_cast<std::uint64_t>(n));
        const std::string at = "n=" + std::to_string(n);

        auto& gen = rec.check("generator relations e_i e_j + e_j e_i = -2 delta_ij", false);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const MV s = MV::e(n, i) * MV::e(n, j) + MV::e(n, j) * MV::e(n, i);
                Recorder::record(gen, s == MV(n, Rational(i == j ? -2 : 0)), at);
            }

        for (int t = 0; t < trials; ++t) {
            const std::string where = at + " trial " + std::to_string(t);
            const MV a = random_multivector(rng, n);
            const MV b = random_multivector(rng, n);
            const MV c = random_multivector(rng, n);
            Recorder::record(rec.check("geometric product associativity", true), (a * b) * c == a * (b * c), where);
            Recorder::record(rec.check("distributivity", true), a * (b + c) == a * b + a * c && (a + b) * c == a * c + b * c, where);
            Recorder::record(rec.check("conjugation anti-automorphism", true), conj(a * b) == conj(b) * conj(a), where);
            Recorder::record(rec.check("conjugation involution", true), conj(conj(a)) == a, where);
            Recorder::record(rec.check("reversion anti-automorphism", true), reverse(a * b) == reverse(b) * reverse(a), where);
            const VectorN<Rational> x = random_vector(rng, n);
            const VectorN<Rational> w = random_vector(rng, n);
            const MV xm = x.to_multivector();
            const MV wm = w.to_multivector();
            Recorder::record(rec.check("vector square equals minus squared norm", true), xm * xm == MV(n, -x.norm_squared()), where);
            Recorder::record(rec.check("conjugate of a vector is its negation", true), conj(xm) == -xm, where);
            Recorder::record(rec.check("vector norm multiplicativity", true),
                             coefficient_norm_squared(xm * wm) == x.norm_squared() * w.norm_squared(), where);
            const VectorN<Rational> y = rational_unit(rng, n);
            Recorder::record(rec.check("reflection formula x - 2<x,y>y", true),
                             reflect(y, x) == x - y * (Rational(2) * dot(x, y)), where);
        }

        if (poly_trials <= 0) continue;
        for (int t = 0; t < poly_trials; ++t) {
            const std::string where = at + " trial " + std::to_string(t);
            const int degree = 1 + t % 3;
            const ExactPoly f = random_polynomial(rng, n, degree);
            Recorder::record(rec.check("Dirac square equals minus Laplacian", true),
                             dirac_apply(dirac_apply(f)) == -laplacian(f), where);
            const ExactPoly h = random_harmonic(rng, n, degree);
            const auto split = almansi_fischer_split(h);
            const ExactPoly uvar = ExactPoly::variable(n);
            Recorder::record(rec.check("Almansi-Fischer decomposition", true),
                             is_monogenic(split.monogenic) && h == split.monogenic + uvar * split.remainder, where);
            const auto rsplit = almansi_fischer_split(h, Side::right);
            Recorder::record(rec.check("right Almansi-Fischer decomposition", true),
                             is_monogenic(rsplit.monogenic, Side::right) && h == rsplit.monogenic + rsplit.remainder * uvar, where);
        }

        for (int k = 0; k <= 2; ++k) {
            const std::string where = at + " k=" + std::to_string(k);
            const MonogenicBasis basis = fueter_basis(n, k);
            bool ok = static_cast<long>(basis.size()) == binomial(n + k - 2, n - 2);
            std::vector<ExactPoly> spanning;
            for (const auto& p : basis.elements) {
                ok = ok && is_monogenic(p);
                for (Blade a = 0; a < (Blade{1} << n); ++a) spanning.push_back(p * MV::basis(n, a));
            }
            ok = ok && real_rank(spanning) == static_cast<int>(spanning.size());
            Recorder::record(rec.check("Fueter basis is monogenic with full rank", false), ok, where);
        }

        if (n <= 4)
            for (int k = 0; k <= 2; ++k) {
                const std::string where = at + " k=" + std::to_string(k);
                const ZonalKernel& z = zonal_kernel(n, k);
                auto& zc = rec.check("zonal reproducing property", false);
                for (const auto& p : fueter_basis(n, k).elements)
                    for (Blade bl = 0; bl < (Blade{1} << n); ++bl) {
                        const ExactPoly q = p * MV::basis(n, bl);
                        Recorder::record(zc, reproduce(z, q) == q, where);
                    }
            }
    }
    return rec.take();
}

} // namespace rscyl::cli
