// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include "cli/commands.hpp"
#include "rscyl/integrate/report.hpp"
#include "rscyl/kernels/annihilation.hpp"
#include "rscyl/poly/random.hpp"
#include "rscyl/poly/zonal.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace rscyl;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
    nlohmann::json report;  // deterministic payload (criteria 6-10)
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

nlohmann::json stripped(const Reconstruction& r) {
    auto j = reconstruction_report(r, nlohmann::json::object(), 0.0);
    j.erase("runtime_ms");
    return j;
}

IdentitySetup cube_setup(Family family, int k, int order, int M, int threads, std::vector<double> y) {
    IdentitySetup s;
    s.spec = {family, 3, k, 1, 0};
    s.box = BoxRegion::cube(3, 0.9);
    s.y = std::move(y);
    s.surface_order = order;
    s.volume_order = order;
    s.patch = SingularPatch{order, 16, 0.0};
    s.truncation = TruncationPolicy::with_radius(M);
    s.threads = threads;
    return s;
}

const std::vector<double> kOffCenter{0.1, -0.2, 0.15};

ExactPoly seeded_monogenic(std::uint64_t seed, int degree) {
    Rng rng(seed);
    ExactPoly p = random_monogenic(rng, 3, degree);
    while (p.is_zero()) p = random_monogenic(rng, 3, degree);
    return p;
}

// ---------------------------------------------------------------------------

Verdict criterion1() {
    const auto t0 = Clock::now();
    long trials = 0;
    long failures = 0;
    std::string failed;
    for (int n : {3, 4, 5}) {
        const auto checks = cli::run_selftest_checks({n}, 1000, 0, 101, "");
        for (const auto& c : checks) {
            if (c.randomized && c.trials < 1000) failures++;
            trials += c.trials;
            failures += c.failures;
            if (c.failures) failed += " " + c.name;
        }
    }
    const double t = seconds_since(t0);
    return {failures == 0 && t < 10.0,
            std::to_string(trials) + " exact checks over n = 3,4,5 (>= 1000 random trials per invariant), " +
                std::to_string(failures) + " failures" + failed + ", " + sci(t) + " s (limit 10 s)",
            {}};
}

Verdict criterion2() {
    const auto t0 = Clock::now();
    long count = 0, bad = 0;
    Rng rng(202);
    for (int n : {3, 4}) {
        const ExactPoly u = ExactPoly::variable(n);
        for (int k = 1; k <= 3; ++k)
            for (int t = 0; t < 50; ++t) {
                const ExactPoly h = random_harmonic(rng, n, k);
                const auto split = almansi_fischer_split(h, k);
                const bool ok = dirac_apply(split.monogenic).is_zero() && h == split.monogenic + u * split.remainder &&
                                split.remainder.degree() == k - 1;
                ++count;
                if (!ok) ++bad;
            }
    }
    const double t = seconds_since(t0);
    return {bad == 0 && t < 30.0,
            std::to_string(count) + " random harmonics, " + std::to_string(bad) + " failures, " + sci(t) +
                " s (limit 30 s)",
            {}};
}

Verdict criterion3() {
    long count = 0, bad = 0;
    for (int n : {3, 4})
        for (int k = 0; k <= 2; ++k) {
            const ZonalKernel& z = zonal_kernel(n, k);
            for (const auto& p : fueter_basis(n, k).elements)
                for (Blade a = 0; a < (Blade{1} << n); ++a) {
                    const ExactPoly q = p * Multivector<Rational>::basis(n, a);
                    ++count;
                    if (!(reproduce(z, q) == q)) ++bad;
                }
        }
    bool z0 = true;
    for (int n : {3, 4}) {
        const ZonalKernel& z = zonal_kernel(n, 0);
        z0 = z0 && z.omega_power == -1 && z.terms.size() == 1 &&
             z.terms.begin()->second == Multivector<Rational>(n, Rational(1));
    }
    return {bad == 0 && z0,
            std::to_string(count) + " real basis elements reproduced exactly (" + std::to_string(bad) +
                " failures); Z_0 = omega^-1 * 1 symbolically: " + (z0 ? "yes" : "no"),
            {}};
}

Verdict criterion4() {
    std::mt19937_64 rng(404);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> rad(0.5, 1.5);
    double worst = INFINITY;
    long count = 0;
    bool control = true;
    for (Family fam : {Family::R, Family::Q})
        for (int k : {1, 2})
            for (int t = 0; t < 20; ++t) {
                VectorN<double> x(3);
                for (int j = 0; j < 3; ++j) x[static_cast<std::size_t>(j)] = g(rng);
                x = x * (rad(rng) / norm(x));
                const double r1 = annihilation_residual(fam, 3, k, x, 1e-3);
                const double r2 = annihilation_residual(fam, 3, k, x, 5e-4);
                worst = std::min(worst, std::log2(r1 / r2));
                control = control && complementary_residual(fam, 3, k, x, 5e-4) > 1e3 * r2;
                ++count;
            }
    return {worst >= 1.8 && control,
            std::to_string(count) + " points (families R, Q; k = 1, 2; n = 3): minimum observed order " + sci(worst) +
                " (need >= 1.8); complementary projection nonzero: " + (control ? "yes" : "no"),
            {}};
}

Verdict criterion5() {
    const VectorN<double> x{0.06, -0.05, 0.06};
    const double rdom = norm(x);
    bool sound = true, monotone = true, slope_ok = true;
    std::ostringstream os;
    for (int k : {0, 1}) {
        const PeriodicKernelSpec spec{Family::R, 3, k, 1, 0};
        const PeriodicKernel far(spec, 20000);
        std::vector<double> ms, bs;
        double prev = INFINITY;
        for (int M : {5, 10, 20}) {
            const double measured = sampled_sup_norm(far.evaluate_shells(x.components(), M + 1, 20000), 16, 55);
            const double bound = PeriodicKernel(spec, M).report(rdom).bound;
            sound = sound && measured <= bound;
            monotone = monotone && bound < prev;
            prev = bound;
            ms.push_back(std::log(M));
            bs.push_back(std::log(bound));
            os << " k=" << k << ",M=" << M << ": tail " << sci(measured) << " <= " << sci(bound) << ";";
        }
        // least-squares slope of log bound against log M
        const double mx = (ms[0] + ms[1] + ms[2]) / 3, my = (bs[0] + bs[1] + bs[2]) / 3;
        double num = 0, den = 0;
        for (int i = 0; i < 3; ++i) {
            num += (ms[static_cast<std::size_t>(i)] - mx) * (bs[static_cast<std::size_t>(i)] - my);
            den += (ms[static_cast<std::size_t>(i)] - mx) * (ms[static_cast<std::size_t>(i)] - mx);
        }
        const double slope = num / den;
        slope_ok = slope_ok && std::abs(slope - (-1.0)) <= 0.1;
        os << " slope " << sci(slope) << ";";
    }
    return {sound && monotone && slope_ok,
            std::string("sound ") + (sound ? "yes" : "no") + ", monotone " + (monotone ? "yes" : "no") +
                ", slope within 10% of -1 " + (slope_ok ? "yes" : "no") + ":" + os.str(),
            {}};
}

Verdict criterion6(int threads) {
    const auto t0 = Clock::now();
    const IdentitySetup s = cube_setup(Family::R, 0, 16, 40, threads, {0.0, 0.0, 0.0});
    const TestField one(Family::R, 3, 0, {{Envelope::constant(), ExactPoly::constant(Multivector<Rational>(3, Rational(1)))}});
    const Reconstruction r = cauchy_rhs_R(s, one);
    const double t = seconds_since(t0);
    return {r.rel_error <= 1e-6 && t < 60.0,
            "k = 0, f = 1, y = 0: rel err " + sci(r.rel_error) + " (limit 1e-6), " + sci(t) + " s (limit 60 s)",
            {{"c6", stripped(r)}}};
}

// Criteria 7 and the Cauchy half of 9.
Verdict cauchy_refinement(Family family, int threads) {
    const auto t0 = Clock::now();
    const ExactPoly poly = seeded_monogenic(family == Family::R ? 707 : 909, family == Family::R ? 1 : 0);
    const TestField f(family, 3, 1, {{Envelope::constant(), poly}});
    const Reconstruction coarse = cauchy_rhs(cube_setup(family, 1, 16, 30, threads, kOffCenter), f);
    const Reconstruction fine = cauchy_rhs(cube_setup(family, 1, 32, 60, threads, kOffCenter), f);
    const double t = seconds_since(t0);
    const bool falls = fine.rel_error <= coarse.rel_error / 4.0;
    return {coarse.rel_error <= 1e-4 && falls && t < 300.0,
            "order 16/M 30: rel err " + sci(coarse.rel_error) + " (limit 1e-4); order 32/M 60: " +
                sci(fine.rel_error) + " (needs 4x drop: " + (falls ? "yes" : "no") + "), " + sci(t) + " s",
            {{"coarse", stripped(coarse)}, {"fine", stripped(fine)}}};
}

// Borel-Pompeiu with x_1 envelope and compact support with a bump.
Verdict volume_identities(Family family, int threads) {
    const ExactPoly poly = seeded_monogenic(family == Family::R ? 808 : 1010, family == Family::R ? 1 : 0);
    const TestField lin(family, 3, 1, {{Envelope::coordinate(3, 1), poly}});
    const Reconstruction bp = borel_pompeiu(cube_setup(family, 1, 16, 30, threads, kOffCenter), lin);
    const IdentitySetup s = cube_setup(family, 1, 16, 30, threads, kOffCenter);
    const double radius = 0.9 * s.box.boundary_distance(s.y);
    const TestField bump(family, 3, 1, {{Envelope::bump(kOffCenter, radius, 4), poly}});
    const Reconstruction sup = compact_support(s, bump);
    return {bp.rel_error <= 1e-3 && sup.rel_error <= 5e-3,
            "Borel-Pompeiu f = x1 p: rel err " + sci(bp.rel_error) + " (limit 1e-3), volume term " +
                sci(max_abs_coefficient(bp.volume)) + "; compact support (bump): rel err " + sci(sup.rel_error) +
                " (limit 5e-3)",
            {{"bp", stripped(bp)}, {"support", stripped(sup)}}};
}

Verdict criterion7(int threads) { return cauchy_refinement(Family::R, threads); }
Verdict criterion8(int threads) { return volume_identities(Family::R, threads); }

Verdict criterion9(int threads) {
    const Verdict c = cauchy_refinement(Family::Q, threads);
    const Verdict v = volume_identities(Family::Q, threads);
    return {c.pass && v.pass, "Cauchy: " + c.detail + "; " + v.detail, {{"cauchy", c.report}, {"volume", v.report}}};
}

Verdict criterion10(int /*threads*/) {
    struct Case {
        int n, l, p;
        Family family;
    };
    const Case cases[] = {{3, 1, 0, Family::R}, {3, 1, 1, Family::R}, {3, 2, 0, Family::R}, {3, 2, 1, Family::R},
                          {3, 1, 0, Family::Q}, {3, 1, 1, Family::Q}, {3, 2, 0, Family::Q}, {3, 2, 1, Family::Q},
                          {4, 3, 1, Family::R}};
    bool pass = true;
    std::ostringstream os;
    nlohmann::json payload = nlohmann::json::array();
    for (const auto& c : cases) {
        const PeriodicKernelSpec spec{c.family, c.n, 1, c.l, c.p};
        std::vector<double> x{0.21, 0.33, -0.12, 0.07};
        x.resize(static_cast<std::size_t>(c.n));
        std::vector<double> x1 = x;
        x1[0] += 1.0;
        const int M = 20;
        const PeriodicKernel pk(spec, M);
        const KernelPoly a = pk.evaluate(x);
        const KernelPoly b = pk.evaluate(x1);
        const double rdom = std::max(norm(VectorN<double>(x)), norm(VectorN<double>(x1)));
        const double bound = pk.report(rdom).bound;
        const double gap = sampled_sup_norm(c.p == 0 ? b - a : b + a, 16, 99);
        const bool ok = gap <= 2.0 * bound;
        pass = pass && ok;
        os << " n=" << c.n << ",l=" << c.l << ",p=" << c.p << "," << family_name(c.family) << ": " << sci(gap)
           << (ok ? " <= " : " > ") << "2x" << sci(bound) << ";";
        payload.push_back({{"a", a.data()}, {"b", b.data()}});
    }
    return {pass, "|K(x+e1) -/+ K(x)| within twice the tail bound at M = 20:" + os.str(), payload};
}

Verdict criterion11() {
    bool pass = true;
    std::ostringstream os;
    for (Family fam : {Family::R, Family::Q}) {
        const int pdeg = fam == Family::R ? 1 : 0;
        Rng rng(1111);
        const ExactPoly fp = random_monogenic(rng, 3, pdeg, Side::left);
        const ExactPoly gp = random_monogenic(rng, 3, pdeg, Side::right);
        const BoxRegion box = BoxRegion::cube(3, 0.9);
        const TestField fl(fam, 3, 1, {{Envelope::coordinate(3, 1), fp}});
        const TestField gl(fam, 3, 1, {{Envelope::affine(0.5, {0.2, -0.3, 0.7}), gp}}, Side::right);
        const StokesResult poly16 = stokes_residual({box, 16, 1}, fl, gl);
        const TestField fe(fam, 3, 1, {{Envelope::exponential({27.0, -18.0, 12.0}), fp}});
        const TestField ge(fam, 3, 1, {{Envelope::exponential({21.0, 15.0, -18.0}), gp}}, Side::right);
        const StokesResult e16 = stokes_residual({box, 16, 1}, fe, ge);
        const StokesResult e32 = stokes_residual({box, 32, 1}, fe, ge);
        const double rel16 = e16.residual / e16.scale;
        const double rel32 = e32.residual / e32.scale;
        const bool ok = poly16.residual <= 1e-8 && rel32 <= 0.1 * rel16;
        pass = pass && ok;
        os << " " << family_name(fam) << ": polynomial pair residual " << sci(poly16.residual)
           << " (limit 1e-8); exponential pair rel residual " << sci(rel16) << " -> " << sci(rel32) << ";";
    }
    return {pass, "order 16 vs 32:" + os.str(), {}};
}

Verdict criterion12(const std::vector<std::function<Verdict(int)>>& runs) {
    bool same = true;
    std::string which;
    int idx = 6;
    for (const auto& run : runs) {
        const std::string a = run(1).report.dump();
        const std::string b = run(8).report.dump();
        if (a != b) {
            same = false;
            which += " " + std::to_string(idx);
        }
        ++idx;
    }
    return {same, std::string("criteria 6-10 with 1 and 8 worker threads: reports ") +
                      (same ? "bit-identical" : "differ in" + which),
            {}};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"exact algebra suite", criterion1},
        {"Almansi-Fischer exactness", criterion2},
        {"zonal kernel reproduction", criterion3},
        {"kernel annihilation O(h^2)", criterion4},
        {"truncation bound soundness", criterion5},
        {"k = 0 classical reduction", [] { return criterion6(1); }},
        {"Cauchy integral formula (R)", [] { return criterion7(1); }},
        {"Borel-Pompeiu and compact support (R)", [] { return criterion8(1); }},
        {"Q-side Cauchy, Borel-Pompeiu, compact support", [] { return criterion9(1); }},
        {"periodicity and twist parity", [] { return criterion10(1); }},
        {"Stokes residuals", criterion11},
        {"determinism across thread counts",
         [] { return criterion12({criterion6, criterion7, criterion8, criterion9, criterion10}); }},
    };
    int failed = 0;
    int index = 1;
    for (const auto& [name, run] : criteria) {
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what(), {}};
        }
        std::printf("[%s] criterion %2d %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
        std::fflush(stdout);
        if (!v.pass) ++failed;
        ++index;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
