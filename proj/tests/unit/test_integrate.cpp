#include <doctest.h>

#include "rscyl/integrate/identities.hpp"
#include "rscyl/poly/random.hpp"
#include "rscyl/poly/sphere.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace rscyl;
using V = VectorN<double>;
using MVr = Multivector<Rational>;

namespace {

BoxRegion sample_box() { return BoxRegion{V{0.05, -0.1, 0.2}, {0.4, 0.3, 0.45}}; }

ExactPoly sample_p1() {
    const auto& b = fueter_basis(3, 1);
    return b.elements[0] + b.elements[1] * MVr::e(3, 2);
}

ExactPoly sample_g0() { return ExactPoly::constant(MVr::e(3, 2) + MVr(3, Rational(1))); }

IdentitySetup base_setup(Family family, int k) {
    IdentitySetup s;
    s.spec = {family, 3, k, 1, 0};
    s.box = BoxRegion::cube(3, 0.9);
    s.y = {0.1, -0.2, 0.15};
    s.surface_order = 16;
    s.volume_order = 16;
    s.truncation = TruncationPolicy::with_radius(30);
    return s;
}

// int over [c-h, c+h] of x^e
double power_integral(double c, double h, int e) {
    return (std::pow(c + h, e + 1) - std::pow(c - h, e + 1)) / (e + 1);
}

} // namespace

TEST_CASE("box region checks") {
    const BoxRegion ok = BoxRegion::cube(3, 0.9);
    CHECK_NOTHROW(ok.require_lattice_hypothesis(1));
    CHECK(ok.volume() == doctest::Approx(0.729));
    CHECK(ok.surface_area() == doctest::Approx(6 * 0.81));
    const BoxRegion wide = BoxRegion::cube(3, 1.2);
    try {
        wide.require_lattice_hypothesis(1);
        FAIL("expected a hypothesis error");
    } catch (const HypothesisError& e) {
        CHECK(std::string(e.what()).find("shifted lattice") != std::string::npos);
    }
    // widths beyond l are unconstrained
    const BoxRegion slab{V{0, 0, 0}, {0.4, 0.9, 2.0}};
    CHECK_NOTHROW(slab.require_lattice_hypothesis(1));
    CHECK_THROWS_AS(slab.require_lattice_hypothesis(2), HypothesisError);
    CHECK_THROWS_AS(ok.require_interior(std::vector<double>{0.44, 0.0, 0.0}), HypothesisError);
    CHECK_NOTHROW(ok.require_interior(std::vector<double>{0.4, 0.0, 0.0}));
    CHECK_THROWS_AS((BoxRegion{V{0, 0, 0}, {0.4, -0.3, 0.4}}.validate()), UsageError);
}

TEST_CASE("surface rule") {
    const double s = 0.9;
    const SurfaceRule cube = build_surface_rule(BoxRegion::cube(3, s), 8);
    CHECK(cube.total_weight() == doctest::Approx(6 * s * s).epsilon(1e-12));
    CHECK_THROWS_AS(build_surface_rule(BoxRegion::cube(3, s), 1), UsageError);
    CHECK_THROWS_AS(build_surface_rule(BoxRegion::cube(3, s), 65), UsageError);

    for (int n = 3; n <= 4; ++n) {
        BoxRegion box = BoxRegion::cube(n, 0.8);
        for (int j = 0; j < n; ++j) {
            box.center[static_cast<std::size_t>(j)] = 0.05 * (j + 1);
            box.half_widths[static_cast<std::size_t>(j)] = 0.3 + 0.04 * j;
        }
        const SurfaceRule rule = build_surface_rule(box, 6);
        CHECK(rule.total_weight() == doctest::Approx(box.surface_area()).epsilon(1e-12));
        std::vector<double> flux(static_cast<std::size_t>(n), 0.0);
        double xn = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const V nu = rule.normal(i);
            const auto x = rule.point(i);
            double dotx = 0.0;
            for (int j = 0; j < n; ++j) {
                flux[static_cast<std::size_t>(j)] += rule.weights[i] * nu[static_cast<std::size_t>(j)];
                dotx += x[static_cast<std::size_t>(j)] * nu[static_cast<std::size_t>(j)];
            }
            xn += rule.weights[i] * dotx;
            // outward: moving along the normal leaves the box
            std::vector<double> out(x.begin(), x.end());
            out[static_cast<std::size_t>(rule.axis[i])] += 1e-3 * rule.normal_sign[i];
            REQUIRE(box.boundary_distance(out) < 0.0);
        }
        for (double f : flux) CHECK(std::abs(f) <= 1e-12);
        CHECK(xn == doctest::Approx(n * box.volume()).epsilon(1e-10));
    }
}

TEST_CASE("surface form element agrees with normal times area") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int n = 3; n <= 5; ++n)
        for (int t = 0; t < 20; ++t) {
            std::vector<V> tangents;
            for (int c = 0; c < n - 1; ++c) {
                V v(n);
                for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = g(rng);
                tangents.push_back(v);
            }
            const V form = surface_form_element(tangents);
            // Gram determinant oracle for the (n-1)-volume
            std::vector<double> gram(static_cast<std::size_t>((n - 1) * (n - 1)));
            for (int a = 0; a < n - 1; ++a)
                for (int b = 0; b < n - 1; ++b)
                    gram[static_cast<std::size_t>(a * (n - 1) + b)] = dot(tangents[static_cast<std::size_t>(a)], tangents[static_cast<std::size_t>(b)]);
            // det by elimination
            double det = 1.0;
            const int m = n - 1;
            for (int c = 0; c < m; ++c) {
                const double piv = gram[static_cast<std::size_t>(c * m + c)];
                det *= piv;
                for (int r = c + 1; r < m; ++r) {
                    const double f = gram[static_cast<std::size_t>(r * m + c)] / piv;
                    for (int q = c; q < m; ++q) gram[static_cast<std::size_t>(r * m + q)] -= f * gram[static_cast<std::size_t>(c * m + q)];
                }
            }
            CHECK(norm(form) == doctest::Approx(std::sqrt(det)).epsilon(1e-10));
            for (const V& tv : tangents) CHECK(std::abs(dot(form, tv)) <= 1e-10 * norm(form) * norm(tv));
        }

    // Box faces: oriented tangent frames reproduce the rule's normal * face area.
    const BoxRegion box{V{0.0, 0.1, -0.1}, {0.3, 0.4, 0.2}};
    const SurfaceRule rule = build_surface_rule(box, 2);
    for (std::size_t i = 0; i < rule.size(); i += 4) {
        const int d = rule.axis[i];
        std::vector<V> tangents;
        for (int j = 0; j < 3; ++j)
            if (j != d) tangents.push_back(V::unit(3, j + 1) * (2.0 * box.half_widths[static_cast<std::size_t>(j)]));
        V form = surface_form_element(tangents);
        if (dot(form, rule.normal(i)) < 0.0) {
            tangents[0] = tangents[0] * -1.0;
            form = surface_form_element(tangents);
        }
        double face_area = 0.0;
        for (std::size_t q = i; q < i + 4; ++q) face_area += rule.weights[q];
        CHECK(norm(form - rule.normal(i) * face_area) <= 1e-12);
    }
}

TEST_CASE("sphere rule moments") {
    for (int n = 2; n <= 5; ++n) {
        const PointRule rule = sphere_rule(n, 6);
        CHECK(rule.total_weight() == doctest::Approx(sphere_area(n)).epsilon(1e-13));
        const auto& basis = MonomialBasis::get(n, 4);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Exponent& a = basis[static_cast<int>(i)];
            double q = 0.0;
            for (std::size_t p = 0; p < rule.size(); ++p) {
                double m = 1.0;
                for (int j = 0; j < n; ++j) m *= std::pow(rule.point(p)[static_cast<std::size_t>(j)], a[static_cast<std::size_t>(j)]);
                q += rule.weights[p] * m;
            }
            CHECK(q == doctest::Approx(sphere_area(n) * sphere_moment_ratio(n, a).get_d()).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("volume rules") {
    const BoxRegion box = sample_box();
    const VolumeRule plain = build_volume_rule(box, 5);
    CHECK(plain.total_weight() == doctest::Approx(box.volume()).epsilon(1e-12));

    const std::vector<double> y{0.1, -0.05, 0.3};
    const VolumeRule patched = build_volume_rule(box, 16, y, SingularPatch{});
    CHECK(patched.patched);
    CHECK(patched.total_weight() == doctest::Approx(box.volume()).epsilon(1e-10));
    const double rho = patched.patch_radius;
    CHECK(rho == doctest::Approx(std::min(0.1 * 0.3, 0.5 * box.boundary_distance(y))));

    // |x - y|^{1-n} over the ball is omega_n rho.
    double ball = 0.0;
    for (std::size_t i = 0; i < patched.patch_nodes; ++i) {
        double r2 = 0.0;
        for (int j = 0; j < 3; ++j) r2 += std::pow(patched.point(i)[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>(j)], 2);
        ball += patched.weights[i] / r2;
    }
    CHECK(ball == doctest::Approx(sphere_area(3) * rho).epsilon(1e-8));

    // Monomials integrate to the product of one-dimensional integrals.
    double q = 0.0;
    for (std::size_t i = 0; i < patched.size(); ++i) {
        const auto x = patched.point(i);
        q += patched.weights[i] * x[0] * x[0] * x[1] * std::pow(x[2], 3);
    }
    const double exact = power_integral(0.05, 0.4, 2) * power_integral(-0.1, 0.3, 1) * power_integral(0.2, 0.45, 3);
    CHECK(q == doctest::Approx(exact).epsilon(1e-10));

    // Singular integrand over the whole box: two independent patch radii agree.
    auto singular = [&](const VolumeRule& r) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            double r2 = 0.0;
            for (int j = 0; j < 3; ++j) r2 += std::pow(r.point(i)[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>(j)], 2);
            s += r.weights[i] / r2;
        }
        return s;
    };
    const double fine = singular(build_volume_rule(box, 32, y, SingularPatch{32, 16, 0.0}));
    const double fine_other = singular(build_volume_rule(box, 32, y, SingularPatch{32, 16, 0.02}));
    CHECK(fine == doctest::Approx(fine_other).epsilon(1e-12));
    CHECK(singular(patched) == doctest::Approx(fine).epsilon(1e-8));
    CHECK_THROWS_AS(build_volume_rule(box, 16, std::vector<double>{0.44, 0.0, 0.2}, SingularPatch{}), HypothesisError);
}

TEST_CASE("test field validation and operator data") {
    const ExactPoly p1 = sample_p1();
    CHECK_THROWS_AS(TestField(Family::R, 3, 1, {{Envelope::constant(), sample_g0()}}), UsageError);
    CHECK_THROWS_AS(TestField(Family::Q, 3, 0, {{Envelope::constant(), sample_g0()}}), UsageError);
    CHECK_THROWS_AS(TestField(Family::R, 3, 1, {{Envelope::constant(), p1}}, Side::right), DomainError);
    CHECK_THROWS_AS(TestField(Family::R, 3, 1, {}), UsageError);

    // R_k of x_1 p: in M_k, and D_x f - R_k f lies in u M_{k-1}.
    const TestField f(Family::R, 3, 1, {{Envelope::coordinate(3, 1), p1}});
    std::vector<double> op(f.block_size(), 0.0);
    const std::vector<double> x{0.2, 0.1, -0.3};
    f.add_operator_data(x, op);
    const FloatPoly rk = from_dense(3, 1, Var::u, op);
    CHECK(max_abs_coefficient(dirac_apply(rk)) <= 1e-14);
    const FloatPoly dx = to_double(MVr::e(3, 1) * p1);
    CHECK(max_abs_coefficient(project_Pk(dx - rk)) <= 1e-14);

    // Q_k of x_1 u g: in u M_{k-1}.
    const TestField g(Family::Q, 3, 1, {{Envelope::coordinate(3, 1), sample_g0()}});
    std::vector<double> qop(g.block_size(), 0.0);
    g.add_operator_data(x, qop);
    const FloatPoly qk = from_dense(3, 1, Var::u, qop);
    CHECK(max_abs_coefficient(project_Pk(qk)) <= 1e-14);
    CHECK(max_abs_coefficient(qk) > 0.1);

    // Envelope gradients against central differences.
    const Envelope envs[] = {Envelope::bump({0.0, 0.1, 0.0}, 0.5, 3), Envelope::exponential({1.0, -2.0, 0.5}),
                             Envelope::affine(0.3, {1.0, 2.0, 3.0})};
    for (const auto& e : envs) {
        std::vector<double> grad(3);
        e.gradient(x, grad);
        for (int j = 0; j < 3; ++j) {
            auto xp = x, xm = x;
            xp[static_cast<std::size_t>(j)] += 1e-6;
            xm[static_cast<std::size_t>(j)] -= 1e-6;
            CHECK(grad[static_cast<std::size_t>(j)] == doctest::Approx((e.value(xp) - e.value(xm)) / 2e-6).epsilon(1e-7));
        }
    }
}

TEST_CASE("Cauchy integral formula, R side") {
    IdentitySetup s = base_setup(Family::R, 1);
    const TestField f(Family::R, 3, 1, {{Envelope::constant(), sample_p1()}});
    const Reconstruction off = cauchy_rhs_R(s, f);
    CHECK(off.rel_error <= 1e-4);
    s.y = {0.0, 0.0, 0.0};
    CHECK(cauchy_rhs_R(s, f).rel_error <= 1e-4);
    CHECK_THROWS_AS(cauchy_rhs_Q(s, f), UsageError);

    IdentitySetup k0 = base_setup(Family::R, 0);
    k0.truncation = TruncationPolicy::with_radius(40);
    const TestField one(Family::R, 3, 0, {{Envelope::constant(), ExactPoly::constant(MVr(3, Rational(1)))}});
    CHECK(cauchy_rhs_R(k0, one).rel_error <= 1e-6);

    IdentitySetup wide = base_setup(Family::R, 1);
    wide.box = BoxRegion::cube(3, 1.2);
    wide.y = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(cauchy_rhs_R(wide, f), HypothesisError);
}

TEST_CASE("Cauchy integral formula, Q side and negative controls") {
    IdentitySetup s = base_setup(Family::Q, 1);
    const TestField g(Family::Q, 3, 1, {{Envelope::constant(), sample_g0()}});
    CHECK(cauchy_rhs_Q(s, g).rel_error <= 1e-4);
    const TestField f(Family::R, 3, 1, {{Envelope::constant(), sample_p1()}});
    IdentitySetup r = base_setup(Family::R, 1);
    for (auto v : {PairingVariant::wrong_projection, PairingVariant::swapped_order, PairingVariant::first_slot}) {
        s.variant = v;
        r.variant = v;
        CHECK(cauchy_rhs_Q(s, g).rel_error > 0.1);
        CHECK(cauchy_rhs_R(r, f).rel_error > 0.1);
    }
}

TEST_CASE("Borel-Pompeiu and Cauchy transform") {
    IdentitySetup s = base_setup(Family::R, 1);
    const ExactPoly p1 = sample_p1();
    const TestField lin(Family::R, 3, 1, {{Envelope::coordinate(3, 1), p1}});
    const Reconstruction bp = borel_pompeiu_R(s, lin);
    CHECK(bp.rel_error <= 1e-3);
    CHECK(max_abs_coefficient(bp.volume) > 1e-2);

    // cauchy - BP is T applied to R_k f
    const Reconstruction c = cauchy_rhs_R(s, lin);
    const FloatPoly t = cauchy_transform_of_operator(s, lin);
    CHECK(max_abs_coefficient((c.value - bp.value) - t) <= 1e-10);

    const TestField constant(Family::R, 3, 1, {{Envelope::constant(), p1}});
    const Reconstruction bpc = borel_pompeiu_R(s, constant);
    CHECK(max_abs_coefficient(bpc.volume) == 0.0);
    CHECK(max_abs_coefficient(bpc.value - cauchy_rhs_R(s, constant).value) == 0.0);

    const TestField zero(Family::R, 3, 1, {{Envelope::constant(0.0), p1}});
    CHECK(max_abs_coefficient(cauchy_transform(s, zero)) == 0.0);

    s.y = {0.0, 0.05, 0.0};
    const TestField bump(Family::R, 3, 1, {{Envelope::bump({0.0, 0.0, 0.0}, 0.4), p1}});
    const Reconstruction sup = compact_support(s, bump);
    CHECK(max_abs_coefficient(sup.boundary) == 0.0);
    CHECK(sup.rel_error <= 5e-3);
    const FloatPoly tb = cauchy_transform_of_operator(s, bump);
    CHECK(relative_coefficient_error(tb * -1.0, bump.value(s.y)) <= 5e-3);

    IdentitySetup q = base_setup(Family::Q, 1);
    const TestField glin(Family::Q, 3, 1, {{Envelope::coordinate(3, 1), sample_g0()}});
    CHECK(borel_pompeiu_Q(q, glin).rel_error <= 1e-3);
    q.y = {0.0, 0.05, 0.0};
    const TestField gbump(Family::Q, 3, 1, {{Envelope::bump({0.0, 0.0, 0.0}, 0.4), sample_g0()}});
    CHECK(compact_support(q, gbump).rel_error <= 5e-3);
}

TEST_CASE("reconstruction is independent of the thread count") {
    IdentitySetup s = base_setup(Family::R, 1);
    s.surface_order = 8;
    s.volume_order = 8;
    s.patch = SingularPatch{8, 8, 0.0};
    const TestField lin(Family::R, 3, 1, {{Envelope::coordinate(3, 1), sample_p1()}});
    s.threads = 1;
    const Reconstruction a = borel_pompeiu_R(s, lin);
    s.threads = 7;
    const Reconstruction b = borel_pompeiu_R(s, lin);
    CHECK(a.value == b.value);
}

TEST_CASE("Stokes residuals") {
    for (Family fam : {Family::R, Family::Q}) {
        const int pdeg = fam == Family::R ? 1 : 0;
        Rng rng(5);
        const ExactPoly fp = random_monogenic(rng, 3, pdeg, Side::left);
        const ExactPoly gp = random_monogenic(rng, 3, pdeg, Side::right);
        const StokesSetup st{BoxRegion::cube(3, 0.9), 16, 1};
        const TestField fc(fam, 3, 1, {{Envelope::constant(), fp}});
        const TestField gc(fam, 3, 1, {{Envelope::constant(), gp}}, Side::right);
        CHECK(stokes_residual(st, fc, gc).residual <= 1e-12);

        const TestField fl(fam, 3, 1, {{Envelope::coordinate(3, 1), fp}});
        const TestField gl(fam, 3, 1, {{Envelope::affine(0.5, {0.2, -0.3, 0.7}), gp}}, Side::right);
        const StokesResult lin = stokes_residual(st, fl, gl);
        CHECK(lin.residual <= 1e-8);
        CHECK(lin.scale > 1.0);

        const TestField fe(fam, 3, 1, {{Envelope::exponential({27.0, -18.0, 12.0}), fp}});
        const TestField ge(fam, 3, 1, {{Envelope::exponential({21.0, 15.0, -18.0}), gp}}, Side::right);
        const StokesResult e16 = stokes_residual(st, fe, ge);
        const StokesResult e32 = stokes_residual(StokesSetup{st.box, 32, 1}, fe, ge);
        CHECK(e32.residual / e32.scale <= 0.1 * (e16.residual / e16.scale));

        CHECK_THROWS_AS(stokes_residual(st, gc, fc), UsageError);
    }
}
