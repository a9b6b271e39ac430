#include "rscyl/integrate/identities.hpp"

#include "rscyl/clifford/dense_ops.hpp"
#include "rscyl/util/compensated.hpp"
#include "rscyl/util/parallel.hpp"

#include <cmath>

namespace rscyl {

const char* variant_name(PairingVariant v) {
    switch (v) {
    case PairingVariant::standard: return "standard";
    case PairingVariant::wrong_projection: return "wrong_projection";
    case PairingVariant::swapped_order: return "swapped_order";
    case PairingVariant::first_slot: return "first_slot";
    }
    return "?";
}

void IdentitySetup::validate() const {
    spec.validate();
    box.validate();
    if (box.dim() != spec.n) throw UsageError("box dimension differs from kernel dimension");
    box.require_lattice_hypothesis(spec.l);
    box.require_interior(y);
}

double reconstructing_sign(Family family) { return family == Family::R ? -1.0 : 1.0; }

double relative_coefficient_error(const FloatPoly& a, const FloatPoly& b) {
    const double diff = max_abs_coefficient(a - b);
    const double ref = max_abs_coefficient(b);
    return ref > 0.0 ? diff / ref : diff;
}

namespace {

struct Prepared {
    PeriodicKernel kernel;
    double rdom;
    std::size_t block;
};

double domain_radius(const BoxRegion& box, std::span<const double> y) {
    double r2 = 0.0;
    for (int j = 0; j < box.dim(); ++j) {
        const auto uj = static_cast<std::size_t>(j);
        const double far = std::abs(y[uj] - box.center[uj]) + box.half_widths[uj];
        r2 += far * far;
    }
    return std::sqrt(r2);
}

Prepared prepare(const IdentitySetup& setup, const TestField& f) {
    setup.validate();
    if (f.family() != setup.spec.family)
        throw UsageError(std::string("test field family ") + family_name(f.family()) + " differs from kernel family " +
                         family_name(setup.spec.family));
    if (f.dim() != setup.spec.n || f.weight() != setup.spec.k)
        throw UsageError("test field dimension/weight differ from the kernel spec");
    if (f.side() != Side::left) throw UsageError("reconstruction identities take left-sided test fields");
    const double rdom = domain_radius(setup.box, setup.y);
    int radius = 0;
    if (setup.truncation.radius) radius = *setup.truncation.radius;
    else if (setup.truncation.target_tail) radius = resolve_radius(setup.spec, rdom, *setup.truncation.target_tail);
    else throw UsageError("truncation policy needs a radius or a target");
    return {PeriodicKernel(setup.spec, radius), rdom, f.block_size()};
}

// Integrates node_fn(i, kernel_value, out) * weight over a rule.
template <class Rule, class DataFn>
std::vector<double> integrate_pairing(const IdentitySetup& setup, const Prepared& prep, const Rule& rule,
                                      double kernel_sign, DataFn&& data) {
    const std::size_t block = prep.block;
    const int n = setup.spec.n;
    std::vector<std::vector<double>> slots(rule.size());
    parallel_for(rule.size(), setup.threads, [&](std::size_t i) {
        const auto x = rule.point(i);
        std::vector<double> z(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) z[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] - setup.y[static_cast<std::size_t>(j)];
        std::vector<double> b(block, 0.0);
        data(i, x, std::span<double>(b));
        std::vector<double> out(block, 0.0);
        const KernelPoly k = prep.kernel.evaluate(z);
        const double scale = kernel_sign * rule.weights[i];
        switch (setup.variant) {
        case PairingVariant::first_slot: {
            const FloatPoly r = pair_first(k, from_dense(n, setup.spec.k, Var::u, b));
            const auto d = dense_coefficients(r);
            for (std::size_t c = 0; c < block; ++c) out[c] = scale * d[c];
            break;
        }
        case PairingVariant::swapped_order:
            pair_second_dense(k, b, out, scale, false);
            break;
        default:
            pair_second_dense(k, b, out, scale, true);
        }
        slots[i] = std::move(out);
    });
    CompensatedArray acc(block);
    for (const auto& s : slots) acc.add(s.data());
    return acc.values();
}

std::vector<double> boundary_term(const IdentitySetup& setup, const Prepared& prep, const SurfaceRule& rule,
                                  const TestField& f) {
    const bool wrong = setup.variant == PairingVariant::wrong_projection;
    return integrate_pairing(setup, prep, rule, reconstructing_sign(f.family()),
                             [&](std::size_t i, std::span<const double> x, std::span<double> b) {
                                 f.add_boundary_data(x, rule.axis[i], rule.normal_sign[i], b, wrong);
                             });
}

std::vector<double> volume_term(const IdentitySetup& setup, const Prepared& prep, const VolumeRule& rule,
                                const TestField& f, double kernel_sign, bool use_operator) {
    const bool wrong = setup.variant == PairingVariant::wrong_projection;
    return integrate_pairing(setup, prep, rule, kernel_sign,
                             [&](std::size_t, std::span<const double> x, std::span<double> b) {
                                 if (use_operator) f.add_operator_data(x, b, wrong);
                                 else f.value(x, b);
                             });
}

FloatPoly as_poly(const TestField& f, const std::vector<double>& d) { return from_dense(f.dim(), f.weight(), Var::v, d); }

Reconstruction finish(std::string identity, const IdentitySetup& setup, const Prepared& prep, const TestField& f,
                      FloatPoly boundary, FloatPoly volume, FloatPoly value, std::size_t snodes, std::size_t vnodes,
                      double patch_radius) {
    Reconstruction r;
    r.identity = std::move(identity);
    r.reference = f.value(setup.y, Var::v);
    r.boundary = std::move(boundary);
    r.volume = std::move(volume);
    r.value = std::move(value);
    r.abs_error = max_abs_coefficient(r.value - r.reference);
    r.rel_error = relative_coefficient_error(r.value, r.reference);
    r.truncation = prep.kernel.report(prep.rdom);
    r.surface_nodes = snodes;
    r.volume_nodes = vnodes;
    r.patch_radius = patch_radius;
    return r;
}

void require_family(const TestField& f, Family family) {
    if (f.family() != family)
        throw UsageError(std::string("operation expects a family-") + family_name(family) + " test field");
}

} // namespace

Reconstruction cauchy_rhs(const IdentitySetup& setup, const TestField& f) {
    const Prepared prep = prepare(setup, f);
    const SurfaceRule srule = build_surface_rule(setup.box, setup.surface_order);
    const FloatPoly bd = as_poly(f, boundary_term(setup, prep, srule, f));
    return finish(std::string("cauchy_") + family_name(f.family()), setup, prep, f, bd,
                  FloatPoly(f.dim(), f.weight(), Var::v), bd, srule.size(), 0, 0.0);
}

Reconstruction cauchy_rhs_R(const IdentitySetup& setup, const TestField& f) {
    require_family(f, Family::R);
    return cauchy_rhs(setup, f);
}

Reconstruction cauchy_rhs_Q(const IdentitySetup& setup, const TestField& g) {
    require_family(g, Family::Q);
    return cauchy_rhs(setup, g);
}

Reconstruction borel_pompeiu(const IdentitySetup& setup, const TestField& f) {
    const Prepared prep = prepare(setup, f);
    const SurfaceRule srule = build_surface_rule(setup.box, setup.surface_order);
    const VolumeRule vrule = build_volume_rule(setup.box, setup.volume_order, setup.y, setup.patch);
    const FloatPoly bd = as_poly(f, boundary_term(setup, prep, srule, f));
    const FloatPoly vol = as_poly(f, volume_term(setup, prep, vrule, f, reconstructing_sign(f.family()), true));
    return finish(std::string("bp_") + family_name(f.family()), setup, prep, f, bd, vol, bd - vol, srule.size(),
                  vrule.size(), vrule.patch_radius);
}

Reconstruction borel_pompeiu_R(const IdentitySetup& setup, const TestField& f) {
    require_family(f, Family::R);
    return borel_pompeiu(setup, f);
}

Reconstruction borel_pompeiu_Q(const IdentitySetup& setup, const TestField& g) {
    require_family(g, Family::Q);
    return borel_pompeiu(setup, g);
}

Reconstruction compact_support(const IdentitySetup& setup, const TestField& f) {
    const Prepared prep = prepare(setup, f);
    const SurfaceRule srule = build_surface_rule(setup.box, setup.surface_order);
    const VolumeRule vrule = build_volume_rule(setup.box, setup.volume_order, setup.y, setup.patch);
    const FloatPoly bd = as_poly(f, boundary_term(setup, prep, srule, f));
    const FloatPoly vol = as_poly(f, volume_term(setup, prep, vrule, f, reconstructing_sign(f.family()), true));
    return finish(std::string("support_") + family_name(f.family()), setup, prep, f, bd, vol, -vol, srule.size(),
                  vrule.size(), vrule.patch_radius);
}

FloatPoly cauchy_transform(const IdentitySetup& setup, const TestField& f) {
    const Prepared prep = prepare(setup, f);
    const VolumeRule vrule = build_volume_rule(setup.box, setup.volume_order, setup.y, setup.patch);
    return as_poly(f, volume_term(setup, prep, vrule, f, -1.0, false));
}

FloatPoly cauchy_transform_of_operator(const IdentitySetup& setup, const TestField& f) {
    const Prepared prep = prepare(setup, f);
    const VolumeRule vrule = build_volume_rule(setup.box, setup.volume_order, setup.y, setup.patch);
    return as_poly(f, volume_term(setup, prep, vrule, f, -1.0, true));
}

namespace {

// out += s * int_S A(u) B(u) dS(u) on dense degree-k blocks.
void sphere_pair_dense(int n, int k, const std::vector<double>& a, const std::vector<double>& b, double* out,
                       double s) {
    const auto& mom = moment_table(n, k, k);
    const int nb = 1 << n;
    const int count = static_cast<int>(MonomialBasis::get(n, k).size());
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            const double m = mom[static_cast<std::size_t>(i * count + j)];
            if (m == 0.0) continue;
            mv_mul_add(out, &a[static_cast<std::size_t>(i * nb)], &b[static_cast<std::size_t>(j * nb)], n, s * m);
        }
}

} // namespace

StokesResult stokes_residual(const StokesSetup& setup, const TestField& f, const TestField& g) {
    setup.box.validate();
    const int n = f.dim();
    const int k = f.weight();
    if (g.dim() != n || g.weight() != k || g.family() != f.family())
        throw UsageError("Stokes pair must share dimension, weight and family");
    if (f.side() != Side::left || g.side() != Side::right)
        throw UsageError("Stokes pair needs a left-sided f and a right-sided g");
    if (setup.box.dim() != n) throw UsageError("box dimension differs from field dimension");
    const int nb = 1 << n;
    const std::size_t block = f.block_size();

    const VolumeRule vrule = build_volume_rule(setup.box, setup.order);
    std::vector<std::vector<double>> vslots(vrule.size());
    parallel_for(vrule.size(), setup.threads, [&](std::size_t i) {
        const auto x = vrule.point(i);
        std::vector<double> fv(block), gv(block), fo(block, 0.0), go(block, 0.0);
        f.value(x, fv);
        g.value(x, gv);
        f.add_operator_data(x, fo);
        g.add_operator_data(x, go);
        std::vector<double> out(static_cast<std::size_t>(nb), 0.0);
        sphere_pair_dense(n, k, go, fv, out.data(), vrule.weights[i]);
        sphere_pair_dense(n, k, gv, fo, out.data(), vrule.weights[i]);
        vslots[i] = std::move(out);
    });
    const SurfaceRule srule = build_surface_rule(setup.box, setup.order);
    std::vector<std::vector<double>> sslots(srule.size());
    parallel_for(srule.size(), setup.threads, [&](std::size_t i) {
        const auto x = srule.point(i);
        std::vector<double> gv(block), fb(block, 0.0);
        g.value(x, gv);
        f.add_boundary_data(x, srule.axis[i], srule.normal_sign[i], fb);
        std::vector<double> out(static_cast<std::size_t>(nb), 0.0);
        sphere_pair_dense(n, k, gv, fb, out.data(), srule.weights[i]);
        sslots[i] = std::move(out);
    });
    CompensatedArray va(static_cast<std::size_t>(nb)), sa(static_cast<std::size_t>(nb));
    for (const auto& s : vslots) va.add(s.data());
    for (const auto& s : sslots) sa.add(s.data());
    StokesResult r;
    r.volume = Multivector<double>(n);
    r.boundary = Multivector<double>(n);
    const auto vv = va.values();
    const auto sv = sa.values();
    for (int q = 0; q < nb; ++q) {
        r.volume[static_cast<Blade>(q)] = vv[static_cast<std::size_t>(q)];
        r.boundary[static_cast<Blade>(q)] = sv[static_cast<std::size_t>(q)];
    }
    r.residual = std::sqrt(coefficient_norm_squared(r.volume - r.boundary));
    r.scale = std::max(std::sqrt(coefficient_norm_squared(r.volume)), std::sqrt(coefficient_norm_squared(r.boundary)));
    return r;
}

} // namespace rscyl
