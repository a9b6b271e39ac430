#include "cli/commands.hpp"

#include "rscyl/integrate/report.hpp"
#include "rscyl/poly/random.hpp"

#include <chrono>
#include <ostream>

namespace rscyl::cli {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct IdentityName {
    std::string kind;  // cauchy, bp, support, stokes
    Family family;
};

IdentityName parse_identity(const std::string& id) {
    const auto us = id.rfind('_');
    if (us == std::string::npos || us + 2 != id.size())
        throw UsageError("identity must be one of cauchy_R, cauchy_Q, bp_R, bp_Q, stokes_R, stokes_Q, support_R, support_Q");
    const std::string kind = id.substr(0, us);
    const char fam = id.back();
    if ((kind != "cauchy" && kind != "bp" && kind != "support" && kind != "stokes") || (fam != 'R' && fam != 'Q'))
        throw UsageError("unknown identity '" + id + "'");
    return {kind, fam == 'R' ? Family::R : Family::Q};
}

double default_tolerance(const std::string& kind) {
    if (kind == "cauchy") return 1e-4;
    if (kind == "bp") return 1e-3;
    if (kind == "support") return 5e-3;
    return 1e-8;
}

ExactPoly seeded_polynomial(const RunConfig& config, Family family, Side side, std::uint64_t stream) {
    Rng rng(config.seed * 1000003u + stream);
    const int degree = family == Family::R ? config.k : config.k - 1;
    if (degree < 0) throw UsageError("Q-side identities need k >= 1");
    for (int attempt = 0; attempt < 16; ++attempt) {
        ExactPoly p = random_monogenic(rng, config.n, degree, side);
        if (!p.is_zero()) return p;
    }
    throw InternalError("random monogenic polynomial stayed zero");
}

// CSV-safe exponent, space separated.
std::string exponent_field(const Exponent& a, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (i) s += ' ';
        s += std::to_string(a[static_cast<std::size_t>(i)]);
    }
    return s;
}

} // namespace

TestField certify_field(const RunConfig& config, const std::string& identity) {
    const IdentityName id = parse_identity(identity);
    const ExactPoly poly = seeded_polynomial(config, id.family, Side::left, 1);
    if (id.kind == "cauchy") return TestField(id.family, config.n, config.k, {{Envelope::constant(), poly}});
    if (id.kind == "bp" || id.kind == "stokes")
        return TestField(id.family, config.n, config.k, {{Envelope::coordinate(config.n, 1), poly}});
    const auto y = config.point();
    const double radius = 0.9 * config.box().boundary_distance(y);
    return TestField(id.family, config.n, config.k, {{Envelope::bump(y, radius, 4), poly}});
}

CommandResult cmd_certify(const RunConfig& config) {
    config.validate();
    const IdentityName id = parse_identity(config.identity);
    RunConfig cfg = config;
    cfg.family = id.family;
    const double tol = cfg.tolerance.value_or(default_tolerance(id.kind));
    const auto t0 = std::chrono::steady_clock::now();
    CommandResult result;
    if (id.kind == "stokes") {
        if (id.family == Family::Q && cfg.k < 1) throw UsageError("Q-side identities need k >= 1");
        const TestField f = certify_field(cfg, cfg.identity);
        const ExactPoly gp = seeded_polynomial(cfg, id.family, Side::right, 2);
        std::vector<double> slope(static_cast<std::size_t>(cfg.n), 0.0);
        for (int j = 0; j < cfg.n; ++j) slope[static_cast<std::size_t>(j)] = 0.1 * (j + 2) * (j % 2 ? -1.0 : 1.0);
        const TestField g(id.family, cfg.n, cfg.k, {{Envelope::affine(0.5, slope), gp}}, Side::right);
        const StokesResult r = stokes_residual(StokesSetup{cfg.box(), cfg.surface_order, cfg.threads}, f, g);
        result.report = stokes_report(cfg.identity, r, cfg.to_json(), elapsed_ms(t0));
        result.report["tolerance"] = tol;
        result.report["passed"] = r.residual <= tol;
        result.exit_code = r.residual <= tol ? exit_pass : exit_failure;
        return result;
    }
    IdentitySetup setup = cfg.identity_setup();
    setup.validate();
    const TestField f = certify_field(cfg, cfg.identity);
    Reconstruction r;
    if (id.kind == "cauchy") r = cauchy_rhs(setup, f);
    else if (id.kind == "bp") r = borel_pompeiu(setup, f);
    else r = compact_support(setup, f);
    result.report = reconstruction_report(r, cfg.to_json(), elapsed_ms(t0));
    result.report["tolerance"] = tol;
    result.report["field"] = f.tag();
    result.report["passed"] = r.rel_error <= tol;
    result.exit_code = r.rel_error <= tol ? exit_pass : exit_failure;
    return result;
}

CommandResult cmd_kernel_eval(const RunConfig& config, std::ostream& csv) {
    config.validate();
    if (static_cast<int>(config.x.size()) != config.n)
        throw UsageError("kernel-eval needs x with " + std::to_string(config.n) + " components");
    if (config.u.empty() != config.v.empty()) throw UsageError("supply both u and v, or neither");
    const VectorN<double> x(config.x);
    const double dist = lattice_distance(config.x, config.l);
    if (dist <= kSingularGuard)
        throw SingularityError("x lies on the singular set x + Z^" + std::to_string(config.l) +
                               ": lattice distance " + format_double(dist));
    const auto t0 = std::chrono::steady_clock::now();
    const PeriodicKernelValue kv = periodic_kernel(config.kernel_spec(), x, config.truncation());
    CommandResult result;
    result.report = {{"command", "kernel-eval"},
                     {"params", config.to_json()},
                     {"lattice_distance", dist},
                     {"truncation_report", truncation_to_json(kv.report)}};
    if (!config.u.empty()) {
        if (static_cast<int>(config.u.size()) != config.n || static_cast<int>(config.v.size()) != config.n)
            throw UsageError("u and v need " + std::to_string(config.n) + " components");
        const Multivector<double> value = kv.value.evaluate(config.u, config.v);
        csv << "blade,value\n";
        for (int b = 0; b < (1 << config.n); ++b)
            csv << blade_name(static_cast<Blade>(b)) << ',' << format_double(value[static_cast<Blade>(b)]) << '\n';
        result.report["value"] = value.coeffs();
    } else {
        csv << "u_exponent,v_exponent,blade,value\n";
        const auto& bu = MonomialBasis::get(config.n, kv.value.u_degree());
        const auto& bv = MonomialBasis::get(config.n, kv.value.v_degree());
        for (int iu = 0; iu < kv.value.u_count(); ++iu)
            for (int iv = 0; iv < kv.value.v_count(); ++iv) {
                const double* c = kv.value.coeff(iu, iv);
                for (int b = 0; b < kv.value.blade_count(); ++b) {
                    if (c[b] == 0.0) continue;
                    csv << exponent_field(bu[iu], config.n) << ',' << exponent_field(bv[iv], config.n) << ','
                        << blade_name(static_cast<Blade>(b)) << ',' << format_double(c[b]) << '\n';
                }
            }
        result.report["coefficients"] = kernel_to_json(kv.value);
    }
    result.report["runtime_ms"] = elapsed_ms(t0);
    return result;
}

CommandResult cmd_convergence(const RunConfig& config, std::ostream& csv) {
    config.validate();
    if (config.sweep_orders.empty() || config.sweep_radii.empty()) throw UsageError("sweep must be nonempty");
    const IdentityName id = parse_identity(config.identity);
    if (id.kind == "stokes") throw UsageError("convergence sweeps take reconstruction identities");
    RunConfig cfg = config;
    cfg.family = id.family;
    cfg.identity_setup().validate();
    const TestField f = certify_field(cfg, cfg.identity);
    csv << "order,M,error,bound,runtime_ms,flag\n";
    CommandResult result;
    result.report = {{"command", "convergence"}, {"params", cfg.to_json()}, {"rows", nlohmann::json::array()}};
    bool monotone = true;
    for (int order : cfg.sweep_orders) {
        double previous = INFINITY;
        for (int m : cfg.sweep_radii) {
            IdentitySetup setup = cfg.identity_setup();
            setup.surface_order = setup.volume_order = order;
            setup.patch.radial_order = order;
            setup.truncation = TruncationPolicy::with_radius(m);
            const auto t0 = std::chrono::steady_clock::now();
            Reconstruction r;
            if (id.kind == "cauchy") r = cauchy_rhs(setup, f);
            else if (id.kind == "bp") r = borel_pompeiu(setup, f);
            else r = compact_support(setup, f);
            const double ms = elapsed_ms(t0);
            // flat within the float floor counts as monotone
            const bool rises = r.rel_error > previous * 1.5 && r.rel_error > 1e-12;
            std::string flag;
            if (rises) flag = "non-monotone";
            if (r.abs_error > r.truncation.bound + 1e-12 * max_abs_coefficient(r.reference) && id.kind == "cauchy")
                flag += flag.empty() ? "above-bound" : ";above-bound";
            monotone = monotone && !rises;
            previous = r.rel_error;
            csv << order << ',' << m << ',' << format_double(r.rel_error) << ',' << format_double(r.truncation.bound)
                << ',' << format_double(ms) << ',' << flag << '\n';
            result.report["rows"].push_back({{"order", order},
                                             {"M", m},
                                             {"error", r.rel_error},
                                             {"bound", r.truncation.bound},
                                             {"runtime_ms", ms},
                                             {"flag", flag}});
        }
    }
    result.report["monotone"] = monotone;
    return result;
}

CommandResult cmd_selftest(const RunConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto checks = run_selftest_checks({3, 4, 5}, 200, 20, config.seed, config.fault);
    CommandResult result;
    long random_trials = 0;
    nlohmann::json list = nlohmann::json::array();
    nlohmann::json failed = nlohmann::json::array();
    for (const auto& c : checks) {
        if (c.randomized) random_trials += c.trials;
        list.push_back({{"name", c.name}, {"trials", c.trials}, {"failures", c.failures}, {"first_failure", c.first_failure}});
        if (c.failures > 0) failed.push_back(c.name);
    }
    result.report = {{"command", "selftest"},
                     {"seed", config.seed},
                     {"fault", config.fault},
                     {"identities_checked", checks.size()},
                     {"random_trials", random_trials},
                     {"checks", list},
                     {"failed", failed},
                     {"passed", failed.empty()},
                     {"runtime_ms", elapsed_ms(t0)}};
    result.exit_code = failed.empty() ? exit_pass : exit_failure;
    return result;
}

} // namespace rscyl::cli
