#include <doctest.h>

#include "cli/commands.hpp"
#include "rscyl/poly/sphere.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace rscyl;
using namespace rscyl::cli;

namespace {

nlohmann::json without_timing(nlohmann::json j) {
    j.erase("runtime_ms");
    return j;
}

} // namespace

TEST_CASE("config entries and files") {
    RunConfig c;
    c.set("n", "4");
    c.set("trunc-target", "1e-3");
    CHECK(c.n == 4);
    CHECK(!c.trunc_radius);
    CHECK(*c.trunc_target == 1e-3);
    c.set("box", "0.8");
    CHECK(c.box().half_widths == std::vector<double>(4, 0.4));
    c.set("box", "0,0,0,0:0.3,0.4,0.2,0.1");
    CHECK(c.box().half_widths[3] == 0.1);
    CHECK_THROWS_AS(c.set("bogus", "1"), UsageError);
    CHECK_THROWS_AS(c.set("n", "three"), UsageError);
    CHECK_THROWS_AS(c.set("family", "X"), UsageError);

    const auto path = std::filesystem::temp_directory_path() / "rscyl_cli_test.cfg";
    {
        std::ofstream f(path);
        f << "# comment\nn = 3\nk=0   # trailing\nfamily = R\nbox = 0.9\n";
    }
    RunConfig d;
    load_config_file(path.string(), d);
    CHECK(d.k == 0);
    d.set("k", "1");  // flags applied after the file win
    CHECK(d.k == 1);
    {
        std::ofstream f(path);
        f << "n 3\n";
    }
    CHECK_THROWS_AS(load_config_file(path.string(), d), UsageError);
    std::filesystem::remove(path);

    RunConfig bad;
    bad.l = 3;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("selftest contract") {
    RunConfig c;
    const CommandResult ok = cmd_selftest(c);
    CHECK(ok.exit_code == exit_pass);
    CHECK(ok.report["identities_checked"].get<int>() >= 12);
    CHECK(ok.report["random_trials"].get<long>() >= 1000);
    c.fault = "conjugate-sign";
    const CommandResult broken = cmd_selftest(c);
    CHECK(broken.exit_code == exit_failure);
    bool named = false;
    for (const auto& name : broken.report["failed"])
        if (name.get<std::string>() == "conjugation anti-automorphism") named = true;
    CHECK(named);
}

TEST_CASE("kernel-eval against a direct lattice sum") {
    RunConfig c;
    c.k = 0;
    c.x = {0.5, 0.3, 0.0};
    c.trunc_radius = 200;
    c.u = {1.0, 0.0, 0.0};
    c.v = {0.0, 1.0, 0.0};
    std::ostringstream csv;
    const CommandResult r = cmd_kernel_eval(c, csv);
    // sum_m G(x + m) / omega_3^2 with G(x) = x / |x|^3
    const double omega = 4.0 * std::numbers::pi;
    double s[3] = {0, 0, 0};
    for (int m = -200; m <= 200; ++m) {
        const double z[3] = {0.5 + m, 0.3, 0.0};
        const double r3 = std::pow(z[0] * z[0] + z[1] * z[1], 1.5);
        for (int j = 0; j < 3; ++j) s[j] += z[j] / r3;
    }
    const auto& value = r.report["value"];
    CHECK(std::abs(value[1].get<double>() - s[0] / (omega * omega)) <= 1e-8);
    CHECK(std::abs(value[2].get<double>() - s[1] / (omega * omega)) <= 1e-8);
    CHECK(std::abs(value[4].get<double>()) <= 1e-8);
    CHECK(csv.str().rfind("blade,value\n", 0) == 0);

    // scalar output agrees with the coefficient export evaluated at (u, v)
    RunConfig poly = c;
    poly.k = 1;
    poly.trunc_radius = 20;
    poly.u.clear();
    poly.v.clear();
    std::ostringstream csv2;
    const CommandResult coeffs = cmd_kernel_eval(poly, csv2);
    const PeriodicKernelValue kv = periodic_kernel(poly.kernel_spec(), VectorN<double>(poly.x), poly.truncation());
    const std::vector<double> u{0.6, 0.0, 0.8}, v{0.0, -0.6, 0.8};
    poly.u = u;
    poly.v = v;
    std::ostringstream csv3;
    const CommandResult scalar = cmd_kernel_eval(poly, csv3);
    const Multivector<double> direct = kv.value.evaluate(u, v);
    for (int b = 0; b < 8; ++b) CHECK(std::abs(scalar.report["value"][static_cast<std::size_t>(b)].get<double>() - direct[static_cast<Blade>(b)]) <= 1e-14);
    CHECK(coeffs.report["coefficients"].size() == 9);

    // twisted kernel: values at x and x + e1 sum to about zero
    RunConfig tw = c;
    tw.p = 1;
    tw.trunc_radius = 200;
    std::ostringstream a, b;
    const auto k0 = cmd_kernel_eval(tw, a).report["value"];
    tw.x = {1.5, 0.3, 0.0};
    const auto k1 = cmd_kernel_eval(tw, b).report["value"];
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(k0[i].get<double>() + k1[i].get<double>()) <= 1e-5);

    RunConfig sing = c;
    sing.x = {2.0, 0.0, 0.0};
    std::ostringstream d;
    CHECK_THROWS_AS(cmd_kernel_eval(sing, d), SingularityError);
}

TEST_CASE("certify exit codes and determinism") {
    RunConfig c;
    c.identity = "cauchy_R";
    const CommandResult r = cmd_certify(c);
    CHECK(r.exit_code == exit_pass);
    CHECK(r.report["rel_err"].get<double>() <= 1e-4);
    CHECK(r.report["params"]["n"] == 3);

    c.threads = 5;
    CHECK(without_timing(cmd_certify(c).report) == without_timing(r.report));

    c.identity = "bp_R";
    c.threads = 1;
    CHECK(cmd_certify(c).report["rel_err"].get<double>() <= 1e-3);

    c.tolerance = 1e-30;
    CHECK(cmd_certify(c).exit_code == exit_failure);
    c.tolerance.reset();

    c.identity = "cauchy_R";
    c.set("box", "1.2");
    CHECK_THROWS_AS(cmd_certify(c), HypothesisError);

    RunConfig unknown;
    unknown.identity = "cauchy_X";
    CHECK_THROWS_AS(cmd_certify(unknown), UsageError);
}

TEST_CASE("convergence table") {
    RunConfig c;
    c.k = 0;
    c.sweep_orders = {16};
    c.sweep_radii = {10, 40};
    std::ostringstream csv;
    const CommandResult r = cmd_convergence(c, csv);
    CHECK(r.report["monotone"].get<bool>());
    for (const auto& row : r.report["rows"]) {
        CHECK(row["error"].get<double>() <= row["bound"].get<double>());
        CHECK(row["error"].get<double>() <= 1e-6);
    }
    std::istringstream lines(csv.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "order,M,error,bound,runtime_ms,flag");
}
