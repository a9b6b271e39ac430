#include "cli/commands.hpp"

#include "rscyl/integrate/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace rscyl;
using namespace rscyl::cli;

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"Rarita-Schwinger cylinder kernels: self-tests, kernel export and identity certification"};
    app.require_subcommand(1);
    std::string config_path;
    std::map<std::string, std::string> overrides;
    app.add_option("--config", config_path, "key = value configuration file (flags win)");
    auto flag = [&](const std::string& name, const std::string& help) {
        app.add_option_function<std::string>(
               "--" + name, [&overrides, name](const std::string& v) { overrides[name] = v; }, help)
            ->take_last();
    };
    flag("n", "dimension");
    flag("k", "weight (degree in u)");
    flag("l", "lattice rank");
    flag("p", "twist rank");
    flag("family", "R or Q");
    flag("box", "side, or c1,..,cn:h1,..,hn");
    flag("y", "evaluation point y");
    flag("order", "quadrature order (surface, volume, radial)");
    flag("sphere-order", "sphere rule order for the singular patch");
    flag("trunc-radius", "lattice truncation radius M");
    flag("trunc-target", "target tail bound (chooses M)");
    flag("seed", "random seed");
    flag("threads", "worker threads");
    flag("out", "output path");
    flag("tolerance", "pass tolerance for certify");
    flag("x", "kernel argument x");
    flag("u", "first slot point");
    flag("v", "second slot point");
    flag("sweep-orders", "comma-separated quadrature orders");
    flag("sweep-radii", "comma-separated truncation radii");
    flag("fault", "selftest fault injection (conjugate-sign)");

    auto* selftest = app.add_subcommand("selftest", "exact algebra and polynomial-space identities");
    auto* kernel_eval = app.add_subcommand("kernel-eval", "periodic kernel coefficients at x");
    auto* certify = app.add_subcommand("certify", "run one integral identity against its reference");
    std::string identity;
    certify->add_option("identity", identity,
                        "cauchy_R|cauchy_Q|bp_R|bp_Q|stokes_R|stokes_Q|support_R|support_Q");
    auto* convergence = app.add_subcommand("convergence", "error table over quadrature orders and radii");
    convergence->add_option("identity", identity, "reconstruction identity (default cauchy_R)");
    for (auto* sub : {selftest, kernel_eval, certify, convergence}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        RunConfig config;
        if (!config_path.empty()) load_config_file(config_path, config);
        for (const auto& [k, v] : overrides) config.set(k, v);
        if (!identity.empty()) config.identity = identity;
        config.validate();

        CommandResult result;
        std::ostringstream csv;
        if (selftest->parsed()) result = cmd_selftest(config);
        else if (kernel_eval->parsed()) result = cmd_kernel_eval(config, csv);
        else if (certify->parsed()) result = cmd_certify(config);
        else result = cmd_convergence(config, csv);

        const std::string json = result.report.dump(2) + "\n";
        const bool tabular = kernel_eval->parsed() || convergence->parsed();
        if (config.out.empty()) {
            std::cout << (tabular ? csv.str() : json);
        } else if (tabular) {
            write_text(config.out, csv.str());
            write_text(config.out + ".json", json);
        } else {
            write_text(config.out, json);
        }
        if (result.exit_code != exit_pass) {
            if (result.report.contains("failed")) std::cerr << "failed: " << result.report["failed"].dump() << "\n";
            else std::cerr << "identity check failed\n";
        }
        return result.exit_code;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return exit_hypothesis;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const SingularityError& e) {
        std::cerr << "singular argument: " << e.what() << "\n";
        return exit_usage;
    } catch (const PolicyError& e) {
        std::cerr << "truncation policy: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
