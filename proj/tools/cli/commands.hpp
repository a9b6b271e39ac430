#pragma once

#include "cli/config.hpp"

#include <iosfwd>

namespace rscyl::cli {

enum ExitCode : int { exit_pass = 0, exit_failure = 1, exit_usage = 2, exit_hypothesis = 3 };

struct CommandResult {
    int exit_code = exit_pass;
    nlohmann::json report;
};

struct SelftestCheck {
    std::string name;
    long trials = 0;
    long failures = 0;
    bool randomized = false;
    std::string first_failure;
};

// Exact clifford/polyspace identities for the given dimensions: `trials`
// random algebra trials per check and dimension, `poly_trials` random
// polynomial trials (0 skips the polynomial-space checks). fault =
// "conjugate-sign" swaps in a conjugation with a flipped grade-2 sign.
std::vector<SelftestCheck> run_selftest_checks(const std::vector<int>& dims, int trials, int poly_trials,
                                               std::uint64_t seed, const std::string& fault);

CommandResult cmd_selftest(const RunConfig& config);
// Writes CSV coefficients to `csv` and returns the JSON sidecar.
CommandResult cmd_kernel_eval(const RunConfig& config, std::ostream& csv);
CommandResult cmd_certify(const RunConfig& config);
// Writes the CSV table to `csv`.
CommandResult cmd_convergence(const RunConfig& config, std::ostream& csv);

// Test fields used by certify for the given identity name.
TestField certify_field(const RunConfig& config, const std::string& identity);

} // namespace rscyl::cli
