#pragma once

#include "rscyl/integrate/identities.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rscyl::cli {

// Resolved run configuration: config-file entries first, then flag overrides.
struct RunConfig {
    int n = 3;
    int k = 1;
    int l = 1;
    int p = 0;
    Family family = Family::R;
    std::optional<std::vector<double>> box_center;
    std::optional<std::vector<double>> box_half_widths;
    std::optional<std::vector<double>> y;
    int surface_order = 16;
    int volume_order = 16;
    int radial_order = 16;
    int sphere_order = 16;
    std::optional<int> trunc_radius = 30;
    std::optional<double> trunc_target;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string out;
    std::optional<double> tolerance;
    std::string identity = "cauchy_R";
    std::vector<double> x;
    std::vector<double> u;
    std::vector<double> v;
    std::vector<int> sweep_orders{16};
    std::vector<int> sweep_radii{5, 10, 20, 40};
    std::string fault;

    // Applies one key = value entry; unknown keys and malformed values are usage errors.
    void set(const std::string& key, const std::string& value);

    PeriodicKernelSpec kernel_spec() const;
    BoxRegion box() const;
    std::vector<double> point() const;  // evaluation point y
    TruncationPolicy truncation() const;
    IdentitySetup identity_setup() const;

    // Re-validates the kernel spec and the box.
    void validate() const;
    nlohmann::json to_json() const;
};

// Reads `key = value` lines; '#' starts a comment.
void load_config_file(const std::string& path, RunConfig& config);

std::vector<double> parse_doubles(const std::string& text);
std::vector<int> parse_ints(const std::string& text);

} // namespace rscyl::cli
