#include "cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rscyl::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    T value{};
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw UsageError("config key '" + key + "': cannot parse '" + text + "'");
    return value;
}

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number<T>(key, item));
    if (out.empty()) throw UsageError("config key '" + key + "': empty list");
    return out;
}

std::vector<double> padded(std::vector<double> v, int n) {
    v.resize(static_cast<std::size_t>(n), 0.0);
    return v;
}

} // namespace

std::vector<double> parse_doubles(const std::string& text) { return parse_list<double>("list", text); }
std::vector<int> parse_ints(const std::string& text) { return parse_list<int>("list", text); }

void RunConfig::set(const std::string& raw_key, const std::string& value) {
    std::string key = trim(raw_key);
    for (char& c : key)
        if (c == '-') c = '_';
    if (key == "n") n = parse_number<int>(key, value);
    else if (key == "k") k = parse_number<int>(key, value);
    else if (key == "l") l = parse_number<int>(key, value);
    else if (key == "p") p = parse_number<int>(key, value);
    else if (key == "family") {
        const std::string f = trim(value);
        if (f == "R") family = Family::R;
        else if (f == "Q") family = Family::Q;
        else throw UsageError("family must be R or Q, got '" + f + "'");
    } else if (key == "box") {
        // "side" (cube about the origin) or "c1,..,cn:h1,..,hn"
        const auto colon = value.find(':');
        if (colon == std::string::npos) {
            const double side = parse_number<double>(key, value);
            box_center.reset();
            box_half_widths = std::vector<double>{0.5 * side};
        } else {
            box_center = parse_list<double>(key, value.substr(0, colon));
            box_half_widths = parse_list<double>(key, value.substr(colon + 1));
        }
    } else if (key == "box_center") box_center = parse_list<double>(key, value);
    else if (key == "box_half_widths") box_half_widths = parse_list<double>(key, value);
    else if (key == "y") y = parse_list<double>(key, value);
    else if (key == "order") surface_order = volume_order = radial_order = parse_number<int>(key, value);
    else if (key == "surface_order") surface_order = parse_number<int>(key, value);
    else if (key == "volume_order") volume_order = parse_number<int>(key, value);
    else if (key == "radial_order") radial_order = parse_number<int>(key, value);
    else if (key == "sphere_order") sphere_order = parse_number<int>(key, value);
    else if (key == "trunc_radius") {
        trunc_radius = parse_number<int>(key, value);
        trunc_target.reset();
    } else if (key == "trunc_target") {
        trunc_target = parse_number<double>(key, value);
        trunc_radius.reset();
    } else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
    else if (key == "threads") threads = parse_number<int>(key, value);
    else if (key == "out") out = trim(value);
    else if (key == "tolerance") tolerance = parse_number<double>(key, value);
    else if (key == "identity") identity = trim(value);
    else if (key == "x") x = parse_list<double>(key, value);
    else if (key == "u") u = parse_list<double>(key, value);
    else if (key == "v") v = parse_list<double>(key, value);
    else if (key == "sweep_orders") sweep_orders = parse_list<int>(key, value);
    else if (key == "sweep_radii") sweep_radii = parse_list<int>(key, value);
    else if (key == "fault") fault = trim(value);
    else throw UsageError("unknown config key '" + key + "'");
}

PeriodicKernelSpec RunConfig::kernel_spec() const { return {family, n, k, l, p}; }

BoxRegion RunConfig::box() const {
    VectorN<double> c(box_center ? *box_center : std::vector<double>(static_cast<std::size_t>(n), 0.0));
    if (c.dim() != n) throw UsageError("box center needs " + std::to_string(n) + " components");
    std::vector<double> h = box_half_widths ? *box_half_widths : std::vector<double>{0.45};
    if (h.size() == 1) h.assign(static_cast<std::size_t>(n), h.front());
    if (static_cast<int>(h.size()) != n) throw UsageError("box half-widths need 1 or " + std::to_string(n) + " components");
    BoxRegion b{c, h};
    b.validate();
    return b;
}

std::vector<double> RunConfig::point() const {
    if (y) {
        if (static_cast<int>(y->size()) != n) throw UsageError("y needs " + std::to_string(n) + " components");
        return *y;
    }
    const BoxRegion b = box();
    std::vector<double> out = padded({0.1, -0.2, 0.15}, n);
    // default offset scaled to the box, about the center
    for (int j = 0; j < n; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        out[uj] = b.center[uj] + out[uj] * b.half_widths[uj] / 0.45;
    }
    return out;
}

TruncationPolicy RunConfig::truncation() const {
    if (trunc_radius) return TruncationPolicy::with_radius(*trunc_radius);
    if (trunc_target) return TruncationPolicy::with_target(*trunc_target);
    throw UsageError("truncation needs trunc_radius or trunc_target");
}

IdentitySetup RunConfig::identity_setup() const {
    IdentitySetup s;
    s.spec = kernel_spec();
    s.box = box();
    s.y = point();
    s.surface_order = surface_order;
    s.volume_order = volume_order;
    s.patch = SingularPatch{radial_order, sphere_order, 0.0};
    s.truncation = truncation();
    s.threads = threads;
    return s;
}

void RunConfig::validate() const {
    kernel_spec().validate();
    box();
    point();
    if (threads < 1) throw UsageError("threads must be >= 1");
    if (trunc_radius && *trunc_radius < 0) throw UsageError("trunc_radius must be >= 0");
    if (trunc_target && !(*trunc_target > 0.0)) throw UsageError("trunc_target must be positive");
    for (int o : {surface_order, volume_order, radial_order, sphere_order})
        if (o < 2 || o > 64) throw UsageError("quadrature orders must lie in [2, 64]");
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["k"] = k;
    j["l"] = l;
    j["p"] = p;
    j["family"] = family_name(family);
    const BoxRegion b = box();
    j["box_center"] = std::vector<double>(b.center.components().begin(), b.center.components().end());
    j["box_half_widths"] = b.half_widths;
    j["y"] = point();
    j["surface_order"] = surface_order;
    j["volume_order"] = volume_order;
    j["radial_order"] = radial_order;
    j["sphere_order"] = sphere_order;
    j["trunc_radius"] = trunc_radius ? nlohmann::json(*trunc_radius) : nlohmann::json(nullptr);
    j["trunc_target"] = trunc_target ? nlohmann::json(*trunc_target) : nlohmann::json(nullptr);
    j["seed"] = seed;
    j["tolerance"] = tolerance ? nlohmann::json(*tolerance) : nlohmann::json(nullptr);
    j["identity"] = identity;
    if (!x.empty()) j["x"] = x;
    if (!u.empty()) j["u"] = u;
    if (!v.empty()) j["v"] = v;
    j["sweep_orders"] = sweep_orders;
    j["sweep_radii"] = sweep_radii;
    return j;
}

void load_config_file(const std::string& path, RunConfig& config) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        config.set(line.substr(0, eq), line.substr(eq + 1));
    }
}

} // namespace rscyl::cli
