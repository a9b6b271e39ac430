#include "rscyl/integrate/report.hpp"

#include <charconv>
#include <cmath>

namespace rscyl {

namespace {

nlohmann::json multivector_to_json(const Multivector<double>& m) {
    nlohmann::json out = nlohmann::json::array();
    for (double c : m.coeffs()) out.push_back(c);
    return out;
}

nlohmann::json exponent_to_json(const Exponent& a, int n) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i < n; ++i) out.push_back(static_cast<int>(a[static_cast<std::size_t>(i)]));
    return out;
}

} // namespace

nlohmann::json polynomial_to_json(const FloatPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    if (p.degree() < 0) return out;
    const auto& basis = MonomialBasis::get(p.dim(), p.degree());
    for (int i = 0; i < basis.size(); ++i)
        out.push_back({{"exponent", exponent_to_json(basis[i], p.dim())},
                       {"coefficients", multivector_to_json(p.coefficient(basis[i]))}});
    return out;
}

nlohmann::json truncation_to_json(const TruncationReport& t) {
    return {{"M", t.M},
            {"bound", t.bound},
            {"terms_summed", t.terms_summed},
            {"rdom", t.rdom},
            {"zsup", t.zsup},
            {"zlip", t.zlip},
            {"bound_kind", t.bound_kind}};
}

nlohmann::json kernel_to_json(const KernelPoly& k) {
    nlohmann::json out = nlohmann::json::array();
    const auto& bu = MonomialBasis::get(k.dim(), k.u_degree());
    const auto& bv = MonomialBasis::get(k.dim(), k.v_degree());
    for (int iu = 0; iu < k.u_count(); ++iu)
        for (int iv = 0; iv < k.v_count(); ++iv)
            out.push_back({{"u_exponent", exponent_to_json(bu[iu], k.dim())},
                           {"v_exponent", exponent_to_json(bv[iv], k.dim())},
                           {"coefficients", multivector_to_json(k.coefficient(iu, iv))}});
    return out;
}

nlohmann::json reconstruction_report(const Reconstruction& r, const nlohmann::json& params, double runtime_ms) {
    return {{"identity", r.identity},
            {"params", params},
            {"reconstructed_coeffs", polynomial_to_json(r.value)},
            {"reference_coeffs", polynomial_to_json(r.reference)},
            {"boundary_coeffs", polynomial_to_json(r.boundary)},
            {"volume_coeffs", polynomial_to_json(r.volume)},
            {"abs_err", r.abs_error},
            {"rel_err", r.rel_error},
            {"truncation_report", truncation_to_json(r.truncation)},
            {"surface_nodes", r.surface_nodes},
            {"volume_nodes", r.volume_nodes},
            {"patch_radius", r.patch_radius},
            {"runtime_ms", runtime_ms}};
}

nlohmann::json stokes_report(const std::string& identity, const StokesResult& r, const nlohmann::json& params,
                             double runtime_ms) {
    return {{"identity", identity},
            {"params", params},
            {"volume_side", multivector_to_json(r.volume)},
            {"boundary_side", multivector_to_json(r.boundary)},
            {"residual", r.residual},
            {"rel_err", r.scale > 0.0 ? r.residual / r.scale : r.residual},
            {"runtime_ms", runtime_ms}};
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

} // namespace rscyl
