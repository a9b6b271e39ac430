#pragma once

#include "rscyl/integrate/identities.hpp"

#include <json.hpp>

#include <string>

namespace rscyl {

// [{"exponent": [...], "coefficients": [2^n values]}, ...] over the degree basis.
nlohmann::json polynomial_to_json(const FloatPoly& p);
nlohmann::json truncation_to_json(const TruncationReport& t);
nlohmann::json kernel_to_json(const KernelPoly& k);

// {identity, params, reconstructed_coeffs, reference_coeffs, abs_err, rel_err,
//  truncation_report, runtime_ms, ...}
nlohmann::json reconstruction_report(const Reconstruction& r, const nlohmann::json& params, double runtime_ms);
nlohmann::json stokes_report(const std::string& identity, const StokesResult& r, const nlohmann::json& params,
                             double runtime_ms);

// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

} // namespace rscyl
