#ifndef HALPHEN_REPORT_HPP
#define HALPHEN_REPORT_HPP

// JSON helpers for machine-readable reports.

#include <string>

#include <json.hpp>

#include "halphen/types.hpp"

namespace halphen::report {

inline constexpr const char* library_version = "1.0.0";

/// [re, im]
nlohmann::json complex_json(cplx z);
nlohmann::json triple_json(const Triple<cplx>& t);
nlohmann::json triple_json(const Triple<double>& t);
/// "num/den", the same coefficient format the series reports use.
std::string rational_string(const Rational& r);
nlohmann::json triple_json(const Triple<Rational>& t);

/// {"command", "version", "tolerance", "config", "passed", "result"}.
nlohmann::json envelope(const std::string& command, const nlohmann::json& config, double tolerance,
                        bool passed, nlohmann::json result);

}  // namespace halphen::report

#endif  // HALPHEN_REPORT_HPP
