#include "halphen/report.hpp"

#include <utility>

namespace halphen::report {

nlohmann::json complex_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json triple_json(const Triple<cplx>& t) {
  return nlohmann::json::array({complex_json(t[0]), complex_json(t[1]), complex_json(t[2])});
}

nlohmann::json triple_json(const Triple<double>& t) { return nlohmann::json::array({t[0], t[1], t[2]}); }

std::string rational_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

nlohmann::json triple_json(const Triple<Rational>& t) {
  return nlohmann::json::array({rational_string(t[0]), rational_string(t[1]), rational_string(t[2])});
}

nlohmann::json envelope(const std::string& command, const nlohmann::json& config, double tolerance,
                        bool passed, nlohmann::json result) {
  nlohmann::json j;
  j["command"] = command;
  j["version"] = library_version;
  j["tolerance"] = tolerance;
  j["config"] = config;
  j["passed"] = passed;
  j["result"] = std::move(result);
  return j;
}

}  // namespace halphen::report
