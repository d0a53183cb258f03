#include "grapoly/json_io.hpp"

#include <cmath>

#include "grapoly/theta.hpp"

namespace grapoly {

nlohmann::json polynomial_to_json(const UnivariatePoly& p, const std::string& var) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json term;
    term[var] = e;
    term["coeff"] = decimal(c);
    terms.push_back(std::move(term));
  }
  return {{"vars", nlohmann::json::array({var})}, {"terms", std::move(terms)}};
}

nlohmann::json polynomial_to_json(const BivariatePoly& p, const std::string& var1,
                                  const std::string& var2) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : p.terms()) {
    nlohmann::json term;
    term[var1] = key.first;
    term[var2] = key.second;
    term["coeff"] = decimal(c);
    terms.push_back(std::move(term));
  }
  return {{"vars", nlohmann::json::array({var1, var2})}, {"terms", std::move(terms)}};
}

nlohmann::json graph_to_json(const Multigraph& g) {
  const GraphStats stats = graph_stats(g);
  return {{"vertices", stats.vertices},
          {"edges", stats.edges},
          {"components", stats.components},
          {"nullity", stats.nullity}};
}

nlohmann::json zeros_to_json(const ZeroReport& report) {
  nlohmann::json roots = nlohmann::json::array();
  for (const Complex& z : report.roots)
    roots.push_back({{"re", z.real()}, {"im", z.imag()}});
  return {{"roots", std::move(roots)},
          {"annulus",
           {{"lower", report.annulus_lower},
            {"upper", report.annulus_upper},
            {"ok", report.annulus_ok}}},
          {"max_residual", report.max_residual}};
}

}  // namespace grapoly
