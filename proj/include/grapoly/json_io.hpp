#ifndef GRAPOLY_JSON_IO_HPP
#define GRAPOLY_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "grapoly/multigraph.hpp"
#include "grapoly/omega.hpp"
#include "grapoly/polynomial.hpp"

namespace grapoly {

// Coefficients are emitted as decimal strings so no integer width is lost.
// Terms are sorted by ascending exponents, which makes serialization
// deterministic.
nlohmann::json polynomial_to_json(const UnivariatePoly& p, const std::string& var);
nlohmann::json polynomial_to_json(const BivariatePoly& p, const std::string& var1,
                                  const std::string& var2);

nlohmann::json graph_to_json(const Multigraph& g);
nlohmann::json zeros_to_json(const ZeroReport& report);

}  // namespace grapoly

#endif
