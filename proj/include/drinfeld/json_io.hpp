#pragma once

#include <json.hpp>

#include "drinfeld/linalg.hpp"

namespace drinfeld {

// Ascending coefficient arrays; bare integers when e == 1, residue arrays
// otherwise. The zero polynomial is [].
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const XPoly& p);
nlohmann::json to_json(const PolyMatrix& m);
nlohmann::json to_json(const NewtonPolygon& np);

Poly poly_from_json(const Field& f, const nlohmann::json& j);
XPoly xpoly_from_json(const Field& f, const nlohmann::json& j);
PolyMatrix matrix_from_json(const Field& f, const nlohmann::json& j);

}  // namespace drinfeld
