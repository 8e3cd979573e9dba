#include "drinfeld/json_io.hpp"

namespace drinfeld {

using nlohmann::json;

json to_json(const Poly& p) {
  json out = json::array();
  for (Fq c : p.coeffs()) {
    if (p.field()->is_prime())
      out.push_back(static_cast<int>(c));
    else
      out.push_back(p.field()->coords(c));
  }
  return out;
}

json to_json(const XPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.field() ? to_json(c) : json::array());
  return out;
}

json to_json(const PolyMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).field() ? to_json(m(i, j)) : json::array());
    out.push_back(row);
  }
  return out;
}

json to_json(const NewtonPolygon& np) {
  json segs = json::array();
  for (const auto& s : np.segments)
    segs.push_back({{"slope_num", s.slope.num()}, {"slope_den", s.slope.den()}, {"length", s.length}});
  return {{"segments", segs}, {"infinite", np.infinite}};
}

Poly poly_from_json(const Field& f, const json& j) {
  std::vector<Fq> c;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      c.push_back(f.from_int(x.get<long long>()));
    } else {
      c.push_back(f.from_coords(x.get<std::vector<int>>()));
    }
  }
  return Poly(f, std::move(c));
}

XPoly xpoly_from_json(const Field& f, const json& j) {
  std::vector<Poly> c;
  for (const auto& x : j) c.push_back(poly_from_json(f, x));
  return XPoly(std::move(c));
}

PolyMatrix matrix_from_json(const Field& f, const json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j[0].size()) : 0;
  PolyMatrix m = zero_matrix(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m(i, k) = poly_from_json(f, j[i][k]);
  return m;
}

}  // namespace drinfeld
