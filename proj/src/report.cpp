#include "fockalg/report.hpp"

namespace fockalg {

Json DiagReport::to_json() const {
  Json t = Json::object();
  for (const auto& [name, v] : terms) t[name] = v;
  return Json{{"terms", t}, {"residual_norm", residual_norm}, {"dim", dim}, {"mode", mode}};
}

Json poly_to_json(const NormalPoly& p) {
  Json arr = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    arr.push_back(Json{{"m", it->first.first},
                       {"n", it->first.second},
                       {"re", it->second.real()},
                       {"im", it->second.imag()}});
  }
  return arr;
}

NormalPoly poly_from_json(const Json& j) {
  NormalPoly p;
  for (const auto& t : j) {
    p.add_term(t.at("m").get<int>(), t.at("n").get<int>(),
               Complex(t.at("re").get<double>(), t.at("im").get<double>()));
  }
  return p;
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  return Json{{"dim", m.rows()}, {"entries", entries}};
}

Matrix matrix_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != dim * dim)
    throw std::invalid_argument("matrix_from_json: entry count mismatch");
  Matrix m(dim, dim);
  int idx = 0;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c, ++idx) {
      m(r, c) = Complex(entries[idx][0].get<double>(), entries[idx][1].get<double>());
    }
  }
  return m;
}

}  // namespace fockalg
