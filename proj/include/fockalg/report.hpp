#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "fockalg/fock.hpp"
#include "fockalg/poly.hpp"

namespace fockalg {

using Json = nlohmann::json;

/// Shared diagnostic report: named matrix norms plus the headline residual.
/// The raw residual matrix and symbolic pieces are carried along for
/// stability analysis across dimensions; only the norms serialize.
struct DiagReport {
  std::string mode;
  int dim = 0;
  std::map<std::string, double> terms;
  double residual_norm = 0.0;

  Matrix residual;
  std::map<std::string, NormalPoly> polys;
  int exact_upto = -1;

  Json to_json() const;
};

/// [{m, n, re, im} ...] with highest creation power first.
Json poly_to_json(const NormalPoly& p);
NormalPoly poly_from_json(const Json& j);

/// {"dim": N, "entries": [[re, im], ...]} in row-major order.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

}  // namespace fockalg
