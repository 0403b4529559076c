#include "frontalkit_cli/mesh.hpp"

#include <stdexcept>

#include "frontalkit_cli/decimal.hpp"

namespace frontalkit::cli {

Mesh sample_surface(const PolyMap& F, const mpq_class& range, unsigned resolution) {
  if (F.source_arity() != 2 || F.target_arity() != 3) {
    throw std::invalid_argument("mesh: need a map from 2 variables to 3 components, got " +
                                std::to_string(F.source_arity()) + " -> " +
                                std::to_string(F.target_arity()));
  }
  if (!F.has_rational_coefficients()) {
    throw std::invalid_argument("mesh: coefficients must be rational");
  }
  if (sgn(range) <= 0) throw std::invalid_argument("mesh: range must be positive");
  if (resolution < 2) throw std::invalid_argument("mesh: resolution must be at least 2");

  const unsigned m = resolution;
  Mesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(m + 1) * (m + 1));
  for (unsigned row = 0; row <= m; ++row) {
    const mpq_class y = -range + 2 * range * mpq_class(row, m);
    for (unsigned col = 0; col <= m; ++col) {
      const mpq_class x = -range + 2 * range * mpq_class(col, m);
      const std::array<Scalar, 2> pt{Scalar(x), Scalar(y)};
      std::array<mpq_class, 3> v;
      for (std::size_t i = 0; i < 3; ++i) v[i] = eval(F[i], pt).rational();
      mesh.vertices.push_back(std::move(v));
    }
  }
  const auto at = [m](unsigned row, unsigned col) {
    return static_cast<std::size_t>(row) * (m + 1) + col + 1;
  };
  for (unsigned row = 0; row < m; ++row) {
    for (unsigned col = 0; col < m; ++col) {
      const std::size_t v00 = at(row, col), v10 = at(row, col + 1);
      const std::size_t v11 = at(row + 1, col + 1), v01 = at(row + 1, col);
      mesh.faces.push_back({v00, v10, v11});
      mesh.faces.push_back({v00, v11, v01});
    }
  }
  return mesh;
}

std::string to_obj(const Mesh& mesh) {
  std::string out;
  for (const auto& v : mesh.vertices) {
    out += "v " + format_decimal(v[0]) + " " + format_decimal(v[1]) + " " + format_decimal(v[2]) + "\n";
  }
  for (const auto& f : mesh.faces) {
    out += "f " + std::to_string(f[0]) + " " + std::to_string(f[1]) + " " + std::to_string(f[2]) + "\n";
  }
  return out;
}

}  // namespace frontalkit::cli
