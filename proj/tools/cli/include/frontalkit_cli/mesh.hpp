#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "frontalkit/germ.hpp"

namespace frontalkit::cli {

/// Triangulated image of a surface F: R^2 -> R^3 over the grid [-r, r]^2.
struct Mesh {
  std::vector<std::array<mpq_class, 3>> vertices;
  /// One-based vertex indices.
  std::vector<std::array<std::size_t, 3>> faces;
};

/// Samples F exactly on the (m+1) x (m+1) grid. Vertices are row-major with
/// y selecting the row; each grid cell contributes two triangles.
/// Throws std::invalid_argument unless F maps 2 variables to 3 components
/// with rational coefficients, r > 0 and m >= 2.
Mesh sample_surface(const PolyMap& F, const mpq_class& range, unsigned resolution);

/// OBJ text with "v" and "f" records only.
std::string to_obj(const Mesh& mesh);

}  // namespace frontalkit::cli
