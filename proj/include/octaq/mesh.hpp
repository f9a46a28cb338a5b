// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "octaq/oracle.hpp"

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace octaq {

class EmptyMesh : public std::runtime_error {
 public:
  EmptyMesh() : std::runtime_error("empty mesh: no zero-cell in the grid") {}
};

struct Mesh {
  std::vector<Vec3d> vertices;
  std::vector<std::array<std::uint32_t, 3>> faces;

  void write_obj(std::ostream& os) const;
};

Mesh extract_mesh(const SignGrid& grid);
Mesh extract_mesh(const QuarticCoefficients& q, const Rational& L, int n);

// Every undirected edge is used by exactly two faces.
bool is_watertight(const Mesh& m);
// Connected pieces of the face graph.
int shell_count(const Mesh& m);

namespace detail {
extern const std::int8_t kTriTable[256][16];
}

}  // namespace octaq
