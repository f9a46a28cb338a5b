// SPDX-License-Identifier: Apache-2.0
#include "octaq/mesh.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace octaq;

TEST_CASE("unit sphere mesh is closed and close to the sphere") {
  QuarticCoefficients q = QuarticCoefficients::make(0, 1, 0, -1);
  Rational L = choose_box(q);
  Mesh m = extract_mesh(q, L, 32);
  REQUIRE_FALSE(m.vertices.empty());
  CHECK(is_watertight(m));
  CHECK(shell_count(m) == 1);
  double tol = 2 * L.get_d() / 32;
  for (const Vec3d& v : m.vertices)
    CHECK(std::abs(std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) - 1) <= tol);
}

TEST_CASE("interpolated vertices satisfy the first-order bound") {
  QuarticCoefficients q = QuarticCoefficients::make(1, 1, -1, frac(1, 8));
  Rational L = choose_box(q);
  const int n = 48;
  Mesh m = extract_mesh(q, L, n);
  double h = 2 * L.get_d() / n;
  auto grad_norm = [&](const Vec3d& p) {
    Vec3d g = q.gradient(p);
    return std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
  };
  for (const Vec3d& v : m.vertices) {
    // the edge through v lies in the cube of half-width h around it
    double gmax = grad_norm(v);
    for (int c = 0; c < 8; ++c)
      gmax = std::max(gmax, grad_norm({v[0] + (c & 1 ? h : -h), v[1] + (c & 2 ? h : -h),
                                       v[2] + (c & 4 ? h : -h)}));
    CHECK(std::abs(q.eval(v)) <= 2 * h * gmax);
  }
  CHECK(shell_count(m) == 2);
  CHECK(is_watertight(m));
}

TEST_CASE("nested shells inside the stellated octahedron") {
  QuarticCoefficients q = QuarticCoefficients::make(1, 0, -1, frac(1, 2));
  Mesh m = extract_mesh(q, choose_box(q), 96);
  CHECK(shell_count(m) == 2);
}

TEST_CASE("an empty surface has no mesh") {
  QuarticCoefficients q = QuarticCoefficients::make(1, 1, 1, 1);
  CHECK_THROWS_AS(extract_mesh(q, choose_box(q), 16), EmptyMesh);
}

TEST_CASE("OBJ output") {
  QuarticCoefficients q = QuarticCoefficients::make(0, 1, 0, -1);
  Mesh m = extract_mesh(q, choose_box(q), 16);
  std::ostringstream a, b;
  m.write_obj(a);
  extract_mesh(q, choose_box(q), 16).write_obj(b);
  CHECK(a.str() == b.str());
  std::istringstream in(a.str());
  std::string tag;
  std::size_t v = 0, f = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) {
      ++f;
      std::istringstream ls(line.substr(2));
      std::size_t i;
      while (ls >> i) CHECK((i >= 1 && i <= m.vertices.size()));
    }
  }
  CHECK(v == m.vertices.size());
  CHECK(f == m.faces.size());
}

TEST_CASE("the mesh vertex set is symmetric under the group") {
  QuarticCoefficients q = QuarticCoefficients::make(1, 1, -1, frac(3, 16));
  Rational L = choose_box(q);
  const int n = 32;
  Mesh m = extract_mesh(q, L, n);
  double tol = 2 * L.get_d() / n;
  // each image of a vertex lies near some vertex
  auto near = [&](const Vec3d& p) {
    for (const Vec3d& v : m.vertices)
      if (std::abs(v[0] - p[0]) + std::abs(v[1] - p[1]) + std::abs(v[2] - p[2]) <= tol) return true;
    return false;
  };
  int checked = 0;
  for (std::size_t i = 0; i < m.vertices.size(); i += 97)
    for (const auto& g : octahedral_group()) {
      CHECK(near(g.apply(m.vertices[i])));
      ++checked;
    }
  CHECK(checked > 0);
}
