// SPDX-License-Identifier: Apache-2.0
#include "octaq/mesh.hpp"

#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace octaq {

namespace {

// Bourke corner numbering as (di, dj, dk).
constexpr int kCorner[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                               {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
constexpr int kEdge[12][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                              {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};

}  // namespace

void Mesh::write_obj(std::ostream& os) const {
  char buf[128];
  for (const auto& v : vertices) {
    std::snprintf(buf, sizeof buf, "v %.9g %.9g %.9g\n", v[0], v[1], v[2]);
    os << buf;
  }
  for (const auto& f : faces) os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

Mesh extract_mesh(const SignGrid& g) {
  Mesh mesh;
  const int n = g.n;
  std::unordered_map<std::uint64_t, std::uint32_t> vertex_of_edge;

  auto vertex = [&](int i, int j, int k, int e) -> std::uint32_t {
    const int* ca = kCorner[kEdge[e][0]];
    const int* cb = kCorner[kEdge[e][1]];
    int a[3] = {i + ca[0], j + ca[1], k + ca[2]};
    int b[3] = {i + cb[0], j + cb[1], k + cb[2]};
    int axis = a[0] != b[0] ? 0 : (a[1] != b[1] ? 1 : 2);
    const int* lo = a[axis] < b[axis] ? a : b;
    const std::uint64_t key = static_cast<std::uint64_t>(g.index(lo[0], lo[1], lo[2])) * 3 + axis;
    auto it = vertex_of_edge.find(key);
    if (it != vertex_of_edge.end()) return it->second;
    const double va = g.values[g.index(a[0], a[1], a[2])];
    const double vb = g.values[g.index(b[0], b[1], b[2])];
    const double t = va / (va - vb);
    Vec3d p;
    for (int d = 0; d < 3; ++d) {
      const double pa = g.coord(a[d]), pb = g.coord(b[d]);
      p[d] = pa + t * (pb - pa);
    }
    const auto id = static_cast<std::uint32_t>(mesh.vertices.size());
    mesh.vertices.push_back(p);
    vertex_of_edge.emplace(key, id);
    return id;
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int cube = 0;
        for (int c = 0; c < 8; ++c)
          if (g.signs[g.index(i + kCorner[c][0], j + kCorner[c][1], k + kCorner[c][2])] < 0)
            cube |= 1 << c;
        if (cube == 0 || cube == 255) continue;
        const std::int8_t* tri = detail::kTriTable[cube];
        for (int t = 0; tri[t] != -1; t += 3)
          mesh.faces.push_back({vertex(i, j, k, tri[t]), vertex(i, j, k, tri[t + 1]),
                                vertex(i, j, k, tri[t + 2])});
      }
  if (mesh.faces.empty()) throw EmptyMesh();
  return mesh;
}

Mesh extract_mesh(const QuarticCoefficients& q, const Rational& L, int n) {
  return extract_mesh(evaluate_grid(q, L, n));
}

bool is_watertight(const Mesh& m) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> uses;
  for (const auto& f : m.faces)
    for (int e = 0; e < 3; ++e) {
      std::uint32_t a = f[e], b = f[(e + 1) % 3];
      if (a > b) std::swap(a, b);
      ++uses[{a, b}];
    }
  for (const auto& [edge, count] : uses)
    if (count != 2) return false;
  return !uses.empty();
}

int shell_count(const Mesh& m) {
  std::vector<std::uint32_t> parent(m.vertices.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : m.faces)
    for (int e = 1; e < 3; ++e) {
      auto a = find(f[0]), b = find(f[e]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::set<std::uint32_t> roots;
  for (const auto& f : m.faces) roots.insert(find(f[0]));
  return static_cast<int>(roots.size());
}

}  // namespace octaq
