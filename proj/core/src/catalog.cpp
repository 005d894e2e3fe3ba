#include "morsetile/catalog.hpp"

#include <algorithm>

namespace morsetile::catalog {

namespace {

using Triangles = std::vector<std::vector<Vertex>>;

Vertex grid_vertex(int x, int y, int n) { return static_cast<Vertex>(x * n + y); }

}  // namespace

SimplicialComplex simplex(int n) {
  if (n < 0) throw Error("simplex dimension must be non-negative");
  std::vector<Vertex> vs;
  for (int i = 0; i <= n; ++i) vs.push_back(static_cast<Vertex>(i));
  return make_complex({vs}, "simplex" + std::to_string(n));
}

SimplicialComplex sphere(int n) {
  if (n < 0) throw Error("sphere dimension must be non-negative");
  const Simplex full = simplex(n + 1).maximal_simplices().front();
  return SimplicialComplex::from_maximal(full.facets(), "sphere" + std::to_string(n));
}

SimplicialComplex octahedron() {
  Triangles t;
  for (Vertex a : {0U, 1U})
    for (Vertex b : {2U, 3U})
      for (Vertex c : {4U, 5U}) t.push_back({a, b, c});
  return make_complex(t, "octahedron");
}

SimplicialComplex icosahedron() {
  auto up = [](int i) { return static_cast<Vertex>(1 + i % 5); };
  auto lo = [](int i) { return static_cast<Vertex>(6 + i % 5); };
  Triangles t;
  for (int i = 0; i < 5; ++i) {
    t.push_back({0, up(i), up(i + 1)});
    t.push_back({up(i), up(i + 1), lo(i)});
    t.push_back({up(i + 1), lo(i), lo(i + 1)});
    t.push_back({11, lo(i), lo(i + 1)});
  }
  return make_complex(t, "icosahedron");
}

SimplicialComplex torus7() {
  Triangles t;
  for (Vertex i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return make_complex(t, "torus7");
}

SimplicialComplex projective_plane6() {
  return make_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                       {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}},
                      "projective_plane6");
}

SimplicialComplex grid_torus(int m, int n) {
  if (m < 3 || n < 3) throw Error("grid torus needs both sides at least 3");
  Triangles t;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y) {
      const Vertex a = grid_vertex(x, y, n), b = grid_vertex((x + 1) % m, y, n);
      const Vertex c = grid_vertex(x, (y + 1) % n, n), d = grid_vertex((x + 1) % m, (y + 1) % n, n);
      t.push_back({a, b, d});
      t.push_back({a, c, d});
    }
  return make_complex(t, "torus" + std::to_string(m) + "x" + std::to_string(n));
}

SimplicialComplex klein_bottle(int m, int n) {
  if (m < 3 || n < 3) throw Error("Klein bottle grid needs both sides at least 3");
  auto v = [&](int x, int y) {
    y = ((y % n) + n) % n;
    if (x == m) {
      x = 0;
      y = (n - y) % n;
    }
    return grid_vertex(x, y, n);
  };
  Triangles t;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y) {
      t.push_back({v(x, y), v(x + 1, y), v(x + 1, y + 1)});
      t.push_back({v(x, y), v(x, y + 1), v(x + 1, y + 1)});
    }
  return make_complex(t, "klein" + std::to_string(m) + "x" + std::to_string(n));
}

SimplicialComplex genus2() {
  // Remove the triangle {0,1,3} from two copies and glue along its boundary.
  const Simplex glued{0, 1, 3};
  const Vertex relabel[7] = {0, 1, 7, 3, 8, 9, 10};
  const SimplicialComplex torus = torus7();
  Triangles t;
  for (const Simplex& s : torus.maximal_simplices()) {
    if (s == glued) continue;
    t.push_back(s.vertex_list());
    std::vector<Vertex> copy;
    for (Vertex v : s) copy.push_back(relabel[v]);
    t.push_back(copy);
  }
  return make_complex(t, "genus2");
}

SimplicialComplex bipyramid(int k) {
  if (k < 3) throw Error("bipyramid needs at least 3 equator vertices");
  const Vertex uk = static_cast<Vertex>(k);
  Triangles t;
  for (Vertex i = 0; i < uk; ++i) {
    t.push_back({i, (i + 1) % uk, uk});
    t.push_back({i, (i + 1) % uk, uk + 1});
  }
  return make_complex(t, "bipyramid" + std::to_string(k));
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  const auto va = a.vertices();
  const Vertex shift = va.empty() ? 0 : va.back() + 1;
  std::vector<Simplex> all = a.maximal_simplices();
  for (const Simplex& s : b.maximal_simplices()) {
    std::vector<Vertex> vs;
    for (Vertex v : s) vs.push_back(v + shift);
    all.push_back(make_sorted_simplex(std::move(vs)));
  }
  return SimplicialComplex::from_maximal(std::move(all), a.name() + "+" + b.name());
}

SimplicialComplex four_triangles() {
  return make_complex({{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}, "four_triangles");
}

std::vector<SimplicialComplex> surface_corpus() {
  return {
      sphere(2),
      octahedron(),
      icosahedron(),
      bipyramid(5),
      barycentric_subdivision(sphere(2)).complex.with_name("Sd(sphere2)"),
      torus7(),
      grid_torus(3, 3),
      grid_torus(4, 5),
      klein_bottle(3, 4),
      projective_plane6(),
      genus2(),
      disjoint_union(sphere(2), torus7()),
  };
}

}  // namespace morsetile::catalog
