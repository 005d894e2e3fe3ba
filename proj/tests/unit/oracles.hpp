#pragma once

// Brute-force reference computations shared by the tests. Everything here
// works on plain vertex sets and avoids the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>
#include <vector>

#include "morsetile/complex.hpp"
#include "morsetile/tile.hpp"
#include "morsetile/tiling.hpp"

namespace oracle {

using morsetile::Simplex;
using morsetile::Vertex;
using VSet = std::vector<Vertex>;  // sorted

inline bool subset(const VSet& a, const VSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline std::vector<VSet> all_subsets(const VSet& s) {
  std::vector<VSet> out;
  const std::uint64_t n = s.size();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    VSet f;
    for (std::uint64_t i = 0; i < n; ++i)
      if (m >> i & 1) f.push_back(s[i]);
    out.push_back(f);
  }
  return out;
}

/// Faces phi of `closure` with A ⊆ phi and phi ⊄ tau.
inline std::set<VSet> extension(const VSet& closure, const VSet& witnesses, const VSet* tau) {
  std::set<VSet> out;
  for (const VSet& f : all_subsets(closure)) {
    if (!subset(witnesses, f)) continue;
    if (tau && subset(f, *tau)) continue;
    out.insert(f);
  }
  return out;
}

inline std::set<VSet> extension(const morsetile::MorseTile& t) {
  if (t.is_empty()) return {};
  const VSet tau = t.removed_face() ? t.removed_face()->vertex_list() : VSet{};
  return extension(t.closure().vertex_list(), t.witnesses(), t.removed_face() ? &tau : nullptr);
}

inline std::set<VSet> as_sets(const std::vector<Simplex>& faces) {
  std::set<VSet> out;
  for (const Simplex& f : faces) out.insert(f.vertex_list());
  return out;
}

inline long chi(const std::set<VSet>& faces) {
  long c = 0;
  for (const VSet& f : faces) c += (f.size() % 2 == 1) ? 1 : -1;
  return c;
}

/// Set-level cone: the join with the apex, plus optionally the apex and the base.
inline std::set<VSet> cone(const std::set<VSet>& base, Vertex c, bool keep_apex, bool keep_base) {
  std::set<VSet> out;
  if (keep_apex) out.insert({c});
  for (const VSet& f : base) {
    VSet g = f;
    g.insert(std::lower_bound(g.begin(), g.end(), c), c);
    out.insert(g);
    if (keep_base) out.insert(f);
  }
  return out;
}

/// Faces of the closed simplices in `faces`.
inline std::set<VSet> closure_of(const std::set<VSet>& faces) {
  std::set<VSet> out;
  for (const VSet& f : faces)
    for (const VSet& g : all_subsets(f)) out.insert(g);
  return out;
}

/// Every union of tiles of dimension > j is the trace on the
/// carrier of the subcomplex it generates.
inline bool filtration_holds(const std::vector<std::set<VSet>>& tiles, const std::vector<int>& dims,
                             const std::set<VSet>& carrier) {
  int top = -1;
  for (int d : dims) top = std::max(top, d);
  for (int j = -1; j < top; ++j) {
    std::set<VSet> u;
    for (std::size_t i = 0; i < tiles.size(); ++i)
      if (dims[i] > j) u.insert(tiles[i].begin(), tiles[i].end());
    for (const VSet& f : closure_of(u))
      if (carrier.count(f) && !u.count(f)) return false;
  }
  return true;
}

/// Partition plus filtration, optionally on every prefix.
inline bool is_tiling(const morsetile::MorseTiling& t, bool prefixes) {
  const std::set<VSet> carrier = as_sets(t.carrier.faces());
  std::vector<std::set<VSet>> tiles;
  std::vector<int> dims;
  std::set<VSet> seen;
  for (const morsetile::MorseTile& tile : t.tiles) {
    tiles.push_back(extension(tile));
    dims.push_back(tile.dim());
    for (const VSet& f : tiles.back()) {
      if (!carrier.count(f) || !seen.insert(f).second) return false;
    }
  }
  if (seen != carrier) return false;
  if (!prefixes) return filtration_holds(tiles, dims, carrier);
  for (std::size_t i = 1; i <= tiles.size(); ++i) {
    std::vector<std::set<VSet>> pt(tiles.begin(), tiles.begin() + static_cast<long>(i));
    std::vector<int> pd(dims.begin(), dims.begin() + static_cast<long>(i));
    std::set<VSet> pc;
    for (const auto& s : pt) pc.insert(s.begin(), s.end());
    // A prefix must itself be a trace: closed within the carrier.
    for (const VSet& f : closure_of(pc))
      if (carrier.count(f) && !pc.count(f)) return false;
    if (!filtration_holds(pt, pd, pc)) return false;
  }
  return true;
}

/// Classical shelling test: each simplex meets the earlier ones in an empty
/// set or in a pure complex of codimension one.
inline bool classical_shelling(const std::vector<VSet>& order) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::set<VSet> inter;
    for (std::size_t j = 0; j < i; ++j) {
      VSet m;
      std::set_intersection(order[i].begin(), order[i].end(), order[j].begin(), order[j].end(),
                            std::back_inserter(m));
      if (!m.empty()) inter.insert(m);
    }
    // maximal faces of the intersection
    for (const VSet& f : inter) {
      bool maximal = true;
      for (const VSet& g : inter)
        if (g.size() > f.size() && subset(f, g)) maximal = false;
      if (maximal && f.size() + 1 != order[i].size()) return false;
    }
  }
  return true;
}

/// Chains phi_0 < ... < phi_n of non-empty subsets of an (n)-simplex.
inline std::size_t count_full_flags(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n + 1; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

/// h-vector of a pure (d-1)-dimensional complex from f_{-1}, f_0, ..., f_{d-1}.
inline std::vector<long> h_vector(const std::vector<long>& f_with_empty) {
  const int d = static_cast<int>(f_with_empty.size()) - 1;
  auto binom = [](long n, long k) {
    if (k < 0 || k > n) return 0L;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  std::vector<long> h(static_cast<std::size_t>(d + 1), 0);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i)
      h[static_cast<std::size_t>(k)] += ((k - i) % 2 ? -1 : 1) * binom(d - i, k - i) * f_with_empty[static_cast<std::size_t>(i)];
  return h;
}

/// Every Morse tile on {0..n}: all witness sets, and all removed faces
/// containing them, up to relabelling by the standard forms.
inline std::vector<morsetile::MorseTile> standard_tiles(int n) {
  std::vector<morsetile::MorseTile> out;
  for (int k = 0; k <= n + 1; ++k) out.push_back(morsetile::standard_tile(n, k));
  for (int l = 0; l <= n - 2; ++l)
    for (int k = 0; k <= l + 1; ++k) out.push_back(morsetile::standard_morse_tile(n, k, l));
  return out;
}

/// Whether `faces` is the extension of some Morse tile on its hull, by trying
/// every witness set and removed face.
inline bool is_morse_tile_set(const std::set<VSet>& faces) {
  if (faces.empty()) return false;
  VSet hull;
  for (const VSet& f : faces) {
    VSet u;
    std::set_union(hull.begin(), hull.end(), f.begin(), f.end(), std::back_inserter(u));
    hull = u;
  }
  const std::vector<VSet> subsets = all_subsets(hull);
  std::vector<VSet> witness_sets = subsets;
  witness_sets.push_back({});
  for (const VSet& a : witness_sets) {
    if (extension(hull, a, nullptr) == faces) return true;
    for (const VSet& tau : subsets)
      if (tau.size() < hull.size() && subset(a, tau) && extension(hull, a, &tau) == faces) return true;
  }
  return false;
}

/// Whether `faces` is a basic tile: an extension with no extra removed face.
inline bool is_basic_tile_set(const std::set<VSet>& faces) {
  if (faces.empty()) return false;
  VSet hull;
  for (const VSet& f : faces) {
    VSet u;
    std::set_union(hull.begin(), hull.end(), f.begin(), f.end(), std::back_inserter(u));
    hull = u;
  }
  std::vector<VSet> witness_sets = all_subsets(hull);
  witness_sets.push_back({});
  for (const VSet& a : witness_sets)
    if (extension(hull, a, nullptr) == faces) return true;
  return false;
}

/// Small complexes with at most seven maximal simplices.
inline std::vector<morsetile::SimplicialComplex> small_corpus() {
  using morsetile::make_complex;
  return {
      make_complex({{0, 1, 2}}, "triangle"),
      make_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, "tetrahedron boundary"),
      make_complex({{0, 1, 2}, {0, 3, 4}}, "bowtie"),
      make_complex({{0, 1, 2}, {2, 3}}, "triangle with a tail"),
      make_complex({{0, 1, 2}, {1, 2, 3}}, "square"),
      make_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}}, "fan"),
      make_complex({{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}, "four triangles"),
      make_complex({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, "graph"),
      make_complex({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 0}, {5, 0, 1}}, "Moebius band"),
      make_complex({{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {2, 0, 5}, {0, 5, 3}}, "annulus"),
      make_complex({{0, 1, 2, 3}, {1, 2, 3, 4}, {4, 5}, {5, 6, 7}}, "mixed"),
      make_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}, "book"),
      make_complex({{0, 1, 2}, {0, 2, 3}, {0, 1, 3}, {1, 2, 3}, {3, 4}, {4, 5, 6}, {4, 6, 7}}, "sphere on a string"),
  };
}

}  // namespace oracle
