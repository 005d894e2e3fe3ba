#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "morsetile/catalog.hpp"
#include "morsetile/surface.hpp"
#include "morsetile/tiling.hpp"
#include "oracles.hpp"

using namespace morsetile;
using oracle::VSet;

namespace {

MorseTiling sphere_partition(int n) {
  return MorseTiling{catalog::sphere(n), FaceSet::all(catalog::sphere(n)),
                     boundary_partition(standard_tile(n + 1, 0)), true};
}

bool has_kind(const ValidationReport& r, Violation::Kind kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("boundary sphere partition") {
  for (int n = 1; n <= 6; ++n) {
    const MorseTiling t = sphere_partition(n);
    CHECK(validate_tiling(t).valid());
    CHECK(validate_shelling(t).valid());
    if (n <= 3) CHECK(oracle::is_tiling(t, true));
    std::vector<int> orders;
    for (const MorseTile& tile : t.tiles) orders.push_back(tile.order());
    std::vector<int> expected(static_cast<std::size_t>(n + 2));
    for (int k = 0; k <= n + 1; ++k) expected[static_cast<std::size_t>(k)] = k;
    CHECK(orders == expected);
    CriticalVector c(static_cast<std::size_t>(n + 1), 0);
    c.front() = 1;
    c.back() = 1;
    CHECK(critical_vector(t) == c);
  }
}

TEST_CASE("invalid tilings are reported") {
  MorseTiling t = sphere_partition(2);
  std::rotate(t.tiles.rbegin(), t.tiles.rbegin() + 1, t.tiles.rend());  // open triangle first
  CHECK(t.tiles.front().kind().to_string() == "C^2_2");
  const ValidationReport r = validate_shelling(t);
  CHECK_FALSE(r.valid());
  CHECK(has_kind(r, Violation::Kind::Prefix));
  CHECK(validate_tiling(t).valid());
  CHECK_FALSE(oracle::is_tiling(t, true));

  // the seven open faces of a triangle
  const SimplicialComplex tri = catalog::simplex(2);
  MorseTiling open{tri, FaceSet::all(tri), {}, false};
  for (const Simplex& f : tri.faces()) open.tiles.emplace_back(f, f.vertex_list());
  const ValidationReport ro = validate_tiling(open);
  CHECK_FALSE(ro.valid());
  CHECK(has_kind(ro, Violation::Kind::Filtration));
  CHECK_FALSE(oracle::is_tiling(open, false));

  // one closed simplex
  const MorseTiling one{tri, FaceSet::all(tri), {standard_tile(2, 0)}, true};
  CHECK(validate_shelling(one).valid());

  // overlap, gap, outside
  MorseTiling bad = sphere_partition(2);
  bad.tiles[1] = standard_tile(2, 0);
  CHECK(has_kind(validate_tiling(bad), Violation::Kind::Overlap));
  bad = sphere_partition(2);
  bad.tiles.pop_back();
  CHECK(has_kind(validate_tiling(bad), Violation::Kind::Uncovered));
  bad = sphere_partition(2);
  bad.tiles.push_back(MorseTile(Simplex{0, 1, 2, 3}, {0, 1, 2, 3}));
  CHECK(has_kind(validate_tiling(bad), Violation::Kind::OutsideAmbient));

  MorseTiling unordered = sphere_partition(2);
  unordered.ordered = false;
  CHECK_THROWS_AS(validate_shelling(unordered), Error);
}

TEST_CASE("an open edge can join two shellings") {
  const SimplicialComplex k = make_complex({{0, 1}, {2, 3}, {1, 2}});
  const MorseTiling t{k, FaceSet::all(k),
                      {MorseTile(Simplex{0, 1}, {}), MorseTile(Simplex{2, 3}, {}), MorseTile(Simplex{1, 2}, {1, 2})},
                      true};
  CHECK(validate_shelling(t).valid());
  CHECK(oracle::is_tiling(t, true));
  CHECK(critical_vector(t) == CriticalVector{2, 1});
}

TEST_CASE("validation agrees with the set-level definition on random tile lists") {
  // Random reorderings and recolourings of the sphere partition and of surface shellings.
  std::mt19937 rng(7);
  std::vector<MorseTiling> sources{sphere_partition(2), sphere_partition(3), shell_surface(catalog::octahedron())};
  for (const MorseTiling& src : sources)
    for (int trial = 0; trial < 40; ++trial) {
      MorseTiling t = src;
      std::shuffle(t.tiles.begin(), t.tiles.end(), rng);
      CHECK(validate_tiling(t).valid() == oracle::is_tiling(t, false));
      CHECK(validate_shelling(t).valid() == oracle::is_tiling(t, true));
    }
}

TEST_CASE("classical shelling orders") {
  const SimplicialComplex s = catalog::sphere(2);
  std::vector<Simplex> order = s.maximal_simplices();
  do {
    const MorseTiling t = classical_shelling_order(s, order);
    std::vector<int> orders;
    for (const MorseTile& tile : t.tiles) orders.push_back(tile.order());
    CHECK(orders == std::vector<int>{0, 1, 2, 3});
    CHECK(validate_shelling(t).valid());
  } while (std::next_permutation(order.begin(), order.end()));

  const SimplicialComplex bowtie = make_complex({{0, 1, 2}, {0, 3, 4}});
  CHECK_THROWS_WITH_AS(classical_shelling_order(bowtie, bowtie.maximal_simplices()),
                       doctest::Contains("simplex 2"), Error);
  const SimplicialComplex one = catalog::simplex(3);
  CHECK(classical_shelling_order(one, one.maximal_simplices()).tiles.size() == 1);
  CHECK_THROWS_AS(classical_shelling_order(s, {Simplex{0, 1, 2}}), Error);
}

TEST_CASE("classical shellings are exactly the basic Morse shellings") {
  for (const SimplicialComplex& k : oracle::small_corpus()) {
    std::vector<Simplex> order = k.maximal_simplices();
    std::sort(order.begin(), order.end());
    do {
      std::vector<VSet> vorder;
      for (const Simplex& s : order) vorder.push_back(s.vertex_list());
      const bool pure = oracle::classical_shelling(vorder);
      bool ok = true;
      try {
        classical_shelling_order(k, order);
      } catch (const Error&) {
        ok = false;
      }
      CHECK(ok == pure);

      // the differences, when all basic, as a tiling in this order
      std::set<VSet> covered;
      MorseTiling induced{k, FaceSet::all(k), {}, true};
      bool basic = true;
      for (const Simplex& s : order) {
        std::vector<Simplex> diff;
        for (const VSet& f : oracle::all_subsets(s.vertex_list()))
          if (covered.insert(f).second) diff.emplace_back(f);
        std::set<VSet> dset;
        for (const Simplex& f : diff) dset.insert(f.vertex_list());
        if (!oracle::is_basic_tile_set(dset)) {
          basic = false;
          break;
        }
        induced.tiles.push_back(normalize_tile(diff));
      }
      CHECK(ok == (basic && validate_shelling(induced).valid()));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("critical vector and h-table") {
  const MorseTiling t = sphere_partition(2);
  const HTable h = h_table(t);
  CHECK(h.h(2, 0) == 1);
  CHECK(h.h(2, 1) == 1);
  CHECK(h.f0_lhs == 4);
  CHECK(h.f0_rhs == 4);
  CHECK(h.f0_identity_holds());
  CHECK(h.total == 4);

  const SimplicialComplex tri = catalog::simplex(3);
  const MorseTiling one{tri, FaceSet::all(tri), {standard_tile(3, 0)}, true};
  CHECK(critical_vector(one) == CriticalVector{1, 0, 0, 0});
  CHECK(h_table(one).f0_identity_holds());

  // Euler characteristic is additive over tiles.
  for (const SimplicialComplex& k : catalog::surface_corpus()) {
    const MorseTiling s = shell_surface(k);
    long sum = 0, alt = 0;
    for (const MorseTile& tile : s.tiles) sum += tile_chi(tile);
    const CriticalVector c = critical_vector(s);
    for (std::size_t i = 0; i < c.size(); ++i) alt += (i % 2 ? -1L : 1L) * static_cast<long>(c[i]);
    CHECK(sum == euler_characteristic(s.carrier));
    CHECK(alt == euler_characteristic(k));
    CHECK(h_table(s).f0_identity_holds());
  }
}

TEST_CASE("skeleton tilings") {
  const MorseTiling t = sphere_partition(2);
  const MorseTiling s1 = skeleton_tiling(t, 1);
  CHECK(validate_tiling(s1).valid());
  CHECK(validate_shelling(s1).valid());
  CHECK(s1.ambient.f_vector() == std::vector<std::size_t>{4, 6});
  // each output tile lies in exactly one input tile
  for (const MorseTile& piece : s1.tiles) {
    int containing = 0;
    for (const MorseTile& tile : t.tiles) {
      const auto big = oracle::extension(tile);
      const auto small = oracle::extension(piece);
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) ++containing;
    }
    CHECK(containing == 1);
  }
  CHECK(skeleton_tiling(t, 2).tiles == t.tiles);
  CHECK(skeleton_tiling(t, 5).tiles == t.tiles);

  const SimplicialComplex d3 = catalog::simplex(3);
  const MorseTiling closed{d3, FaceSet::all(d3), {standard_tile(3, 0)}, true};
  for (int i = 0; i <= 3; ++i) {
    const MorseTiling sk = skeleton_tiling(closed, i);
    CHECK(validate_shelling(sk).valid());
    CHECK(oracle::is_tiling(sk, true));
  }
  for (const SimplicialComplex& k : {catalog::torus7(), catalog::projective_plane6()}) {
    const MorseTiling sh = shell_surface(k);
    for (int i = 0; i <= 2; ++i) CHECK(validate_shelling(skeleton_tiling(sh, i)).valid());
  }
}

TEST_CASE("packing") {
  auto check_packing = [](const MorseTiling& t) {
    const std::vector<Simplex> packed = pack_simplices(t);
    const Subdivision sd = barycentric_subdivision(t.ambient);
    std::set<Vertex> used;
    std::map<int, std::size_t> per_dim;
    for (const Simplex& s : packed) {
      CHECK(sd.complex.contains(s));
      CHECK(t.carrier.contains(sd.carrier(s)));
      for (Vertex v : s) CHECK(used.insert(v).second);
      ++per_dim[s.dim()];
    }
    const HTable h = h_table(t);
    for (const auto& [key, count] : h.basic)
      if (key.second <= 1) CHECK(per_dim[key.first] >= h.h(key.first, 0) + h.h(key.first, 1));
    return packed.size();
  };
  CHECK(check_packing(sphere_partition(2)) == 2);
  const SimplicialComplex tri = catalog::simplex(2);
  CHECK(check_packing(MorseTiling{tri, FaceSet::all(tri), {standard_tile(2, 0)}, true}) == 1);
  for (const SimplicialComplex& k : catalog::surface_corpus()) check_packing(shell_surface(k));
}

TEST_CASE("shelling search") {
  const SearchResult s = search_shelling(catalog::sphere(2));
  REQUIRE(s.status == SearchResult::Status::Found);
  CHECK(validate_shelling(*s.shelling).valid());
  CHECK(to_string(s.status) == "found");

  const SearchResult one = search_shelling(catalog::simplex(4));
  CHECK(one.status == SearchResult::Status::Found);
  CHECK(one.nodes <= 2);

  const SearchResult fig = search_shelling(catalog::four_triangles());
  CHECK(fig.status == SearchResult::Status::None);
  CHECK_FALSE(fig.shelling.has_value());

  const SearchResult tight = search_shelling(catalog::torus7(), 3);
  CHECK(tight.status == SearchResult::Status::BudgetExceeded);
}

TEST_CASE("four triangles: no ordering of the triangles is a Morse shelling") {
  // Independent enumeration over the 24 orders with set-level tile recognition.
  const SimplicialComplex k = catalog::four_triangles();
  std::vector<Simplex> order = k.maximal_simplices();
  std::sort(order.begin(), order.end());
  int shellings = 0;
  do {
    std::set<VSet> covered;
    bool ok = true;
    for (const Simplex& s : order) {
      std::set<VSet> diff;
      for (const VSet& f : oracle::all_subsets(s.vertex_list()))
        if (!covered.count(f)) diff.insert(f);
      if (!oracle::is_morse_tile_set(diff)) {
        ok = false;
        break;
      }
      covered.insert(diff.begin(), diff.end());
    }
    shellings += ok;
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(shellings == 0);
}

TEST_CASE("search agrees with brute force on the small corpus") {
  for (const SimplicialComplex& k : oracle::small_corpus()) {
    std::vector<Simplex> order = k.maximal_simplices();
    std::sort(order.begin(), order.end());
    bool any = false;
    do {
      std::set<VSet> covered;
      MorseTiling t{k, FaceSet::all(k), {}, true};
      bool ok = true;
      for (const Simplex& s : order) {
        std::set<VSet> diff;
        for (const VSet& f : oracle::all_subsets(s.vertex_list()))
          if (!covered.count(f)) diff.insert(f);
        if (!oracle::is_morse_tile_set(diff)) {
          ok = false;
          break;
        }
        covered.insert(diff.begin(), diff.end());
        std::vector<Simplex> faces;
        for (const VSet& f : diff) faces.emplace_back(f);
        t.tiles.push_back(normalize_tile(faces));
      }
      if (ok && oracle::is_tiling(t, true)) any = true;
    } while (!any && std::next_permutation(order.begin(), order.end()));
    const SearchResult r = search_shelling(k);
    CHECK_MESSAGE((r.status == SearchResult::Status::Found) == any, k.name());
  }
}
