#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "morsetile/catalog.hpp"
#include "morsetile/field.hpp"
#include "morsetile/surface.hpp"
#include "oracles.hpp"

using namespace morsetile;
using oracle::VSet;

namespace {

MorseTiling sphere_partition(int n) {
  return MorseTiling{catalog::sphere(n), FaceSet::all(catalog::sphere(n)),
                     boundary_partition(standard_tile(n + 1, 0)), true};
}

MorseTiling single(const MorseTile& t) {
  const SimplicialComplex k = SimplicialComplex::from_maximal({t.closure()});
  return tiling_from_tiles(k, {t}, true);
}

// Three order-one edges around the boundary of a triangle.
MorseTiling rotating_triangle() {
  const SimplicialComplex k = catalog::sphere(1);
  return MorseTiling{k, FaceSet::all(k),
                     {MorseTile(Simplex{0, 1}, {0}), MorseTile(Simplex{1, 2}, {1}), MorseTile(Simplex{0, 2}, {2})},
                     false};
}

// Each face has at most one coface below it and one face above it, by direct counting.
bool forman_conditions(const DiscreteMorseFunction& f) {
  for (const auto& [s, fs] : f.values) {
    int up = 0, down = 0;
    for (const auto& [t, ft] : f.values) {
      if (t.dim() == s.dim() + 1 && s.is_face_of(t) && ft <= fs) ++up;
      if (t.dim() == s.dim() - 1 && t.is_face_of(s) && ft >= fs) ++down;
    }
    if (up > 1 || down > 1) return false;
  }
  return true;
}

// Cycle search on sigma -> facets of W(sigma) other than sigma, by repeated
// removal of nodes without successors.
bool has_cycle(const DiscreteVectorField& w) {
  std::map<Simplex, std::set<Simplex>> succ;
  for (const auto& [lo, hi] : w.pairs())
    for (const Simplex& f : hi.facets())
      if (f != lo) succ[lo].insert(f);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = succ.begin(); it != succ.end();) {
      std::erase_if(it->second, [&](const Simplex& s) { return !succ.count(s); });
      if (it->second.empty()) {
        it = succ.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return !succ.empty();
}

}  // namespace

TEST_CASE("tile fields") {
  for (int n = 0; n <= 6; ++n)
    for (const MorseTile& t : oracle::standard_tiles(n)) {
      CAPTURE(t.to_string());
      const DiscreteVectorField w = tile_field(t);
      CHECK(validate_field(w).valid());
      CHECK_FALSE(find_closed_vpath(w).has_value());
      CHECK_FALSE(has_cycle(w));
      for (const auto& [lo, hi] : w.pairs()) {
        CHECK(t.contains(lo));
        CHECK(t.contains(hi));
      }
      const std::vector<Simplex> crit = critical_cells(w);
      CHECK(t.face_count() == crit.size() + 2 * w.size());
      if (t.is_critical()) {
        REQUIRE(crit.size() == 1);
        CHECK(crit[0].dim() == t.index());
      } else {
        CHECK(crit.empty());
      }
    }

  const DiscreteVectorField closed = tile_field(standard_tile(2, 0));
  CHECK(closed.size() == 3);
  CHECK(critical_cells(closed).size() == 1);
  CHECK(critical_cells(closed)[0].dim() == 0);

  const DiscreteVectorField c32 = tile_field(critical_tile(3, 2));
  CHECK(critical_cells(c32) == std::vector<Simplex>{Simplex{0, 1, 2}});
  CHECK(c32.pairs() == std::vector<std::pair<Simplex, Simplex>>{{Simplex{0, 1, 3}, Simplex{0, 1, 2, 3}}});

  CHECK(critical_cells(tile_field(standard_tile(4, 5))) == std::vector<Simplex>{Simplex{0, 1, 2, 3, 4}});
}

TEST_CASE("compatible fields") {
  const DiscreteVectorField w = compatible_field(sphere_partition(2));
  CHECK(w.size() == 6);
  const auto crit = critical_cells(w);
  CHECK(crit.size() == 2);
  CHECK(crit[0].dim() + crit[1].dim() == 2);
  CHECK(validate_field(w).valid());

  CHECK(critical_cells(compatible_field(single(standard_tile(3, 0)))).size() == 1);

  for (const SimplicialComplex& k : catalog::surface_corpus()) {
    const MorseTiling t = shell_surface(k);
    const DiscreteVectorField f = compatible_field(t);
    CHECK(validate_field(f).valid());
    CHECK_FALSE(find_closed_vpath(f).has_value());
    CHECK_FALSE(has_cycle(f));
    CriticalVector hist(3, 0);
    for (const Simplex& c : critical_cells(f)) ++hist[static_cast<std::size_t>(c.dim())];
    CHECK(hist == critical_vector(t));
    CHECK(k.face_count() == critical_cells(f).size() + 2 * f.size());
  }
}

TEST_CASE("field validation") {
  const FaceSet tri = FaceSet::all(catalog::simplex(2));
  CHECK(critical_cells(DiscreteVectorField(tri, {})).size() == 7);

  const DiscreteVectorField twice(tri, {{Simplex{0}, Simplex{0, 1}}, {Simplex{1}, Simplex{0, 1}}});
  const FieldReport r4 = validate_field(twice);
  CHECK_FALSE(r4.valid());
  CHECK(r4.violations.front().condition == 4);

  const DiscreteVectorField skip(tri, {{Simplex{0}, Simplex{0, 1, 2}}});
  CHECK(validate_field(skip).violations.front().condition == 1);

  const DiscreteVectorField outside(FaceSet({Simplex{0}}), {{Simplex{0}, Simplex{0, 1}}});
  CHECK(validate_field(outside).violations.front().condition == 2);

  const DiscreteVectorField chain(tri, {{Simplex{0}, Simplex{0, 1}}, {Simplex{0, 1}, Simplex{0, 1, 2}}});
  CHECK(validate_field(chain).violations.front().condition == 3);
}

TEST_CASE("closed V-paths") {
  const MorseTiling rot = rotating_triangle();
  CHECK(validate_tiling(rot).valid());
  CHECK(std::all_of(rot.tiles.begin(), rot.tiles.end(), [](const MorseTile& t) { return !t.is_critical(); }));
  const DiscreteVectorField w = compatible_field(rot);
  CHECK(critical_cells(w).empty());
  const auto cycle = find_closed_vpath(w);
  REQUIRE(cycle.has_value());
  CHECK(cycle->front() == cycle->back());
  CHECK((*cycle)[1] != (*cycle)[0]);
  // each step goes to a facet of the image
  for (std::size_t i = 0; i + 1 < cycle->size(); ++i) {
    const auto up = w.up((*cycle)[i]);
    REQUIRE(up.has_value());
    CHECK((*cycle)[i + 1].is_proper_face_of(*up));
  }
  CHECK(has_cycle(w));
  CHECK_FALSE(find_closed_vpath(DiscreteVectorField(FaceSet::all(catalog::simplex(2)), {})).has_value());

  CHECK_THROWS_AS(morse_function(w), CyclicFieldError);
  try {
    morse_function(w);
  } catch (const CyclicFieldError& e) {
    CHECK(e.cycle().size() >= 3);
  }
  const InequalityReport r = morse_inequalities_report(rot.ambient, rot);
  CHECK_FALSE(r.certified);
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("Morse functions") {
  const DiscreteVectorField closed = compatible_field(single(standard_tile(2, 0)));
  const DiscreteMorseFunction f = morse_function(closed);
  CHECK(validate_morse_function(f, &closed).valid());
  CHECK(forman_conditions(f));
  CHECK(f.at(critical_cells(closed)[0]) == Rational(0));

  const DiscreteVectorField sw = compatible_field(sphere_partition(2));
  const DiscreteMorseFunction g = morse_function(sw);
  std::set<std::int64_t> values;
  for (const Simplex& c : critical_cells(sw)) {
    CHECK(g.at(c).den == 1);
    values.insert(g.at(c).num);
  }
  CHECK(values == std::set<std::int64_t>{0, 2});
  CHECK(gradient_of(g) == sw);

  const DiscreteVectorField open(FaceSet({Simplex{0, 1, 2, 3}}), {});
  CHECK(morse_function(open).at(Simplex{0, 1, 2, 3}) == Rational(3));
}

TEST_CASE("Morse function validation") {
  const SimplicialComplex tri = catalog::simplex(2);
  DiscreteMorseFunction dim;
  for (const Simplex& s : tri.faces()) dim.values[s] = Rational(s.dim());
  CHECK(validate_morse_function(dim).valid());
  CHECK(gradient_of(dim).size() == 0);

  DiscreteMorseFunction paired = dim;
  paired.values[Simplex{0}] = Rational(1, 2);
  paired.values[Simplex{0, 1}] = Rational(1, 2);
  CHECK(validate_morse_function(paired).valid());
  CHECK(forman_conditions(paired));
  CHECK(gradient_of(paired).pairs() == std::vector<std::pair<Simplex, Simplex>>{{Simplex{0}, Simplex{0, 1}}});

  DiscreteMorseFunction bad = dim;
  bad.values[Simplex{0}] = Rational(2);
  const MorseReport r = validate_morse_function(bad);
  CHECK_FALSE(r.valid());
  CHECK(r.violations.front().condition == 1);
  CHECK(r.violations.front().face == Simplex{0});
  CHECK_FALSE(forman_conditions(bad));

  const DiscreteVectorField other(FaceSet::all(tri), {{Simplex{1}, Simplex{1, 2}}});
  const MorseReport mismatch = validate_morse_function(paired, &other);
  CHECK_FALSE(mismatch.valid());
  CHECK(mismatch.violations.front().condition == 3);
}

TEST_CASE("rationals") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 7).to_string() == "1");
  CHECK(Rational(3, 6).to_string() == "1/2");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("Morse functions of surface shellings") {
  for (const SimplicialComplex& k : catalog::surface_corpus()) {
    const MorseTiling t = shell_surface(k);
    const DiscreteVectorField w = compatible_field(t);
    const DiscreteMorseFunction f = morse_function(w);
    CHECK(validate_morse_function(f, &w).valid());
    CHECK(forman_conditions(f));
    CHECK(gradient_of(f) == w);
    for (const Simplex& c : critical_cells(w)) CHECK(f.at(c) == Rational(c.dim()));
    CHECK(f.values.size() == k.face_count());
  }
}

TEST_CASE("Morse inequalities") {
  const MorseTiling s = sphere_partition(2);
  const InequalityReport r = morse_inequalities_report(s.ambient, s);
  CHECK(r.certified);
  CHECK(r.betti == std::vector<std::size_t>{1, 0, 1});
  CHECK(r.critical == CriticalVector{1, 0, 1});
  CHECK(r.holds());
  CHECK(r.euler_equal);

  const MorseTiling torus = shell_surface(catalog::torus7());
  const InequalityReport rt = morse_inequalities_report(torus.ambient, torus);
  CHECK(rt.betti == std::vector<std::size_t>{1, 2, 1});
  CHECK(rt.holds());
  for (std::size_t i = 0; i < 3; ++i) CHECK(rt.betti[i] <= rt.critical[i]);

  const MorseTiling g2 = shell_surface(catalog::genus2());
  const InequalityReport rg = morse_inequalities_report(g2.ambient, g2);
  CHECK(rg.betti[1] == 4);
  CHECK(rg.betti[1] <= rg.critical[1]);
  CHECK(static_cast<long>(rg.critical[0]) - static_cast<long>(rg.critical[1]) + static_cast<long>(rg.critical[2]) ==
        -2);
  CHECK(rg.holds());

  MorseTiling partial = s;
  partial.carrier = FaceSet({Simplex{0}});
  CHECK_THROWS_AS(morse_inequalities_report(s.ambient, partial), Error);
}
