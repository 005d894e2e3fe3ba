#include "morsetile/surface.hpp"

#include <algorithm>
#include <set>

namespace morsetile {

MorseTiling shell_surface(const SimplicialComplex& surface, std::optional<Simplex> start) {
  if (!is_closed_surface(surface)) throw Error("input is not a closed surface");
  if (start && (start->dim() != 2 || !surface.contains(*start)))
    throw Error("start " + start->to_string() + " is not a triangle of the surface");

  std::vector<char> covered(surface.face_count(), 0);
  std::vector<int> covered_triangles(surface.face_count(), 0);  // per edge
  std::set<Simplex> frontier;
  std::vector<MorseTile> tiles;

  auto add = [&](const Simplex& triangle) {
    std::vector<Simplex> diff;
    for (const Simplex& f : triangle.faces()) {
      const FaceId id = surface.id(f);
      if (!covered[id]) {
        covered[id] = 1;
        diff.push_back(f);
      }
    }
    tiles.push_back(normalize_tile(diff));
    for (const Simplex& e : triangle.facets()) {
      const int c = ++covered_triangles[surface.id(e)];
      if (c == 1) frontier.insert(e);
      else frontier.erase(e);
    }
  };

  for (const auto& component : connected_components(surface)) {
    Simplex first = component.front();
    if (start && std::find(component.begin(), component.end(), *start) != component.end()) first = *start;
    add(first);
    while (!frontier.empty()) {
      const Simplex e = *frontier.begin();
      std::optional<Simplex> next;
      for (FaceId t : surface.cofacets(surface.id(e)))
        if (!covered[t]) next = surface.face(t);
      if (!next) throw Error("internal error: frontier edge " + e.to_string() + " has no uncovered triangle");
      add(*next);
    }
    for (const Simplex& t : component)
      if (!covered[surface.id(t)])
        throw Error("greedy shelling stopped before covering triangle " + t.to_string());
  }
  return MorseTiling{surface, FaceSet::all(surface), std::move(tiles), true};
}

}  // namespace morsetile
