#include "morsetile/handles.hpp"

#include <algorithm>

namespace morsetile {

Prism prism_triangulation(int n) {
  if (n < 2) throw Error("prism needs n >= 2");
  Prism p;
  p.n = n;
  const Vertex un = static_cast<Vertex>(n);
  std::vector<Vertex> bottom, top;
  for (Vertex i = 0; i < un; ++i) {
    bottom.push_back(i);
    top.push_back(un + i);
  }
  p.bottom = Simplex(bottom);
  p.top = Simplex(top);
  // Coning from (0, 0) at every step of the recursion gives
  // sigma_i = (0, 0..n-i) + (1, n-i..n-1).
  for (Vertex i = 1; i <= un; ++i) {
    std::vector<Vertex> vs;
    for (Vertex j = 0; j <= un - i; ++j) vs.push_back(j);
    for (Vertex j = un - i; j < un; ++j) vs.push_back(un + j);
    p.staircase.emplace_back(std::move(vs));
  }
  p.complex = SimplicialComplex::from_maximal(p.staircase, "prism" + std::to_string(n));
  return p;
}

HandleVariant parse_handle_variant(const std::string& name) {
  if (name == "one-handle") return HandleVariant::OneHandle;
  if (name == "co-handle") return HandleVariant::CoHandle;
  if (name == "lateral") return HandleVariant::Lateral;
  throw Error("unknown handle variant '" + name + "' (expected one-handle, co-handle or lateral)");
}

std::string to_string(HandleVariant variant) {
  switch (variant) {
    case HandleVariant::OneHandle: return "one-handle";
    case HandleVariant::CoHandle: return "co-handle";
    case HandleVariant::Lateral: return "lateral";
  }
  return "unknown";
}

MorseTiling handle_tiling(int n, HandleVariant variant) {
  const Prism p = prism_triangulation(n);
  const Vertex un = static_cast<Vertex>(n);
  auto keep = [&](const Simplex& f) {
    switch (variant) {
      case HandleVariant::OneHandle: return !f.is_face_of(p.bottom) && !f.is_face_of(p.top);
      case HandleVariant::Lateral: return !f.is_face_of(p.bottom);
      case HandleVariant::CoHandle: {
        std::vector<char> hit(un, 0);
        for (Vertex v : f) hit[v % un] = 1;
        return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
      }
    }
    return false;
  };

  std::vector<Simplex> carrier;
  for (const Simplex& f : p.complex.faces())
    if (keep(f)) carrier.push_back(f);

  std::vector<char> taken(p.complex.face_count(), 0);
  std::vector<MorseTile> tiles;
  for (const Simplex& sigma : p.staircase) {
    std::vector<Simplex> diff;
    for (const Simplex& f : sigma.faces()) {
      const FaceId id = p.complex.id(f);
      if (!taken[id] && keep(f)) diff.push_back(f);
      taken[id] = 1;
    }
    if (!diff.empty()) tiles.push_back(normalize_tile(diff));
  }
  return MorseTiling{p.complex, FaceSet(std::move(carrier)), std::move(tiles), true};
}

}  // namespace morsetile
