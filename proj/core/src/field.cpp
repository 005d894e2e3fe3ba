#include "morsetile/field.hpp"

#include <algorithm>

namespace morsetile {

DiscreteVectorField::DiscreteVectorField(FaceSet domain, std::vector<std::pair<Simplex, Simplex>> pairs)
    : domain_(std::move(domain)), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (const auto& [lo, hi] : pairs_) {
    up_.emplace(lo, hi);
    down_.emplace(hi, lo);
  }
}

std::optional<Simplex> DiscreteVectorField::up(const Simplex& face) const {
  auto it = up_.find(face);
  if (it == up_.end()) return std::nullopt;
  return it->second;
}

std::optional<Simplex> DiscreteVectorField::down(const Simplex& coface) const {
  auto it = down_.find(coface);
  if (it == down_.end()) return std::nullopt;
  return it->second;
}

DiscreteVectorField tile_field(const MorseTile& tile) {
  std::vector<std::pair<Simplex, Simplex>> pairs;
  const std::vector<Simplex> faces = tile.faces();
  const std::vector<Vertex> outside =
      vertex_difference(tile.closure().vertices(),
                        tile.removed_face() ? tile.removed_face()->vertices() : std::span<const Vertex>(tile.witnesses()));
  if (!outside.empty()) {
    const Vertex w = outside.front();
    std::optional<Vertex> w2;
    if (tile.removed_face()) {
      const auto inner = vertex_difference(tile.removed_face()->vertices(), tile.witnesses());
      if (!inner.empty()) w2 = inner.front();
    }
    // Every face missing w is paired with the face obtained by adding w.
    for (const Simplex& phi : faces)
      if (!phi.contains(w)) pairs.emplace_back(phi, phi.with(w));
    // Faces psi+w with psi inside the removed face lost their partner; pair
    // them among themselves through w2.
    if (w2) {
      for (const Simplex& phi : faces) {
        if (!phi.contains(w) || phi.contains(*w2)) continue;
        const Simplex rest = phi.without(w);
        if (!rest.is_empty() && tile.contains(rest)) continue;
        pairs.emplace_back(phi, phi.with(*w2));
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return DiscreteVectorField(FaceSet(faces), std::move(pairs));
}

DiscreteVectorField compatible_field(const MorseTiling& tiling) {
  std::vector<std::pair<Simplex, Simplex>> pairs;
  for (const MorseTile& t : tiling.tiles) {
    const DiscreteVectorField f = tile_field(t);
    pairs.insert(pairs.end(), f.pairs().begin(), f.pairs().end());
  }
  return DiscreteVectorField(tiling.carrier, std::move(pairs));
}

FieldReport validate_field(const DiscreteVectorField& field) {
  FieldReport report;
  std::map<Simplex, int> as_source, as_target;
  for (const auto& [lo, hi] : field.pairs()) {
    if (!(lo.is_proper_face_of(hi) && hi.size() == lo.size() + 1))
      report.violations.push_back({1, lo, hi.to_string() + " is not a coface of " + lo.to_string() +
                                              " of one dimension more"});
    if (!field.domain().contains(lo))
      report.violations.push_back({2, lo, lo.to_string() + " is outside the domain"});
    if (!field.domain().contains(hi))
      report.violations.push_back({2, hi, hi.to_string() + " is outside the domain"});
    ++as_source[lo];
    ++as_target[hi];
  }
  for (const auto& [face, count] : as_source) {
    if (as_target.count(face))
      report.violations.push_back({3, face, face.to_string() + " is matched up and is also an image"});
    if (count > 1)
      report.violations.push_back({4, face, face.to_string() + " is matched to " + std::to_string(count) + " cofaces"});
  }
  for (const auto& [face, count] : as_target)
    if (count > 1)
      report.violations.push_back({4, face, face.to_string() + " is the image of " + std::to_string(count) + " faces"});
  return report;
}

std::vector<Simplex> critical_cells(const DiscreteVectorField& field) {
  std::vector<Simplex> out;
  for (const Simplex& f : field.domain())
    if (!field.up(f) && !field.down(f)) out.push_back(f);
  return out;
}

namespace {

// Successors of a matched face in the V-path digraph, in sorted order.
std::vector<Simplex> vpath_successors(const DiscreteVectorField& field, const Simplex& sigma) {
  std::vector<Simplex> out;
  const auto hi = field.up(sigma);
  if (!hi) return out;
  for (Simplex& next : hi->facets())
    if (next != sigma && field.up(next)) out.push_back(std::move(next));
  return out;
}

}  // namespace

std::optional<VPath> find_closed_vpath(const DiscreteVectorField& field) {
  enum : char { White, Grey, Black };
  std::map<Simplex, char> color;
  for (const auto& [lo, hi] : field.pairs()) color.emplace(lo, White);

  struct Frame {
    Simplex face;
    std::vector<Simplex> next;
    std::size_t i = 0;
  };
  for (const auto& [start, c0] : color) {
    if (color[start] != White) continue;
    std::vector<Frame> stack;
    stack.push_back({start, vpath_successors(field, start)});
    color[start] = Grey;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.i == top.next.size()) {
        color[top.face] = Black;
        stack.pop_back();
        continue;
      }
      const Simplex nxt = top.next[top.i++];
      const char c = color[nxt];
      if (c == Grey) {
        VPath cycle;
        auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) { return f.face == nxt; });
        for (; it != stack.end(); ++it) cycle.push_back(it->face);
        cycle.push_back(nxt);
        return cycle;
      }
      if (c == White) {
        color[nxt] = Grey;
        stack.push_back({nxt, vpath_successors(field, nxt)});
      }
    }
  }
  return std::nullopt;
}

}  // namespace morsetile
