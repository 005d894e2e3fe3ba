#include <algorithm>
#include <bit>
#include <cmath>

#include "morsetile/tiling.hpp"

namespace morsetile {

namespace {

constexpr int kMaxSubdivisionDim = 12;

std::vector<unsigned> bits_of(std::uint32_t mask) {
  std::vector<unsigned> out;
  for (unsigned i = 0; mask >> i; ++i)
    if (mask >> i & 1U) out.push_back(i);
  return out;
}

// Sd of a basic tile, vertices named by face masks. The boundary is split
// facet by facet (witness facets first, facets opposite a vertex of `late`
// last), each piece is subdivided recursively, and the pieces are coned from
// the barycenter of the whole face. Putting the vertices of a removed face
// last keeps its subdivision inside a single piece at every level.
std::vector<MorseTile> sd_basic(std::uint32_t cm, std::uint32_t am, std::uint32_t late) {
  if (std::popcount(cm) == 1)
    return {MorseTile(Simplex{cm}, am ? std::vector<Vertex>{cm} : std::vector<Vertex>{})};
  std::vector<unsigned> order = bits_of(am);
  for (unsigned b : bits_of(cm & ~am & ~late)) order.push_back(b);
  for (unsigned b : bits_of(cm & ~am & late)) order.push_back(b);
  const std::size_t k = static_cast<std::size_t>(std::popcount(am));

  std::vector<MorseTile> out;
  std::uint32_t earlier = 0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const std::uint32_t facet = cm & ~(1U << order[j]);
    for (const MorseTile& piece : sd_basic(facet, earlier, late & facet))
      out.push_back(cone(piece, cm, out.empty(), j < k));
    earlier |= 1U << order[j];
  }
  return out;
}

template <class F>
MorseTile relabel(const MorseTile& t, F&& f) {
  if (t.is_empty()) return t;
  std::vector<Vertex> closure, witnesses;
  for (Vertex v : t.closure()) closure.push_back(f(v));
  for (Vertex v : t.witnesses()) witnesses.push_back(f(v));
  std::optional<Simplex> removed;
  if (t.removed_face()) {
    std::vector<Vertex> r;
    for (Vertex v : *t.removed_face()) r.push_back(f(v));
    removed = Simplex(std::move(r));
  }
  return MorseTile(Simplex(std::move(closure)), std::move(witnesses), std::move(removed));
}

double factorial(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::vector<MorseTile> subdivide_tile_masks(const MorseTile& tile) {
  if (tile.is_empty()) return {};
  if (tile.dim() > kMaxSubdivisionDim)
    throw Error("subdivision of a tile of dimension " + std::to_string(tile.dim()) + " is not supported");
  const Simplex& c = tile.closure();
  std::uint32_t am = 0;
  for (Vertex w : tile.witnesses()) am |= static_cast<std::uint32_t>(c.mask_of(Simplex{w}));
  const std::uint32_t tau =
      tile.removed_face() ? static_cast<std::uint32_t>(c.mask_of(*tile.removed_face())) : 0;
  std::vector<MorseTile> tiles = sd_basic(static_cast<std::uint32_t>(c.full_mask()), am, tau & ~am);
  if (!tile.removed_face()) return tiles;

  // Drop the flags inside the removed face and recognize what is left.
  for (MorseTile& t : tiles) {
    std::vector<Simplex> kept;
    for (Simplex& flag : t.faces()) {
      const bool inside = std::all_of(flag.begin(), flag.end(), [&](Vertex m) { return (m & ~tau) == 0; });
      if (!inside) kept.push_back(std::move(flag));
    }
    try {
      t = normalize_tile(kept);
    } catch (const Error& e) {
      throw Error("internal error: subdivision piece of " + tile.to_string() + " is not a tile (" + e.what() + ")");
    }
  }
  return tiles;
}

MorseTiling subdivide_tile(const MorseTile& tile) {
  if (tile.is_empty()) return MorseTiling{};
  const SimplicialComplex base = SimplicialComplex::from_maximal({tile.closure()});
  Subdivision sd = barycentric_subdivision(base);
  std::vector<MorseTile> tiles;
  for (const MorseTile& t : subdivide_tile_masks(tile))
    tiles.push_back(relabel(t, [&](Vertex m) { return base.id(tile.closure().sub(m)); }));
  return tiling_from_tiles(std::move(sd.complex), std::move(tiles), true);
}

double predicted_subdivision_size(const MorseTiling& tiling, int iterations) {
  double total = 0;
  for (const MorseTile& t : tiling.tiles)
    if (!t.is_empty()) total += std::pow(factorial(t.dim() + 1), iterations);
  return total;
}

MorseTiling subdivide_tiling(const MorseTiling& tiling, int iterations) {
  if (iterations < 0) throw Error("iterations must be non-negative");
  MorseTiling current = tiling;
  for (int it = 0; it < iterations; ++it) {
    Subdivision sd = barycentric_subdivision(current.ambient);
    MorseTiling next;
    next.ordered = current.ordered;
    for (const MorseTile& tile : current.tiles)
      for (const MorseTile& t : subdivide_tile_masks(tile))
        next.tiles.push_back(relabel(t, [&](Vertex m) { return current.ambient.id(tile.closure().sub(m)); }));
    std::vector<Simplex> carrier;
    for (const Simplex& flag : sd.complex.faces())
      if (current.carrier.contains(sd.carrier(flag))) carrier.push_back(flag);
    next.carrier = FaceSet(std::move(carrier));
    next.ambient = std::move(sd.complex);
    current = std::move(next);
  }
  return current;
}

}  // namespace morsetile
