#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "morsetile/complex.hpp"
#include "morsetile/tile.hpp"

namespace morsetile {

/// A partition of a subset of a complex into Morse tiles.
struct MorseTiling {
  SimplicialComplex ambient;
  FaceSet carrier;
  std::vector<MorseTile> tiles;
  /// The tile order is claimed to be a shelling order.
  bool ordered = false;
};

/// Tiling whose carrier is the union of the tile extensions.
MorseTiling tiling_from_tiles(SimplicialComplex ambient, std::vector<MorseTile> tiles, bool ordered);

struct Violation {
  enum class Kind {
    OutsideAmbient,  // a tile closure is not a face of the ambient complex
    OutsideCarrier,  // a tile face is not in the carrier
    Overlap,         // a face lies in two tiles
    Uncovered,       // a carrier face lies in no tile
    Filtration,      // the union of tiles of dimension > j is not a subcomplex trace
    Prefix,          // a prefix of the shelling is not a subcomplex trace
  };
  Kind kind;
  Simplex face;
  /// Filtration level for Filtration, 1-based prefix length for Prefix, else -1.
  int level = -1;
  std::string message;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Partition and dimension-filtration checks.
ValidationReport validate_tiling(const MorseTiling& tiling);
/// validate_tiling plus the same checks on every prefix. Throws for an
/// unordered tiling.
ValidationReport validate_shelling(const MorseTiling& tiling);

/// Builds T_i = sigma_i minus the earlier simplices and requires each to be a
/// basic tile. Throws naming the 1-based offending index otherwise.
MorseTiling classical_shelling_order(const SimplicialComplex& complex, const std::vector<Simplex>& order);

/// c_k, the number of critical tiles of index k.
using CriticalVector = std::vector<std::size_t>;
CriticalVector critical_vector(const MorseTiling& tiling);

struct HTable {
  /// h^j_k for basic tiles, keyed by (dimension j, order k).
  std::map<std::pair<int, int>, std::size_t> basic;
  /// Non-basic regular tiles keyed by (n, k, l).
  std::map<std::tuple<int, int, int>, std::size_t> regular;
  /// Non-basic critical tiles keyed by (n, index).
  std::map<std::pair<int, int>, std::size_t> critical;
  std::size_t total = 0;
  /// sum_j (j+1) h^j_0 + sum_j h^j_1, and the number of carrier vertices.
  std::size_t f0_lhs = 0;
  std::size_t f0_rhs = 0;

  std::size_t h(int j, int k) const;
  bool f0_identity_holds() const { return f0_lhs == f0_rhs; }
};

HTable h_table(const MorseTiling& tiling);

/// Restriction to faces of dimension at most i, each tile split by
/// skeleton_partition. Order is kept by concatenation.
MorseTiling skeleton_tiling(const MorseTiling& tiling, int i);

/// Shelling of the barycentric subdivision of one tile by (n+1)! tiles of
/// dimension n. The ambient complex is Sd of the tile's closed simplex, so its
/// vertex ids are the face ids of that simplex.
MorseTiling subdivide_tile(const MorseTile& tile);

/// Tiles of Sd(tile) with every vertex named by the face of the closure it
/// is the barycenter of, given as a bit mask over the closure's vertices.
std::vector<MorseTile> subdivide_tile_masks(const MorseTile& tile);

/// Subdivides every tile `iterations` times; ambient becomes Sd^iterations.
MorseTiling subdivide_tiling(const MorseTiling& tiling, int iterations);

/// Predicted tile count of subdivide_tiling without building it.
double predicted_subdivision_size(const MorseTiling& tiling, int iterations);

/// Disjoint closed simplices of Sd(ambient), one per basic tile of order 0
/// or 1, each a flag through the tile's witness (or least) vertex.
std::vector<Simplex> pack_simplices(const MorseTiling& tiling);

struct SearchResult {
  enum class Status { Found, None, BudgetExceeded };
  Status status = Status::None;
  std::optional<MorseTiling> shelling;
  std::uint64_t nodes = 0;
};

std::string to_string(SearchResult::Status status);

/// Depth-first search over orderings of the maximal simplices for a Morse
/// shelling. Returns the lexicographically first one.
SearchResult search_shelling(const SimplicialComplex& complex, std::uint64_t budget = 10'000'000);

}  // namespace morsetile
