#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morsetile/complex.hpp"
#include "morsetile/simplex.hpp"

namespace morsetile {

/// Combinatorial type of a tile.
///
/// The closed simplex T^n_0 and the open simplex T^n_{n+1} are reported as
/// Critical of index 0 and n respectively; MorseTile::is_basic() still holds
/// for them.
struct TileKind {
  enum class Class { Empty, Basic, Regular, Critical };
  Class cls = Class::Empty;
  int n = -1;  // dimension
  int k = 0;   // order, or index for Critical
  int l = -1;  // dimension of the removed face, Regular only

  std::string to_string() const;
  friend bool operator==(const TileKind&, const TileKind&) = default;
};

/// T^{n,l}_k: the closed simplex `closure` minus the k closed facets opposite
/// the witness vertices and minus the closed face `removed_face`.
///
/// The extension of the tile is the set of faces phi of the closure with
/// A ⊆ phi and phi not inside the removed face. Construction validates and
/// normalizes: an empty removed face is dropped, and a removed facet is
/// turned into one more witness.
class MorseTile {
 public:
  /// The empty tile T^{-1}_0.
  MorseTile() = default;
  MorseTile(Simplex closure, std::vector<Vertex> witnesses,
            std::optional<Simplex> removed_face = std::nullopt);

  static MorseTile empty() { return MorseTile{}; }

  const Simplex& closure() const { return closure_; }
  const std::vector<Vertex>& witnesses() const { return witnesses_; }
  const std::optional<Simplex>& removed_face() const { return removed_; }

  int dim() const { return closure_.dim(); }
  int order() const { return static_cast<int>(witnesses_.size()); }
  /// Dimension l of the removed face, or -1.
  int removed_dim() const { return removed_ ? removed_->dim() : -1; }

  bool is_empty() const { return closure_.is_empty(); }
  bool is_basic() const { return !is_empty() && !removed_; }
  bool is_critical() const;
  /// Index of a critical tile; throws for non-critical tiles.
  int index() const;
  TileKind kind() const;

  /// Whether `face` belongs to the extension.
  bool contains(const Simplex& face) const;
  /// The extension, in sorted order.
  std::vector<Simplex> faces() const;
  std::size_t face_count() const;

  std::string to_string() const;

  friend bool operator==(const MorseTile&, const MorseTile&) = default;

 private:
  Simplex closure_;
  std::vector<Vertex> witnesses_;  // sorted
  std::optional<Simplex> removed_;
};

std::ostream& operator<<(std::ostream& os, const MorseTile& t);

/// T^n_k on {0..n} with witnesses {0..k-1}.
MorseTile standard_tile(int n, int k);
/// T^{n,l}_k on {0..n}: witnesses {0..k-1}, removed face {0..k-1} + {k+1..l+1}.
MorseTile standard_morse_tile(int n, int k, int l);
/// C^n_k = T^{n,k-1}_k.
MorseTile critical_tile(int n, int k);

/// Sum of (-1)^dim over the extension.
long tile_chi(const MorseTile& t);

/// Splits the boundary trace of a basic tile into basic tiles of dimension n-1.
///
/// `facet_order` lists the non-witness vertices of the closure; piece i lives
/// on the facet opposite facet_order[i] and has order k+i. An empty order
/// means ascending.
std::vector<MorseTile> boundary_partition(const MorseTile& t,
                                          std::span<const Vertex> facet_order = {});

/// Codimension-one pieces of any tile: together with the open top face they
/// partition the tile. For a basic tile this is boundary_partition with the
/// default order.
std::vector<MorseTile> codimension_one_partition(const MorseTile& t);

/// Partition of the faces of dimension at most j of the tile.
std::vector<MorseTile> skeleton_partition(const MorseTile& t, int j);

/// Cone over `t` with apex `c`, optionally keeping the apex and optionally
/// removing the base.
MorseTile cone(const MorseTile& t, Vertex c, bool keep_apex, bool remove_base);

/// Recognizes a face set as a Morse tile. Throws "not a Morse tile".
MorseTile normalize_tile(const FaceSet& faces);
MorseTile normalize_tile(std::span<const Simplex> faces);

}  // namespace morsetile
