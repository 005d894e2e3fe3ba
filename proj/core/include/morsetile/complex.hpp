#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morsetile/simplex.hpp"

namespace morsetile {

using FaceId = std::uint32_t;

/// A finite simplicial complex given by its maximal simplices.
///
/// Construction enumerates every face once and builds the face index, so all
/// queries afterwards are lookups. Faces are numbered in ByDimension order;
/// that numbering is stable and doubles as the vertex labelling of the
/// barycentric subdivision. Copies share the immutable face index.
class SimplicialComplex {
 public:
  /// The empty complex.
  SimplicialComplex();

  /// Drops repeated and dominated simplices. Accepts an empty list.
  static SimplicialComplex from_maximal(std::vector<Simplex> simplices, std::string name = {});

  const std::string& name() const;
  SimplicialComplex with_name(std::string name) const;

  const std::vector<Simplex>& maximal_simplices() const;
  /// Every non-empty face, sorted by dimension and then lexicographically.
  const std::vector<Simplex>& faces() const;
  std::size_t face_count() const { return faces().size(); }
  bool empty() const { return faces().empty(); }
  int dimension() const;
  bool is_pure() const;

  std::optional<FaceId> find(const Simplex& face) const;
  bool contains(const Simplex& face) const { return find(face).has_value(); }
  /// Throws if `face` is not in the complex.
  FaceId id(const Simplex& face) const;
  const Simplex& face(FaceId id) const { return faces()[id]; }

  std::span<const FaceId> facets(FaceId id) const;
  std::span<const FaceId> cofacets(FaceId id) const;

  std::vector<Vertex> vertices() const;
  /// f_0, f_1, ..., f_dim.
  std::vector<std::size_t> f_vector() const;
  /// Faces of dimension exactly `d`.
  std::vector<Simplex> faces_of_dimension(int d) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.maximal_simplices() == b.maximal_simplices();
  }

 private:
  struct Data;
  explicit SimplicialComplex(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

/// Builds a complex from vertex lists. Throws "empty complex" on an empty list.
SimplicialComplex make_complex(const std::vector<std::vector<Vertex>>& maximal,
                               std::string name = {});

/// A set of open faces drawn from one complex: the combinatorial stand-in for a
/// subset S of |K| that is a union of relative interiors of simplices.
class FaceSet {
 public:
  FaceSet() = default;
  explicit FaceSet(std::vector<Simplex> faces);
  static FaceSet all(const SimplicialComplex& complex);

  bool contains(const Simplex& face) const;
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  auto begin() const { return faces_.begin(); }
  auto end() const { return faces_.end(); }
  const std::vector<Simplex>& faces() const { return faces_; }

  /// Vertices v with {v} in the set.
  std::vector<Vertex> vertices() const;
  int dimension() const;
  /// Every member is a face of `complex`.
  bool is_within(const SimplicialComplex& complex) const;

  friend bool operator==(const FaceSet&, const FaceSet&) = default;

 private:
  std::vector<Simplex> faces_;  // sorted, unique
};

FaceSet set_union(const FaceSet& a, const FaceSet& b);
FaceSet set_difference(const FaceSet& a, const FaceSet& b);

/// Faces of dimension at most `j`. Throws for negative `j`.
SimplicialComplex skeleton(const SimplicialComplex& complex, int j);

/// The first barycentric subdivision together with its vertex labelling.
///
/// Vertex i of the subdivision is the barycenter of face i of the base complex
/// (FaceId numbering), so a face of Sd(K) is a flag of base faces and its
/// carrier is the largest face of the flag.
struct Subdivision {
  SimplicialComplex base;
  SimplicialComplex complex;

  const Simplex& barycenter_face(Vertex v) const { return base.face(v); }
  /// The base faces of a flag, smallest first.
  std::vector<Simplex> flag(const Simplex& sd_face) const;
  /// The smallest base face containing the flag.
  const Simplex& carrier(const Simplex& sd_face) const;
  /// The subdivision face whose vertices are the barycenters of `chain`.
  Simplex from_flag(std::span<const Simplex> chain) const;
};

Subdivision barycentric_subdivision(const SimplicialComplex& complex);

/// Link of a vertex. Throws when `v` is not a vertex of the complex.
SimplicialComplex link(const SimplicialComplex& complex, Vertex v);
/// Closed star of a vertex: all faces of simplices containing `v`.
FaceSet star(const SimplicialComplex& complex, Vertex v);

/// Pure 2-dimensional, every edge in exactly two triangles, every vertex link
/// a single cycle.
bool is_closed_surface(const SimplicialComplex& complex);

/// Connected components, each as the list of its maximal simplices.
std::vector<std::vector<Simplex>> connected_components(const SimplicialComplex& complex);

/// Ranks of mod-2 homology, b_0 ... b_dim.
std::vector<std::size_t> betti_numbers_mod2(const SimplicialComplex& complex);

/// Rank over the two-element field of the given rows, each a list of set
/// column positions.
std::size_t rank_mod2(const std::vector<std::vector<std::size_t>>& rows, std::size_t columns);

long euler_characteristic(const FaceSet& faces);
long euler_characteristic(const SimplicialComplex& complex);

/// True iff every simplex of `complex` meets `sub` in the face lattice of a
/// single face (possibly empty). Throws when `sub` is not a subcomplex.
bool single_face_intersection(const SimplicialComplex& complex, const SimplicialComplex& sub);

}  // namespace morsetile
