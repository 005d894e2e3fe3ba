#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace morsetile {

using Vertex = std::uint32_t;

/// Raised for every precondition violation and malformed input in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simplex stored as its strictly increasing list of vertex ids.
///
/// A default-constructed Simplex is the empty face (dimension -1). It never
/// appears in a complex; it exists so that tiles can express the empty
/// closure of T^{-1}_0 and so that simplices can live in containers.
class Simplex {
 public:
  Simplex() = default;

  /// Sorts the input. Throws on an empty list or on a repeated vertex.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices);

  static Simplex empty() { return Simplex{}; }

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool is_empty() const { return vertices_.empty(); }

  std::span<const Vertex> vertices() const { return vertices_; }
  const std::vector<Vertex>& vertex_list() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  bool contains(Vertex v) const;
  /// True iff every vertex of this simplex is a vertex of `other`.
  bool is_face_of(const Simplex& other) const;
  bool is_proper_face_of(const Simplex& other) const {
    return size() < other.size() && is_face_of(other);
  }

  Simplex without(Vertex v) const;
  Simplex with(Vertex v) const;

  /// The sub-simplex selected by the bits of `mask` (bit i = i-th vertex).
  Simplex sub(std::uint64_t mask) const;
  /// Bit mask of `face` relative to this simplex; `face` must be a face.
  std::uint64_t mask_of(const Simplex& face) const;
  std::uint64_t full_mask() const {
    return size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
  }

  /// All non-empty faces, including the simplex itself, in sorted order.
  std::vector<Simplex> faces() const;
  /// All codimension-one faces (none for a vertex).
  std::vector<Simplex> facets() const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex& a, const Simplex& b) {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  struct Sorted {};
  Simplex(Sorted, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
  friend Simplex make_sorted_simplex(std::vector<Vertex> vertices);

  std::vector<Vertex> vertices_;
};

/// Wraps an already strictly increasing vertex list without re-checking it.
Simplex make_sorted_simplex(std::vector<Vertex> vertices);

std::ostream& operator<<(std::ostream& os, const Simplex& s);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Orders simplices by dimension first, then lexicographically.
struct ByDimension {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Sorted-vector set algebra on vertex lists.
std::vector<Vertex> vertex_union(std::span<const Vertex> a, std::span<const Vertex> b);
std::vector<Vertex> vertex_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
std::vector<Vertex> vertex_difference(std::span<const Vertex> a, std::span<const Vertex> b);
bool vertex_subset(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace morsetile
