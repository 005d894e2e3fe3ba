#include "morsetile/simplex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace morsetile {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error("simplex must have at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw Error("simplex has a repeated vertex");
}

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::vector<Vertex>(vertices)) {}

Simplex make_sorted_simplex(std::vector<Vertex> vertices) {
  return Simplex(Simplex::Sorted{}, std::move(vertices));
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

Simplex Simplex::without(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size());
  for (Vertex w : vertices_)
    if (w != v) out.push_back(w);
  return make_sorted_simplex(std::move(out));
}

Simplex Simplex::with(Vertex v) const {
  std::vector<Vertex> out = vertices_;
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it == out.end() || *it != v) out.insert(it, v);
  return make_sorted_simplex(std::move(out));
}

Simplex Simplex::sub(std::uint64_t mask) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (mask >> i & 1U) out.push_back(vertices_[i]);
  return make_sorted_simplex(std::move(out));
}

std::uint64_t Simplex::mask_of(const Simplex& face) const {
  std::uint64_t mask = 0;
  std::size_t i = 0;
  for (Vertex v : face.vertices_) {
    while (i < vertices_.size() && vertices_[i] < v) ++i;
    if (i == vertices_.size() || vertices_[i] != v)
      throw Error(face.to_string() + " is not a face of " + to_string());
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::vector<Simplex> Simplex::faces() const {
  std::vector<Simplex> out;
  if (vertices_.empty()) return out;
  const std::uint64_t full = full_mask();
  out.reserve(full);
  for (std::uint64_t m = 1; m <= full; ++m) out.push_back(sub(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  for (Vertex v : vertices_) out.push_back(without(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os << '}';
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
  for (Vertex v : s) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

std::vector<Vertex> vertex_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> vertex_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> vertex_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool vertex_subset(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace morsetile
