#pragma once

#include <string>
#include <vector>

#include "morsetile/complex.hpp"

namespace morsetile {

/// A cyclic word over {d, u}, stored as its least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  /// Throws on letters other than 'd' and 'u'.
  explicit CyclicWord(const std::string& letters);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  char at(std::size_t i) const { return letters_[i % letters_.size()]; }
  std::size_t count(char letter) const;
  /// Each letter occurs at least three times.
  bool is_annulus_word() const;
  /// The word read backwards.
  CyclicWord reversed() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::string letters_;
};

/// dd -> d or uu -> u at cyclic positions (pos, pos+1).
CyclicWord word_compress(const CyclicWord& w, std::size_t pos);
/// udu -> ud or dud -> du at cyclic positions (pos, pos+1, pos+2).
CyclicWord word_suppress(const CyclicWord& w, std::size_t pos);
/// u -> duud, d -> dd.
CyclicWord word_subdivide(const CyclicWord& w);

struct Rewrite {
  std::string op;  // "compress", "suppress" or "subdivide"
  int position;    // -1 for subdivide
  CyclicWord result;

  friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

/// Applies one rewrite; throws if it does not apply.
CyclicWord apply_rewrite(const CyclicWord& w, const std::string& op, int position);

/// The annulus word every reduction ends at.
const CyclicWord& target_word();

/// Compressions and suppressions down to six letters, one subdivision, then
/// compressions and suppressions down to target_word(). Throws for words
/// that are not annulus words.
std::vector<Rewrite> reduce_word(const CyclicWord& w);

struct Annulus {
  SimplicialComplex complex;
  std::vector<Vertex> boundary_d;  // in cyclic order
  std::vector<Vertex> boundary_u;  // in cyclic order
};

/// Model annulus: d-vertices 0..D-1, then u-vertices. A 'd' adds the triangle
/// on the next d-edge, a 'u' the triangle on the next u-edge. Throws when the
/// model repeats an interior edge, which happens when all d's or all u's are
/// adjacent.
Annulus annulus_of_word(const CyclicWord& w);

/// Reads the word of a simple annulus triangulation. The walk starts on the
/// d-edge from the least d-vertex to its smaller d-neighbour.
CyclicWord word_of_annulus(const SimplicialComplex& annulus, const std::vector<Vertex>& boundary_d,
                           const std::vector<Vertex>& boundary_u);

}  // namespace morsetile
