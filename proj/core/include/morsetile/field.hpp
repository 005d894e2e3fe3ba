#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morsetile/complex.hpp"
#include "morsetile/tile.hpp"
#include "morsetile/tiling.hpp"

namespace morsetile {

/// A partial matching of faces with cofaces one dimension up, on a domain of
/// open faces. Pairs are stored as given so that malformed fields can still be
/// loaded and reported on.
class DiscreteVectorField {
 public:
  DiscreteVectorField() = default;
  DiscreteVectorField(FaceSet domain, std::vector<std::pair<Simplex, Simplex>> pairs);

  const FaceSet& domain() const { return domain_; }
  /// Sorted by lower face.
  const std::vector<std::pair<Simplex, Simplex>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  /// W(face), if face is matched upwards.
  std::optional<Simplex> up(const Simplex& face) const;
  /// The face matched to `coface`, if any.
  std::optional<Simplex> down(const Simplex& coface) const;

  friend bool operator==(const DiscreteVectorField&, const DiscreteVectorField&) = default;

 private:
  FaceSet domain_;
  std::vector<std::pair<Simplex, Simplex>> pairs_;
  std::map<Simplex, Simplex> up_, down_;
};

struct FieldViolation {
  int condition;  // 1: not a coface of one dimension more, 2: outside the domain,
                  // 3: matched up and also an image, 4: matched twice
  Simplex face;
  std::string message;
};

struct FieldReport {
  std::vector<FieldViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Canonical field on a single tile; its pairs stay inside the tile.
DiscreteVectorField tile_field(const MorseTile& tile);
/// Union of tile_field over the tiles, on the tiling's carrier.
DiscreteVectorField compatible_field(const MorseTiling& tiling);

FieldReport validate_field(const DiscreteVectorField& field);
/// Domain faces that are neither matched up nor an image.
std::vector<Simplex> critical_cells(const DiscreteVectorField& field);

/// A V-path sigma_0, ..., sigma_r with sigma_r = sigma_0.
using VPath = std::vector<Simplex>;

/// A closed non-stationary V-path, or nullopt if the field is acyclic.
std::optional<VPath> find_closed_vpath(const DiscreteVectorField& field);

/// Exact rational value with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

/// Values on the faces of a domain.
struct DiscreteMorseFunction {
  std::map<Simplex, Rational> values;

  const Rational& at(const Simplex& face) const;
};

/// Thrown by morse_function when the field has a closed V-path.
class CyclicFieldError : public Error {
 public:
  explicit CyclicFieldError(VPath cycle);
  const VPath& cycle() const { return cycle_; }

 private:
  VPath cycle_;
};

/// A self-indexing discrete Morse function whose gradient is `field`.
DiscreteMorseFunction morse_function(const DiscreteVectorField& field);

struct MorseViolation {
  int condition;  // 1: too many cofaces at or below, 2: too many faces at or above,
                  // 3: gradient differs from the supplied field
  Simplex face;
  std::string message;
};

struct MorseReport {
  std::vector<MorseViolation> violations;
  bool valid() const { return violations.empty(); }
};

MorseReport validate_morse_function(const DiscreteMorseFunction& f,
                                    const DiscreteVectorField* field = nullptr);
/// W_f(sigma) = tau iff tau is a coface of sigma with f(tau) <= f(sigma).
DiscreteVectorField gradient_of(const DiscreteMorseFunction& f);

struct InequalityReport {
  bool certified = false;
  std::string note;
  std::vector<std::size_t> betti;
  CriticalVector critical;
  std::vector<bool> weak;  // b_k <= c_k
  std::vector<long> strong_lhs, strong_rhs;
  bool euler_equal = false;

  bool holds() const;
};

/// Mod-2 Betti numbers against critical tile counts. The tiling must cover
/// the whole complex.
InequalityReport morse_inequalities_report(const SimplicialComplex& complex, const MorseTiling& tiling);

}  // namespace morsetile
