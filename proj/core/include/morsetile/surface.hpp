#pragma once

#include <optional>

#include "morsetile/complex.hpp"
#include "morsetile/tiling.hpp"

namespace morsetile {

/// Greedy Morse shelling of a closed surface.
///
/// Each component starts from a closed triangle (`start` for its own
/// component, the least triangle otherwise). Then, while some edge of the
/// covered part lies in a single covered triangle, the smallest such edge is
/// taken and its other triangle, minus what is already covered, becomes the
/// next tile.
MorseTiling shell_surface(const SimplicialComplex& surface, std::optional<Simplex> start = std::nullopt);

}  // namespace morsetile
