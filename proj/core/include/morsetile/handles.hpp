#pragma once

#include <string>
#include <vector>

#include "morsetile/complex.hpp"
#include "morsetile/tiling.hpp"

namespace morsetile {

/// Staircase triangulation of Delta_1 x Delta_{n-1}.
///
/// Vertex (0, i) is i and vertex (1, i) is n + i. Simplex sigma_i, for
/// i = 1..n, spans (0, 0..n-i) and (1, n-i..n-1).
struct Prism {
  int n = 0;
  SimplicialComplex complex;
  Simplex bottom;                  // {0} x Delta_{n-1}
  Simplex top;                     // {1} x Delta_{n-1}
  std::vector<Simplex> staircase;  // sigma_1, ..., sigma_n
};

Prism prism_triangulation(int n);

enum class HandleVariant { OneHandle, CoHandle, Lateral };

HandleVariant parse_handle_variant(const std::string& name);
std::string to_string(HandleVariant variant);

/// Tiling of part of the prism, built along the staircase order:
/// OneHandle drops both closed bases, CoHandle keeps the faces projecting
/// onto all of Delta_{n-1}, Lateral drops the closed bottom base.
MorseTiling handle_tiling(int n, HandleVariant variant);

}  // namespace morsetile
