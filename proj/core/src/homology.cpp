#include <algorithm>
#include <cstdint>

#include "morsetile/complex.hpp"

namespace morsetile {

namespace {

using Row = std::vector<std::uint64_t>;

std::size_t leading_bit(const Row& row) {
  for (std::size_t w = row.size(); w-- > 0;)
    if (row[w]) return w * 64 + (63 - static_cast<std::size_t>(__builtin_clzll(row[w])));
  return SIZE_MAX;
}

}  // namespace

std::size_t rank_mod2(const std::vector<std::vector<std::size_t>>& rows, std::size_t columns) {
  const std::size_t words = (columns + 63) / 64;
  // pivots[c] holds a reduced row whose leading bit is c.
  std::vector<Row> pivots(columns);
  std::vector<bool> used(columns, false);
  std::size_t rank = 0;
  for (const auto& cols : rows) {
    Row row(words, 0);
    for (std::size_t c : cols) {
      if (c >= columns) throw Error("column index out of range");
      row[c / 64] ^= std::uint64_t{1} << (c % 64);
    }
    for (std::size_t lead = leading_bit(row); lead != SIZE_MAX; lead = leading_bit(row)) {
      if (!used[lead]) {
        pivots[lead] = std::move(row);
        used[lead] = true;
        ++rank;
        break;
      }
      const Row& p = pivots[lead];
      for (std::size_t w = 0; w <= lead / 64; ++w) row[w] ^= p[w];
    }
  }
  return rank;
}

std::vector<std::size_t> betti_numbers_mod2(const SimplicialComplex& complex) {
  const int top = complex.dimension();
  if (top < 0) return {};
  const auto f = complex.f_vector();
  // Position of each face inside its own dimension.
  std::vector<std::size_t> offset(f.size() + 1, 0);
  for (std::size_t d = 0; d < f.size(); ++d) offset[d + 1] = offset[d] + f[d];

  // rank_d = rank of the boundary map from d-chains to (d-1)-chains.
  std::vector<std::size_t> rank(f.size() + 1, 0);
  for (std::size_t d = 1; d < f.size(); ++d) {
    std::vector<std::vector<std::size_t>> rows;
    rows.reserve(f[d]);
    for (FaceId id = static_cast<FaceId>(offset[d]); id < offset[d + 1]; ++id) {
      std::vector<std::size_t> cols;
      for (FaceId g : complex.facets(id)) cols.push_back(g - offset[d - 1]);
      rows.push_back(std::move(cols));
    }
    rank[d] = rank_mod2(rows, f[d - 1]);
  }
  std::vector<std::size_t> betti(f.size());
  for (std::size_t d = 0; d < f.size(); ++d) betti[d] = f[d] - rank[d] - rank[d + 1];
  return betti;
}

}  // namespace morsetile
