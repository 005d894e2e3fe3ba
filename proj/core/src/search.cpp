#include <algorithm>

#include "morsetile/tiling.hpp"

namespace morsetile {

namespace {

class ShellingSearch {
 public:
  ShellingSearch(const SimplicialComplex& complex, std::uint64_t budget)
      : complex_(complex),
        maximal_(complex.maximal_simplices()),
        tile_dim_(complex.face_count(), -1),
        used_(maximal_.size(), 0),
        budget_(budget) {}

  SearchResult run() {
    SearchResult result;
    const bool found = dfs();
    result.nodes = nodes_;
    if (found) {
      result.status = SearchResult::Status::Found;
      result.shelling = MorseTiling{complex_, FaceSet::all(complex_), tiles_, true};
    } else {
      result.status = exceeded_ ? SearchResult::Status::BudgetExceeded : SearchResult::Status::None;
    }
    return result;
  }

 private:
  bool dfs() {
    if (tiles_.size() == maximal_.size()) return true;
    for (std::size_t i = 0; i < maximal_.size(); ++i) {
      if (used_[i]) continue;
      if (++nodes_ > budget_) {
        exceeded_ = true;
        return false;
      }
      const Simplex& sigma = maximal_[i];
      std::vector<FaceId> fresh;
      std::vector<Simplex> diff;
      bool ok = true;
      for (const Simplex& f : sigma.faces()) {
        const FaceId id = complex_.id(f);
        if (tile_dim_[id] < 0) {
          fresh.push_back(id);
          diff.push_back(f);
        } else if (tile_dim_[id] < sigma.dim()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      MorseTile tile;
      try {
        tile = normalize_tile(diff);
      } catch (const Error&) {
        continue;
      }
      for (FaceId id : fresh) tile_dim_[id] = sigma.dim();
      used_[i] = 1;
      tiles_.push_back(std::move(tile));
      if (dfs()) return true;
      if (exceeded_) return false;
      tiles_.pop_back();
      used_[i] = 0;
      for (FaceId id : fresh) tile_dim_[id] = -1;
    }
    return false;
  }

  const SimplicialComplex& complex_;
  const std::vector<Simplex>& maximal_;
  std::vector<int> tile_dim_;
  std::vector<char> used_;
  std::vector<MorseTile> tiles_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace

std::string to_string(SearchResult::Status status) {
  switch (status) {
    case SearchResult::Status::Found: return "found";
    case SearchResult::Status::None: return "none";
    case SearchResult::Status::BudgetExceeded: return "budget exceeded";
  }
  return "unknown";
}

SearchResult search_shelling(const SimplicialComplex& complex, std::uint64_t budget) {
  return ShellingSearch(complex, budget).run();
}

}  // namespace morsetile
