#include "morsetile/tiling.hpp"

#include <algorithm>
#include <limits>

namespace morsetile {

namespace {

constexpr std::size_t kNoTile = std::numeric_limits<std::size_t>::max();

// Owner of every ambient face, plus carrier membership, indexed by FaceId.
struct Ownership {
  std::vector<std::size_t> owner;
  std::vector<char> in_carrier;
};

Ownership assign_owners(const MorseTiling& t, ValidationReport& report) {
  const SimplicialComplex& k = t.ambient;
  Ownership own{std::vector<std::size_t>(k.face_count(), kNoTile),
                std::vector<char>(k.face_count(), 0)};
  for (const Simplex& f : t.carrier) {
    if (auto id = k.find(f)) {
      own.in_carrier[*id] = 1;
    } else {
      report.violations.push_back({Violation::Kind::OutsideAmbient, f, -1,
                                   "carrier face " + f.to_string() + " is not in the complex"});
    }
  }
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const MorseTile& tile = t.tiles[i];
    if (tile.is_empty()) continue;
    if (!k.contains(tile.closure())) {
      report.violations.push_back({Violation::Kind::OutsideAmbient, tile.closure(), -1,
                                   "tile " + std::to_string(i) + " closure is not in the complex"});
      continue;
    }
    for (const Simplex& f : tile.faces()) {
      const FaceId id = k.id(f);
      if (!own.in_carrier[id])
        report.violations.push_back({Violation::Kind::OutsideCarrier, f, -1,
                                     "face of tile " + std::to_string(i) + " is not in the carrier"});
      if (own.owner[id] != kNoTile) {
        report.violations.push_back({Violation::Kind::Overlap, f, -1,
                                     "face lies in tiles " + std::to_string(own.owner[id]) + " and " +
                                         std::to_string(i)});
        continue;
      }
      own.owner[id] = i;
    }
  }
  for (FaceId id = 0; id < k.face_count(); ++id)
    if (own.in_carrier[id] && own.owner[id] == kNoTile)
      report.violations.push_back({Violation::Kind::Uncovered, k.face(id), -1, "carrier face lies in no tile"});
  return own;
}

// For every owned face phi and every carrier face psi of phi: the tile of psi
// must be at least as big, and with `prefixes` it must also come no later.
void check_filtration(const MorseTiling& t, const Ownership& own, bool prefixes, ValidationReport& report) {
  const SimplicialComplex& k = t.ambient;
  std::vector<char> dim_reported(k.face_count(), 0), prefix_reported(k.face_count(), 0);
  for (FaceId id = 0; id < k.face_count(); ++id) {
    const std::size_t ti = own.owner[id];
    if (ti == kNoTile) continue;
    const Simplex& phi = k.face(id);
    const int phi_dim = t.tiles[ti].dim();
    const std::uint64_t full = phi.full_mask();
    for (std::uint64_t m = 1; m < full; ++m) {
      const FaceId sid = k.id(phi.sub(m));
      const std::size_t si = own.owner[sid];
      if (!own.in_carrier[sid] || si == kNoTile) continue;
      const int psi_dim = t.tiles[si].dim();
      if (psi_dim < phi_dim && !dim_reported[sid]) {
        dim_reported[sid] = 1;
        report.violations.push_back(
            {Violation::Kind::Filtration, k.face(sid), psi_dim,
             "face of a " + std::to_string(psi_dim) + "-tile bounds " + phi.to_string() + " of a " +
                 std::to_string(phi_dim) + "-tile"});
      }
      if (prefixes && si > ti && !prefix_reported[sid]) {
        prefix_reported[sid] = 1;
        report.violations.push_back(
            {Violation::Kind::Prefix, k.face(sid), static_cast<int>(ti) + 1,
             "prefix of length " + std::to_string(ti + 1) + " contains " + phi.to_string() +
                 " but not its face, which comes in tile " + std::to_string(si + 1)});
      }
    }
  }
}

}  // namespace

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::OutsideAmbient: return "outside-ambient";
    case Violation::Kind::OutsideCarrier: return "outside-carrier";
    case Violation::Kind::Overlap: return "overlap";
    case Violation::Kind::Uncovered: return "uncovered";
    case Violation::Kind::Filtration: return "filtration";
    case Violation::Kind::Prefix: return "prefix";
  }
  return "unknown";
}

MorseTiling tiling_from_tiles(SimplicialComplex ambient, std::vector<MorseTile> tiles, bool ordered) {
  std::vector<Simplex> faces;
  for (const MorseTile& t : tiles)
    for (Simplex f : t.faces()) faces.push_back(std::move(f));
  return MorseTiling{std::move(ambient), FaceSet(std::move(faces)), std::move(tiles), ordered};
}

ValidationReport validate_tiling(const MorseTiling& tiling) {
  ValidationReport report;
  const Ownership own = assign_owners(tiling, report);
  check_filtration(tiling, own, false, report);
  return report;
}

ValidationReport validate_shelling(const MorseTiling& tiling) {
  if (!tiling.ordered) throw Error("validate_shelling needs an ordered tiling");
  ValidationReport report;
  const Ownership own = assign_owners(tiling, report);
  check_filtration(tiling, own, true, report);
  return report;
}

MorseTiling classical_shelling_order(const SimplicialComplex& complex, const std::vector<Simplex>& order) {
  std::vector<Simplex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != complex.maximal_simplices())
    throw Error("order must list every maximal simplex exactly once");
  std::vector<char> covered(complex.face_count(), 0);
  std::vector<MorseTile> tiles;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<Simplex> diff;
    for (const Simplex& f : order[i].faces()) {
      const FaceId id = complex.id(f);
      if (!covered[id]) {
        diff.push_back(f);
        covered[id] = 1;
      }
    }
    MorseTile tile;
    try {
      tile = normalize_tile(diff);
    } catch (const Error&) {
      throw Error("simplex " + std::to_string(i + 1) + " " + order[i].to_string() +
                  ": difference with the earlier simplices is not a Morse tile");
    }
    if (!tile.is_basic())
      throw Error("simplex " + std::to_string(i + 1) + " " + order[i].to_string() +
                  ": difference is " + tile.kind().to_string() + ", not a basic tile");
    tiles.push_back(std::move(tile));
  }
  return MorseTiling{complex, FaceSet::all(complex), std::move(tiles), true};
}

CriticalVector critical_vector(const MorseTiling& tiling) {
  int top = tiling.carrier.dimension();
  for (const MorseTile& t : tiling.tiles) top = std::max(top, t.dim());
  CriticalVector c(static_cast<std::size_t>(std::max(top, 0) + 1), 0);
  for (const MorseTile& t : tiling.tiles)
    if (t.is_critical()) ++c[static_cast<std::size_t>(t.index())];
  return c;
}

std::size_t HTable::h(int j, int k) const {
  auto it = basic.find({j, k});
  return it == basic.end() ? 0 : it->second;
}

HTable h_table(const MorseTiling& tiling) {
  HTable h;
  for (const MorseTile& t : tiling.tiles) {
    if (t.is_empty()) continue;
    ++h.total;
    if (t.is_basic()) ++h.basic[{t.dim(), t.order()}];
    else if (t.is_critical()) ++h.critical[{t.dim(), t.index()}];
    else ++h.regular[{t.dim(), t.order(), t.removed_dim()}];
  }
  for (const auto& [key, count] : h.basic) {
    if (key.second == 0) h.f0_lhs += static_cast<std::size_t>(key.first + 1) * count;
    if (key.second == 1) h.f0_lhs += count;
  }
  h.f0_rhs = tiling.carrier.vertices().size();
  return h;
}

MorseTiling skeleton_tiling(const MorseTiling& tiling, int i) {
  if (i < 0) throw Error("skeleton level must be non-negative");
  MorseTiling out;
  out.ambient = tiling.ambient.empty() ? tiling.ambient : skeleton(tiling.ambient, i);
  std::vector<Simplex> carrier;
  for (const Simplex& f : tiling.carrier)
    if (f.dim() <= i) carrier.push_back(f);
  out.carrier = FaceSet(std::move(carrier));
  for (const MorseTile& t : tiling.tiles)
    for (MorseTile& piece : skeleton_partition(t, i)) out.tiles.push_back(std::move(piece));
  out.ordered = tiling.ordered;
  return out;
}

std::vector<Simplex> pack_simplices(const MorseTiling& tiling) {
  std::vector<Simplex> out;
  for (const MorseTile& t : tiling.tiles) {
    if (!t.is_basic() || t.order() > 1) continue;
    const Vertex v = t.order() == 1 ? t.witnesses().front() : t.closure().front();
    std::vector<Vertex> chain{v};
    std::vector<Vertex> ids{tiling.ambient.id(Simplex{v})};
    for (Vertex w : t.closure()) {
      if (w == v) continue;
      chain.insert(std::lower_bound(chain.begin(), chain.end(), w), w);
      ids.push_back(tiling.ambient.id(make_sorted_simplex(chain)));
    }
    out.emplace_back(std::move(ids));
  }
  return out;
}

}  // namespace morsetile
