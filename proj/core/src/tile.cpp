#include "morsetile/tile.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

namespace morsetile {

namespace {

constexpr std::size_t kMaxEnumerable = 30;

struct Masks {
  std::uint64_t full = 0, a = 0, tau = 0;
  bool has_tau = false;

  bool member(std::uint64_t m) const {
    return m != 0 && (m & a) == a && !(has_tau && (m & ~tau) == 0);
  }
};

Masks masks_of(const MorseTile& t) {
  Masks m;
  const Simplex& c = t.closure();
  m.full = c.full_mask();
  for (Vertex w : t.witnesses()) m.a |= c.mask_of(Simplex{w});
  if (t.removed_face()) {
    m.has_tau = true;
    m.tau = c.mask_of(*t.removed_face());
  }
  return m;
}

void require_enumerable(const Simplex& s) {
  if (s.size() > kMaxEnumerable)
    throw Error("tile of dimension " + std::to_string(s.dim()) + " is too large to enumerate");
}

std::string sup_sub(const std::string& base, const std::string& sup, int sub) {
  std::ostringstream os;
  os << base << '^';
  if (sup.size() > 1) os << '{' << sup << '}';
  else os << sup;
  os << '_' << sub;
  return os.str();
}

}  // namespace

MorseTile::MorseTile(Simplex closure, std::vector<Vertex> witnesses, std::optional<Simplex> removed_face)
    : closure_(std::move(closure)), witnesses_(std::move(witnesses)), removed_(std::move(removed_face)) {
  std::sort(witnesses_.begin(), witnesses_.end());
  if (std::adjacent_find(witnesses_.begin(), witnesses_.end()) != witnesses_.end())
    throw Error("repeated witness vertex");
  if (closure_.is_empty()) {
    if (!witnesses_.empty() || (removed_ && !removed_->is_empty()))
      throw Error("the empty tile has no witnesses or removed face");
    removed_.reset();
    return;
  }
  for (Vertex w : witnesses_)
    if (!closure_.contains(w))
      throw Error("witness " + std::to_string(w) + " is not a vertex of " + closure_.to_string());
  if (removed_ && removed_->is_empty()) removed_.reset();
  if (!removed_) return;

  const Simplex& tau = *removed_;
  if (!tau.is_face_of(closure_))
    throw Error("removed face " + tau.to_string() + " is not a face of " + closure_.to_string());
  if (tau == closure_) throw Error("removed face cannot be the whole closure");
  if (!vertex_subset(witnesses_, tau.vertices()))
    throw Error("removed face " + tau.to_string() + " must contain every witness");
  if (tau.dim() == closure_.dim() - 1) {
    // T^{n,n-1}_k is T^n_{k+1}: the removed facet becomes a witness.
    Vertex opposite = vertex_difference(closure_.vertices(), tau.vertices()).front();
    witnesses_.insert(std::lower_bound(witnesses_.begin(), witnesses_.end(), opposite), opposite);
    removed_.reset();
  }
}

bool MorseTile::is_critical() const {
  if (is_empty()) return false;
  if (!removed_) return order() == 0 || order() == dim() + 1;
  return removed_->size() == witnesses_.size();
}

int MorseTile::index() const {
  if (!is_critical()) throw Error(to_string() + " is not critical");
  if (!removed_) return order() == 0 ? 0 : dim();
  return order();
}

TileKind MorseTile::kind() const {
  TileKind k;
  if (is_empty()) return k;
  k.n = dim();
  if (is_critical()) {
    k.cls = TileKind::Class::Critical;
    k.k = index();
  } else if (!removed_) {
    k.cls = TileKind::Class::Basic;
    k.k = order();
  } else {
    k.cls = TileKind::Class::Regular;
    k.k = order();
    k.l = removed_dim();
  }
  return k;
}

std::string TileKind::to_string() const {
  switch (cls) {
    case Class::Empty: return "T^{-1}_0";
    case Class::Basic: return sup_sub("T", std::to_string(n), k);
    case Class::Critical: return sup_sub("C", std::to_string(n), k);
    case Class::Regular: return sup_sub("T", std::to_string(n) + "," + std::to_string(l), k);
  }
  return {};
}

bool MorseTile::contains(const Simplex& face) const {
  if (face.is_empty() || !face.is_face_of(closure_)) return false;
  if (!vertex_subset(witnesses_, face.vertices())) return false;
  return !(removed_ && face.is_face_of(*removed_));
}

std::vector<Simplex> MorseTile::faces() const {
  std::vector<Simplex> out;
  if (is_empty()) return out;
  require_enumerable(closure_);
  const Masks m = masks_of(*this);
  // Walk the supersets of the witness mask.
  const std::uint64_t free = m.full & ~m.a;
  for (std::uint64_t s = free;; s = (s - 1) & free) {
    std::uint64_t mask = s | m.a;
    if (m.member(mask)) out.push_back(closure_.sub(mask));
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t MorseTile::face_count() const {
  if (is_empty()) return 0;
  require_enumerable(closure_);
  const std::size_t free = closure_.size() - witnesses_.size();
  std::size_t count = (std::size_t{1} << free) - (witnesses_.empty() ? 1 : 0);
  if (removed_) {
    const std::size_t inner = removed_->size() - witnesses_.size();
    count -= (std::size_t{1} << inner) - (witnesses_.empty() ? 1 : 0);
  }
  return count;
}

std::string MorseTile::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MorseTile& t) {
  if (t.is_empty()) return os << "T^{-1}_0";
  os << (t.is_basic() ? sup_sub("T", std::to_string(t.dim()), t.order())
                      : sup_sub("T", std::to_string(t.dim()) + "," + std::to_string(t.removed_dim()),
                                t.order()));
  os << " on " << t.closure() << " A={";
  for (std::size_t i = 0; i < t.witnesses().size(); ++i) os << (i ? "," : "") << t.witnesses()[i];
  os << '}';
  if (t.removed_face()) os << " tau=" << *t.removed_face();
  return os;
}

namespace {

Simplex range_simplex(int count) {
  std::vector<Vertex> vs(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) vs[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
  return make_sorted_simplex(std::move(vs));
}

}  // namespace

MorseTile standard_tile(int n, int k) {
  if (n < 0) throw Error("tile dimension must be non-negative");
  if (k < 0 || k > n + 1)
    throw Error("order " + std::to_string(k) + " out of range for dimension " + std::to_string(n));
  return MorseTile(range_simplex(n + 1), range_simplex(k).vertex_list());
}

MorseTile standard_morse_tile(int n, int k, int l) {
  if (!(0 <= k && k <= l + 1 && l + 1 <= n))
    throw Error("need 0 <= k <= l+1 <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k) +
                " l=" + std::to_string(l));
  // tau = A + {k+1..l+1} skips vertex k, so that l = n-1 gives T^n_{k+1} itself
  std::vector<Vertex> tau = range_simplex(k).vertex_list();
  for (int v = k + 1; v <= l + 1; ++v) tau.push_back(static_cast<Vertex>(v));
  return MorseTile(range_simplex(n + 1), range_simplex(k).vertex_list(),
                   tau.empty() ? std::optional<Simplex>() : std::optional<Simplex>(Simplex(tau)));
}

MorseTile critical_tile(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw Error("critical index " + std::to_string(k) + " out of range for dimension " + std::to_string(n));
  if (k == n) return standard_tile(n, n + 1);
  return standard_morse_tile(n, k, k - 1);
}

long tile_chi(const MorseTile& t) {
  long chi = 0;
  for (const Simplex& f : t.faces()) chi += f.dim() % 2 == 0 ? 1 : -1;
  return chi;
}

std::vector<MorseTile> boundary_partition(const MorseTile& t, std::span<const Vertex> facet_order) {
  if (!t.is_basic()) throw Error("boundary_partition needs a basic tile, got " + t.to_string());
  if (t.dim() < 1) throw Error("boundary_partition needs a tile of dimension at least 1");
  const std::vector<Vertex> rest = vertex_difference(t.closure().vertices(), t.witnesses());
  std::vector<Vertex> order(facet_order.begin(), facet_order.end());
  if (order.empty()) {
    order = rest;
  } else {
    std::vector<Vertex> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != rest) throw Error("facet order must list the non-witness vertices exactly once");
  }
  std::vector<MorseTile> out;
  std::vector<Vertex> witnesses = t.witnesses();
  for (Vertex w : order) {
    out.emplace_back(t.closure().without(w), witnesses);
    witnesses.insert(std::lower_bound(witnesses.begin(), witnesses.end(), w), w);
  }
  return out;
}

std::vector<MorseTile> codimension_one_partition(const MorseTile& t) {
  if (t.is_empty() || t.dim() < 1) return {};
  if (t.is_basic()) return boundary_partition(t);
  const Simplex& tau = *t.removed_face();
  // Start with a facet that contains tau, so only the first piece meets it.
  const Vertex first = vertex_difference(t.closure().vertices(), tau.vertices()).front();
  std::vector<MorseTile> out;
  out.emplace_back(t.closure().without(first), t.witnesses(), tau);
  std::vector<Vertex> witnesses = t.witnesses();
  witnesses.insert(std::lower_bound(witnesses.begin(), witnesses.end(), first), first);
  for (Vertex w : vertex_difference(t.closure().vertices(), t.witnesses())) {
    if (w == first) continue;
    out.emplace_back(t.closure().without(w), witnesses);
    witnesses.insert(std::lower_bound(witnesses.begin(), witnesses.end(), w), w);
  }
  return out;
}

std::vector<MorseTile> skeleton_partition(const MorseTile& t, int j) {
  if (j < 0) throw Error("skeleton level must be non-negative");
  if (t.is_empty()) return {};
  if (t.dim() <= j) return {t};
  std::vector<MorseTile> out;
  for (const MorseTile& piece : codimension_one_partition(t)) {
    if (piece.is_empty() || piece.face_count() == 0) continue;
    for (MorseTile& sub : skeleton_partition(piece, j)) out.push_back(std::move(sub));
  }
  return out;
}

MorseTile cone(const MorseTile& t, Vertex c, bool keep_apex, bool remove_base) {
  if (t.is_empty()) return keep_apex ? MorseTile(Simplex{c}, {}) : MorseTile::empty();
  if (t.closure().contains(c))
    throw Error("apex " + std::to_string(c) + " is a vertex of " + t.closure().to_string());
  const Simplex closure = t.closure().with(c);
  if (keep_apex) {
    if (!t.is_basic() || t.order() != 0)
      throw Error("a cone keeping its apex is a Morse tile only over a closed simplex");
    return MorseTile(closure, remove_base ? std::vector<Vertex>{c} : std::vector<Vertex>{});
  }
  std::vector<Vertex> witnesses = t.witnesses();
  if (remove_base) witnesses.insert(std::lower_bound(witnesses.begin(), witnesses.end(), c), c);
  std::optional<Simplex> removed;
  if (t.removed_face()) removed = t.removed_face()->with(c);
  else if (t.order() == 0) removed = Simplex{c};
  return MorseTile(closure, std::move(witnesses), std::move(removed));
}

MorseTile normalize_tile(std::span<const Simplex> faces) {
  std::vector<Simplex> set(faces.begin(), faces.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) throw Error("not a Morse tile: empty face set");
  if (set.front().is_empty()) throw Error("not a Morse tile: contains the empty face");

  std::vector<Vertex> hull;
  for (const Simplex& f : set) hull = vertex_union(hull, f.vertices());
  const Simplex closure = make_sorted_simplex(std::move(hull));
  if (!std::binary_search(set.begin(), set.end(), closure))
    throw Error("not a Morse tile: no unique maximal face");
  require_enumerable(closure);
  if (closure.size() == 1) return MorseTile(closure, {});

  std::uint64_t inter = closure.full_mask();
  std::vector<std::uint64_t> members;
  members.reserve(set.size());
  for (const Simplex& f : set) {
    members.push_back(closure.mask_of(f));
    inter &= members.back();
  }
  std::sort(members.begin(), members.end());
  const Simplex a = closure.sub(inter);

  // Faces containing the intersection that are missing from the set.
  std::uint64_t tau = 0;
  std::size_t missing = 0;
  const std::uint64_t free = closure.full_mask() & ~inter;
  for (std::uint64_t s = free;; s = (s - 1) & free) {
    const std::uint64_t m = s | inter;
    if (m != 0 && !std::binary_search(members.begin(), members.end(), m)) {
      tau |= m;
      ++missing;
    }
    if (s == 0) break;
  }
  if (missing == 0) return MorseTile(closure, a.vertex_list());
  if (tau == closure.full_mask()) throw Error("not a Morse tile: missing faces span the closure");
  const std::size_t interval = (std::size_t{1} << (std::popcount(tau) - std::popcount(inter))) -
                               (inter == 0 ? 1 : 0);
  if (interval != missing) throw Error("not a Morse tile: missing faces do not form an interval");
  return MorseTile(closure, a.vertex_list(), closure.sub(tau));
}

MorseTile normalize_tile(const FaceSet& faces) { return normalize_tile(std::span(faces.faces())); }

}  // namespace morsetile
