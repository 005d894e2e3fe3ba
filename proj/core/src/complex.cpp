#include "morsetile/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace morsetile {

struct SimplicialComplex::Data {
  std::string name;
  std::vector<Simplex> maximal;
  std::vector<Simplex> faces;
  std::unordered_map<Simplex, FaceId, SimplexHash> index;
  // CSR adjacency: facets and cofacets of each face.
  std::vector<std::size_t> facet_offsets, cofacet_offsets;
  std::vector<FaceId> facet_ids, cofacet_ids;
  int dim = -1;
};

SimplicialComplex::SimplicialComplex() {
  auto d = std::make_shared<Data>();
  d->facet_offsets = {0};
  d->cofacet_offsets = {0};
  data_ = std::move(d);
}

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Simplex> simplices, std::string name) {
  auto d = std::make_shared<Data>();
  d->name = std::move(name);

  std::unordered_set<Simplex, SimplexHash> seen;
  for (const Simplex& s : simplices) {
    if (s.is_empty()) throw Error("a simplex of the complex is empty");
    if (s.size() > 62) throw Error("simplex dimension too large: " + std::to_string(s.dim()));
    if (!seen.insert(s).second) continue;
    const std::uint64_t full = s.full_mask();
    for (std::uint64_t m = 1; m < full; ++m) seen.insert(s.sub(m));
  }
  d->faces.assign(seen.begin(), seen.end());
  std::sort(d->faces.begin(), d->faces.end(), ByDimension{});
  d->index.reserve(d->faces.size());
  for (FaceId i = 0; i < d->faces.size(); ++i) d->index.emplace(d->faces[i], i);

  const std::size_t nf = d->faces.size();
  std::vector<std::size_t> cofacet_count(nf, 0);
  d->facet_offsets.reserve(nf + 1);
  d->facet_offsets.push_back(0);
  for (const Simplex& f : d->faces) {
    if (f.size() > 1) {
      for (Vertex v : f) {
        FaceId id = d->index.at(f.without(v));
        d->facet_ids.push_back(id);
        ++cofacet_count[id];
      }
      // Facets in ascending order of FaceId.
      std::sort(d->facet_ids.end() - static_cast<std::ptrdiff_t>(f.size()), d->facet_ids.end());
    }
    d->facet_offsets.push_back(d->facet_ids.size());
  }
  d->cofacet_offsets.assign(nf + 1, 0);
  for (std::size_t i = 0; i < nf; ++i) d->cofacet_offsets[i + 1] = d->cofacet_offsets[i] + cofacet_count[i];
  d->cofacet_ids.resize(d->cofacet_offsets[nf]);
  std::vector<std::size_t> fill(d->cofacet_offsets.begin(), d->cofacet_offsets.end() - 1);
  for (FaceId i = 0; i < nf; ++i)
    for (std::size_t j = d->facet_offsets[i]; j < d->facet_offsets[i + 1]; ++j)
      d->cofacet_ids[fill[d->facet_ids[j]]++] = i;

  for (FaceId i = 0; i < nf; ++i)
    if (cofacet_count[i] == 0) d->maximal.push_back(d->faces[i]);
  std::sort(d->maximal.begin(), d->maximal.end());
  d->dim = nf ? d->faces.back().dim() : -1;
  return SimplicialComplex(std::move(d));
}

const std::string& SimplicialComplex::name() const { return data_->name; }

SimplicialComplex SimplicialComplex::with_name(std::string name) const {
  auto d = std::make_shared<Data>(*data_);
  d->name = std::move(name);
  return SimplicialComplex(std::move(d));
}

const std::vector<Simplex>& SimplicialComplex::maximal_simplices() const { return data_->maximal; }
const std::vector<Simplex>& SimplicialComplex::faces() const { return data_->faces; }
int SimplicialComplex::dimension() const { return data_->dim; }

bool SimplicialComplex::is_pure() const {
  return std::all_of(data_->maximal.begin(), data_->maximal.end(),
                     [&](const Simplex& s) { return s.dim() == data_->dim; });
}

std::optional<FaceId> SimplicialComplex::find(const Simplex& face) const {
  auto it = data_->index.find(face);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

FaceId SimplicialComplex::id(const Simplex& face) const {
  auto it = data_->index.find(face);
  if (it == data_->index.end()) throw Error(face.to_string() + " is not a face of the complex");
  return it->second;
}

std::span<const FaceId> SimplicialComplex::facets(FaceId id) const {
  const auto& d = *data_;
  return {d.facet_ids.data() + d.facet_offsets[id], d.facet_offsets[id + 1] - d.facet_offsets[id]};
}

std::span<const FaceId> SimplicialComplex::cofacets(FaceId id) const {
  const auto& d = *data_;
  return {d.cofacet_ids.data() + d.cofacet_offsets[id],
          d.cofacet_offsets[id + 1] - d.cofacet_offsets[id]};
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const Simplex& f : data_->faces) {
    if (f.size() != 1) break;
    out.push_back(f.front());
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(data_->dim + 1), 0);
  for (const Simplex& s : data_->faces) ++f[static_cast<std::size_t>(s.dim())];
  return f;
}

std::vector<Simplex> SimplicialComplex::faces_of_dimension(int d) const {
  std::vector<Simplex> out;
  for (const Simplex& s : data_->faces)
    if (s.dim() == d) out.push_back(s);
  return out;
}

SimplicialComplex make_complex(const std::vector<std::vector<Vertex>>& maximal, std::string name) {
  if (maximal.empty()) throw Error("empty complex");
  std::vector<Simplex> simplices;
  simplices.reserve(maximal.size());
  for (const auto& vs : maximal) simplices.emplace_back(vs);
  return SimplicialComplex::from_maximal(std::move(simplices), std::move(name));
}

// FaceSet

FaceSet::FaceSet(std::vector<Simplex> faces) : faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  if (!faces_.empty() && faces_.front().is_empty()) throw Error("a face set cannot contain the empty face");
}

FaceSet FaceSet::all(const SimplicialComplex& complex) { return FaceSet(complex.faces()); }

bool FaceSet::contains(const Simplex& face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

std::vector<Vertex> FaceSet::vertices() const {
  std::vector<Vertex> out;
  for (const Simplex& f : faces_)
    if (f.size() == 1) out.push_back(f.front());
  return out;
}

int FaceSet::dimension() const {
  int d = -1;
  for (const Simplex& f : faces_) d = std::max(d, f.dim());
  return d;
}

bool FaceSet::is_within(const SimplicialComplex& complex) const {
  return std::all_of(faces_.begin(), faces_.end(),
                     [&](const Simplex& f) { return complex.contains(f); });
}

FaceSet set_union(const FaceSet& a, const FaceSet& b) {
  std::vector<Simplex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FaceSet(std::move(out));
}

FaceSet set_difference(const FaceSet& a, const FaceSet& b) {
  std::vector<Simplex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FaceSet(std::move(out));
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int j) {
  if (j < 0) throw Error("skeleton level must be non-negative");
  if (j >= complex.dimension()) return complex;
  std::vector<Simplex> kept;
  for (const Simplex& f : complex.faces())
    if (f.dim() <= j) kept.push_back(f);
  return SimplicialComplex::from_maximal(std::move(kept), complex.name());
}

// Subdivision

std::vector<Simplex> Subdivision::flag(const Simplex& sd_face) const {
  std::vector<Simplex> out;
  out.reserve(sd_face.size());
  for (Vertex v : sd_face) out.push_back(base.face(v));
  std::sort(out.begin(), out.end(), ByDimension{});
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!out[i - 1].is_proper_face_of(out[i]))
      throw Error(sd_face.to_string() + " is not a flag of the base complex");
  return out;
}

const Simplex& Subdivision::carrier(const Simplex& sd_face) const {
  // FaceIds are ordered by dimension first, so the largest id is the top face.
  return base.face(sd_face.back());
}

Simplex Subdivision::from_flag(std::span<const Simplex> chain) const {
  std::vector<Vertex> ids;
  ids.reserve(chain.size());
  for (const Simplex& s : chain) ids.push_back(base.id(s));
  return Simplex(std::move(ids));
}

Subdivision barycentric_subdivision(const SimplicialComplex& complex) {
  std::vector<Simplex> flags;
  for (const Simplex& top : complex.maximal_simplices()) {
    std::vector<Vertex> order = top.vertex_list();
    do {
      std::vector<Vertex> ids;
      ids.reserve(order.size());
      std::vector<Vertex> prefix;
      for (Vertex v : order) {
        prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), v), v);
        ids.push_back(complex.id(make_sorted_simplex(prefix)));
      }
      flags.push_back(Simplex(std::move(ids)));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::string name = complex.name().empty() ? std::string{} : "Sd(" + complex.name() + ")";
  return Subdivision{complex, SimplicialComplex::from_maximal(std::move(flags), std::move(name))};
}

SimplicialComplex link(const SimplicialComplex& complex, Vertex v) {
  if (!complex.contains(Simplex{v})) throw Error("vertex " + std::to_string(v) + " is not in the complex");
  std::vector<Simplex> out;
  for (const Simplex& s : complex.maximal_simplices())
    if (s.contains(v) && s.size() > 1) out.push_back(s.without(v));
  return SimplicialComplex::from_maximal(std::move(out));
}

FaceSet star(const SimplicialComplex& complex, Vertex v) {
  if (!complex.contains(Simplex{v})) throw Error("vertex " + std::to_string(v) + " is not in the complex");
  std::vector<Simplex> out;
  for (const Simplex& s : complex.maximal_simplices())
    if (s.contains(v))
      for (Simplex f : s.faces()) out.push_back(std::move(f));
  return FaceSet(std::move(out));
}

namespace {

bool is_single_cycle(const SimplicialComplex& graph) {
  if (graph.dimension() != 1 || !graph.is_pure()) return false;
  const auto verts = graph.vertices();
  for (Vertex v : verts)
    if (graph.cofacets(graph.id(Simplex{v})).size() != 2) return false;
  // Every vertex has degree two, so one component means one cycle.
  return connected_components(graph).size() == 1;
}

}  // namespace

bool is_closed_surface(const SimplicialComplex& complex) {
  if (complex.dimension() != 2 || !complex.is_pure()) return false;
  for (FaceId i = 0; i < complex.face_count(); ++i)
    if (complex.face(i).dim() == 1 && complex.cofacets(i).size() != 2) return false;
  for (Vertex v : complex.vertices())
    if (!is_single_cycle(link(complex, v))) return false;
  return true;
}

std::vector<std::vector<Simplex>> connected_components(const SimplicialComplex& complex) {
  const auto verts = complex.vertices();
  std::unordered_map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < verts.size(); ++i) pos.emplace(verts[i], i);
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Simplex& s : complex.maximal_simplices()) {
    std::size_t r = root(pos.at(s.front()));
    for (Vertex v : s) {
      std::size_t q = root(pos.at(v));
      if (q != r) parent[q] = r;
    }
  }
  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<std::vector<Simplex>> out;
  for (const Simplex& s : complex.maximal_simplices()) {
    std::size_t r = root(pos.at(s.front()));
    auto [it, fresh] = slot.emplace(r, out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(s);
  }
  return out;
}

long euler_characteristic(const FaceSet& faces) {
  long chi = 0;
  for (const Simplex& f : faces) chi += (f.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

long euler_characteristic(const SimplicialComplex& complex) {
  long chi = 0;
  for (const Simplex& f : complex.faces()) chi += (f.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

bool single_face_intersection(const SimplicialComplex& complex, const SimplicialComplex& sub) {
  for (const Simplex& s : sub.maximal_simplices())
    if (!complex.contains(s)) throw Error("second complex is not a subcomplex: " + s.to_string());
  // Checking maximal simplices suffices: a face of sigma meets sub in a face of
  // the single face that sigma meets it in.
  for (const Simplex& sigma : complex.maximal_simplices()) {
    std::vector<Vertex> hull;
    bool any = false;
    const std::uint64_t full = sigma.full_mask();
    for (std::uint64_t m = 1; m <= full; ++m) {
      Simplex f = sigma.sub(m);
      if (!sub.contains(f)) continue;
      any = true;
      hull = vertex_union(hull, f.vertices());
    }
    if (any && !sub.contains(make_sorted_simplex(std::move(hull)))) return false;
  }
  return true;
}

}  // namespace morsetile
