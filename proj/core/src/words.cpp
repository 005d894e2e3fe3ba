#include "morsetile/words.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>

namespace morsetile {

namespace {

std::string least_rotation(const std::string& s) {
  std::string best = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::string r = s.substr(i) + s.substr(0, i);
    if (r < best) best = std::move(r);
  }
  return best;
}

// Rotation of the canonical letters starting at `pos`.
std::string rotated(const CyclicWord& w, std::size_t pos) {
  const std::string& s = w.str();
  pos %= s.size();
  return s.substr(pos) + s.substr(0, pos);
}

}  // namespace

CyclicWord::CyclicWord(const std::string& letters) {
  if (letters.empty()) throw Error("empty word");
  for (char c : letters)
    if (c != 'd' && c != 'u') throw Error(std::string("word letter '") + c + "' is not d or u");
  letters_ = least_rotation(letters);
}

std::size_t CyclicWord::count(char letter) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

bool CyclicWord::is_annulus_word() const { return count('d') >= 3 && count('u') >= 3; }

CyclicWord CyclicWord::reversed() const { return CyclicWord(std::string(letters_.rbegin(), letters_.rend())); }

CyclicWord word_compress(const CyclicWord& w, std::size_t pos) {
  if (w.size() < 2) throw Error("word too short to compress");
  const std::string r = rotated(w, pos);
  if (r[0] != r[1]) throw Error("no dd or uu at position " + std::to_string(pos) + " of " + w.str());
  return CyclicWord(r.substr(1));
}

CyclicWord word_suppress(const CyclicWord& w, std::size_t pos) {
  if (w.size() < 3) throw Error("word too short to suppress");
  const std::string r = rotated(w, pos);
  if (!(r[0] == r[2] && r[0] != r[1]))
    throw Error("no udu or dud at position " + std::to_string(pos) + " of " + w.str());
  return CyclicWord(r.substr(0, 2) + r.substr(3));
}

CyclicWord word_subdivide(const CyclicWord& w) {
  std::string out;
  for (char c : w.str()) out += c == 'u' ? "duud" : "dd";
  return CyclicWord(out);
}

CyclicWord apply_rewrite(const CyclicWord& w, const std::string& op, int position) {
  if (op == "compress") return word_compress(w, static_cast<std::size_t>(position));
  if (op == "suppress") return word_suppress(w, static_cast<std::size_t>(position));
  if (op == "subdivide") return word_subdivide(w);
  throw Error("unknown rewrite '" + op + "'");
}

const CyclicWord& target_word() {
  static const CyclicWord w("ududdu");
  return w;
}

namespace {

// Shortest compress/suppress path from `from` to the target, through annulus
// words only.
std::vector<Rewrite> shortest_reduction(const CyclicWord& from) {
  std::map<CyclicWord, Rewrite> parent;  // word -> step that produced it
  std::map<CyclicWord, CyclicWord> prev;
  std::queue<CyclicWord> queue;
  std::set<CyclicWord> seen{from};
  queue.push(from);
  while (!queue.empty()) {
    const CyclicWord w = queue.front();
    queue.pop();
    if (w == target_word()) {
      std::vector<Rewrite> path;
      for (CyclicWord cur = w; cur != from; cur = prev.at(cur)) path.push_back(parent.at(cur));
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t p = 0; p < w.size(); ++p) {
      for (const char* op : {"compress", "suppress"}) {
        CyclicWord next;
        try {
          next = apply_rewrite(w, op, static_cast<int>(p));
        } catch (const Error&) {
          continue;
        }
        if (!next.is_annulus_word() || !seen.insert(next).second) continue;
        parent.emplace(next, Rewrite{op, static_cast<int>(p), next});
        prev.emplace(next, w);
        queue.push(next);
      }
    }
  }
  throw Error("internal error: no reduction from " + from.str() + " to " + target_word().str());
}

const std::vector<Rewrite>& scripted_tail(const CyclicWord& six) {
  static const std::map<CyclicWord, std::vector<Rewrite>> table = [] {
    std::map<CyclicWord, std::vector<Rewrite>> t;
    for (const char* s : {"ududdu", "duduud", "uuuddd", "ududud"}) {
      const CyclicWord w(s);
      t.emplace(w, shortest_reduction(word_subdivide(w)));
    }
    return t;
  }();
  auto it = table.find(six);
  if (it == table.end()) throw Error("internal error: unexpected six-letter word " + six.str());
  return it->second;
}

std::optional<std::size_t> find_pattern(const CyclicWord& w, const std::string& pattern) {
  for (std::size_t p = 0; p < w.size(); ++p) {
    bool match = true;
    for (std::size_t i = 0; i < pattern.size() && match; ++i) match = w.at(p + i) == pattern[i];
    if (match) return p;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rewrite> reduce_word(const CyclicWord& w) {
  if (!w.is_annulus_word()) throw Error("each letter must appear at least three times in " + w.str());
  std::vector<Rewrite> trace;
  CyclicWord cur = w;
  while (cur.size() > 6) {
    const char x = cur.count('d') >= 4 ? 'd' : 'u';
    const char y = x == 'd' ? 'u' : 'd';
    std::string op;
    std::optional<std::size_t> pos;
    if ((pos = find_pattern(cur, std::string{x, x}))) op = "compress";
    else if ((pos = find_pattern(cur, std::string{x, y, x}))) op = "suppress";
    else if ((pos = find_pattern(cur, std::string{y, y}))) op = "compress";
    else throw Error("internal error: no reduction applies to " + cur.str());
    cur = apply_rewrite(cur, op, static_cast<int>(*pos));
    trace.push_back({op, static_cast<int>(*pos), cur});
  }
  const CyclicWord six = cur;
  cur = word_subdivide(cur);
  trace.push_back({"subdivide", -1, cur});
  for (const Rewrite& r : scripted_tail(six)) trace.push_back(r);
  return trace;
}

Annulus annulus_of_word(const CyclicWord& w) {
  if (!w.is_annulus_word()) throw Error("each letter must appear at least three times in " + w.str());
  const Vertex nd = static_cast<Vertex>(w.count('d'));
  const Vertex nu = static_cast<Vertex>(w.count('u'));
  Annulus a;
  for (Vertex i = 0; i < nd; ++i) a.boundary_d.push_back(i);
  for (Vertex i = 0; i < nu; ++i) a.boundary_u.push_back(nd + i);
  std::vector<Simplex> triangles;
  std::set<std::pair<Vertex, Vertex>> interior;
  Vertex p = 0, q = 0;
  for (char c : w.str()) {
    if (!interior.emplace(p, q).second)
      throw Error("word " + w.str() + " has no simplicial model: one letter occurs in a single run");
    if (c == 'd') {
      triangles.push_back(Simplex{p, (p + 1) % nd, nd + q});
      p = (p + 1) % nd;
    } else {
      triangles.push_back(Simplex{nd + q, nd + (q + 1) % nu, p});
      q = (q + 1) % nu;
    }
  }
  a.complex = SimplicialComplex::from_maximal(std::move(triangles), "annulus(" + w.str() + ")");
  return a;
}

CyclicWord word_of_annulus(const SimplicialComplex& annulus, const std::vector<Vertex>& boundary_d,
                           const std::vector<Vertex>& boundary_u) {
  const std::set<Vertex> dset(boundary_d.begin(), boundary_d.end());
  const std::set<Vertex> uset(boundary_u.begin(), boundary_u.end());
  if (dset.empty() || uset.empty()) throw Error("both boundary components must be non-empty");
  for (Vertex v : dset)
    if (uset.count(v)) throw Error("vertex " + std::to_string(v) + " is on both boundary components");
  for (Vertex v : annulus.vertices())
    if (!dset.count(v) && !uset.count(v))
      throw Error("not simple: vertex " + std::to_string(v) + " is not on the boundary");
  if (annulus.dimension() != 2 || !annulus.is_pure()) throw Error("not simple: annulus must be a pure surface");

  const auto& triangles = annulus.maximal_simplices();
  std::vector<char> letter(triangles.size());
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const Simplex& t = triangles[i];
    const auto on_d = std::count_if(t.begin(), t.end(), [&](Vertex v) { return dset.count(v) > 0; });
    if (on_d == 0 || on_d == 3) throw Error("not simple: triangle " + t.to_string() + " misses a boundary");
    letter[i] = on_d == 2 ? 'd' : 'u';
    std::vector<Vertex> edge;
    for (Vertex v : t)
      if ((dset.count(v) > 0) == (letter[i] == 'd')) edge.push_back(v);
    if (annulus.cofacets(annulus.id(Simplex(edge))).size() != 1)
      throw Error("not simple: triangle " + t.to_string() + " has no edge on a boundary component");
  }

  auto is_interior = [&](const Simplex& e) { return dset.count(e[0]) != dset.count(e[1]); };
  auto triangle_index = [&](FaceId id) {
    return static_cast<std::size_t>(std::lower_bound(triangles.begin(), triangles.end(), annulus.face(id)) -
                                    triangles.begin());
  };
  auto other_interior = [&](const Simplex& t, const Simplex& e) {
    for (const Simplex& f : t.facets())
      if (f != e && is_interior(f)) return f;
    throw Error("not simple: triangle " + t.to_string() + " has a single interior edge");
  };

  const Vertex d0 = *dset.begin();
  std::optional<Vertex> d1;
  for (FaceId e : annulus.cofacets(annulus.id(Simplex{d0}))) {
    const Simplex& edge = annulus.face(e);
    const Vertex other = edge[0] == d0 ? edge[1] : edge[0];
    if (dset.count(other) && annulus.cofacets(e).size() == 1 && (!d1 || other < *d1)) d1 = other;
  }
  if (!d1) throw Error("not simple: no boundary edge at vertex " + std::to_string(d0));

  const Simplex start_edge{d0, *d1};
  const std::size_t start = triangle_index(annulus.cofacets(annulus.id(start_edge)).front());
  Simplex exit;
  for (const Simplex& f : triangles[start].facets())
    if (is_interior(f) && f.contains(*d1)) exit = f;

  std::string word;
  std::vector<char> seen(triangles.size(), 0);
  std::size_t cur = start;
  while (!seen[cur]) {
    seen[cur] = 1;
    word += letter[cur];
    const auto cof = annulus.cofacets(annulus.id(exit));
    if (cof.size() != 2) throw Error("not simple: interior edge " + exit.to_string() + " is not shared by two triangles");
    const std::size_t a = triangle_index(cof[0]), b = triangle_index(cof[1]);
    const std::size_t next = a == cur ? b : a;
    exit = other_interior(triangles[next], exit);
    cur = next;
  }
  if (cur != start || word.size() != triangles.size())
    throw Error("not an annulus: the triangles do not form a single cycle");
  return CyclicWord(word);
}

}  // namespace morsetile
