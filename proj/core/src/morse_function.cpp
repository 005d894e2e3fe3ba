#include <algorithm>
#include <numeric>
#include <queue>

#include "morsetile/field.hpp"

namespace morsetile {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

__extension__ typedef __int128 Wide;

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide l = static_cast<Wide>(a.num) * b.den;
  const Wide r = static_cast<Wide>(b.num) * a.den;
  return l <=> r;
}

const Rational& DiscreteMorseFunction::at(const Simplex& face) const {
  auto it = values.find(face);
  if (it == values.end()) throw Error("no value for " + face.to_string());
  return it->second;
}

namespace {

std::string path_string(const VPath& cycle) {
  std::string s;
  for (std::size_t i = 0; i < cycle.size(); ++i) s += (i ? " -> " : "") + cycle[i].to_string();
  return s;
}

}  // namespace

CyclicFieldError::CyclicFieldError(VPath cycle)
    : Error("vector field has a closed V-path: " + path_string(cycle)), cycle_(std::move(cycle)) {}

DiscreteMorseFunction morse_function(const DiscreteVectorField& field) {
  if (auto cycle = find_closed_vpath(field)) throw CyclicFieldError(std::move(*cycle));
  const std::int64_t total = static_cast<std::int64_t>(std::max<std::size_t>(field.domain().size(), 1));

  DiscreteMorseFunction f;
  for (const Simplex& c : critical_cells(field)) f.values.emplace(c, Rational(c.dim()));

  // Pairs grouped by the dimension of their lower face. Within a level the
  // V-path digraph is acyclic; values decrease along its edges.
  std::map<int, std::vector<Simplex>> levels;
  for (const auto& [lo, hi] : field.pairs()) levels[lo.dim()].push_back(lo);
  for (auto& [d, nodes] : levels) {
    std::map<Simplex, std::vector<Simplex>> succ;
    std::map<Simplex, std::size_t> indegree;
    for (const Simplex& s : nodes) indegree.emplace(s, 0);
    for (const Simplex& s : nodes) {
      const Simplex hi = *field.up(s);
      for (Simplex& t : hi.facets()) {
        if (t == s || !indegree.count(t)) continue;
        ++indegree[t];
        succ[s].push_back(std::move(t));
      }
    }
    std::priority_queue<Simplex, std::vector<Simplex>, std::greater<>> ready;
    for (const auto& [s, deg] : indegree)
      if (deg == 0) ready.push(s);
    const std::int64_t count = static_cast<std::int64_t>(nodes.size());
    std::int64_t position = 0;
    while (!ready.empty()) {
      const Simplex s = ready.top();
      ready.pop();
      const std::int64_t rank = count - 1 - position++;
      const Rational value(2 * total * d + total + rank, 2 * total);
      f.values[s] = value;
      f.values[*field.up(s)] = value;
      for (const Simplex& t : succ[s])
        if (--indegree[t] == 0) ready.push(t);
    }
    if (position != count) throw Error("internal error: V-path digraph has a cycle");
  }
  return f;
}

MorseReport validate_morse_function(const DiscreteMorseFunction& f, const DiscreteVectorField* field) {
  MorseReport report;
  std::map<Simplex, int> low_cofaces, high_faces;
  for (const auto& [tau, ft] : f.values) {
    for (const Simplex& nu : tau.facets()) {
      auto it = f.values.find(nu);
      if (it == f.values.end()) continue;
      if (ft <= it->second) {
        ++low_cofaces[nu];
        ++high_faces[tau];
      }
    }
  }
  for (const auto& [s, n] : low_cofaces)
    if (n > 1)
      report.violations.push_back({1, s, s.to_string() + " has " + std::to_string(n) + " cofaces with value at most its own"});
  for (const auto& [s, n] : high_faces)
    if (n > 1)
      report.violations.push_back({2, s, s.to_string() + " has " + std::to_string(n) + " faces with value at least its own"});
  if (field) {
    const DiscreteVectorField g = gradient_of(f);
    if (g.pairs() != field->pairs()) {
      std::vector<std::pair<Simplex, Simplex>> diff;
      std::set_symmetric_difference(g.pairs().begin(), g.pairs().end(), field->pairs().begin(),
                                    field->pairs().end(), std::back_inserter(diff));
      for (const auto& [lo, hi] : diff)
        report.violations.push_back({3, lo, "gradient and field disagree on " + lo.to_string() + " -> " + hi.to_string()});
    }
  }
  return report;
}

DiscreteVectorField gradient_of(const DiscreteMorseFunction& f) {
  std::vector<Simplex> domain;
  std::vector<std::pair<Simplex, Simplex>> pairs;
  for (const auto& [tau, ft] : f.values) {
    domain.push_back(tau);
    for (Simplex& nu : tau.facets()) {
      auto it = f.values.find(nu);
      if (it != f.values.end() && ft <= it->second) pairs.emplace_back(std::move(nu), tau);
    }
  }
  return DiscreteVectorField(FaceSet(std::move(domain)), std::move(pairs));
}

bool InequalityReport::holds() const {
  if (!certified || !euler_equal) return false;
  if (!std::all_of(weak.begin(), weak.end(), [](bool b) { return b; })) return false;
  for (std::size_t k = 0; k < strong_lhs.size(); ++k)
    if (strong_lhs[k] > strong_rhs[k]) return false;
  return true;
}

InequalityReport morse_inequalities_report(const SimplicialComplex& complex, const MorseTiling& tiling) {
  if (tiling.carrier != FaceSet::all(complex))
    throw Error("the tiling must cover every face of the complex");
  InequalityReport r;
  r.betti = betti_numbers_mod2(complex);
  r.critical = critical_vector(tiling);
  const std::size_t n = std::max(r.betti.size(), r.critical.size());
  r.betti.resize(n, 0);
  r.critical.resize(n, 0);

  if (auto cycle = find_closed_vpath(compatible_field(tiling))) {
    r.note = "inequalities not certified by this method: the compatible field has a closed V-path";
    return r;
  }
  r.certified = true;
  long lhs = 0, rhs = 0;
  for (std::size_t k = 0; k < n; ++k) {
    r.weak.push_back(r.betti[k] <= r.critical[k]);
    lhs = static_cast<long>(r.betti[k]) - lhs;
    rhs = static_cast<long>(r.critical[k]) - rhs;
    r.strong_lhs.push_back(lhs);
    r.strong_rhs.push_back(rhs);
  }
  r.euler_equal = n == 0 || lhs == rhs;
  return r;
}

}  // namespace morsetile
