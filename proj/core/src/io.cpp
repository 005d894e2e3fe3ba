#include "morsetile/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace morsetile {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const IoError&) {
    throw;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed ") + what + ": " + e.what());
  }
}

Vertex vertex_from_json(const json& v) {
  if (!v.is_number_unsigned()) throw IoError("vertex ids must be non-negative integers, got " + v.dump());
  const auto x = v.get<std::uint64_t>();
  if (x > std::numeric_limits<Vertex>::max()) throw IoError("vertex id too large: " + v.dump());
  return static_cast<Vertex>(x);
}

std::vector<Vertex> vertices_from_json(const json& j) {
  if (!j.is_array()) throw IoError("expected a list of vertex ids, got " + j.dump());
  std::vector<Vertex> out;
  for (const json& v : j) out.push_back(vertex_from_json(v));
  return out;
}

json faces_to_json(const std::vector<Simplex>& faces) {
  json a = json::array();
  for (const Simplex& f : faces) a.push_back(to_json(f));
  return a;
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(source + ": invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

json to_json(const Simplex& s) { return json(s.vertex_list()); }

Simplex simplex_from_json(const json& j) {
  std::vector<Vertex> vs = vertices_from_json(j);
  if (vs.empty()) throw IoError("a simplex needs at least one vertex");
  try {
    return Simplex(std::move(vs));
  } catch (const Error& e) {
    throw IoError(std::string(e.what()) + ": " + j.dump());
  }
}

json to_json(const SimplicialComplex& k) {
  json j;
  j["name"] = k.name();
  j["maximal_simplices"] = faces_to_json(k.maximal_simplices());
  return j;
}

SimplicialComplex complex_from_json(const json& j) {
  return guarded("complex", [&] {
    if (!j.is_object() || !j.contains("maximal_simplices"))
      throw IoError("a complex needs a \"maximal_simplices\" list");
    const json& ms = j.at("maximal_simplices");
    if (!ms.is_array()) throw IoError("\"maximal_simplices\" must be a list");
    if (ms.empty()) throw IoError("empty complex");
    std::vector<Simplex> simplices;
    for (const json& s : ms) simplices.push_back(simplex_from_json(s));
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string{};
    return SimplicialComplex::from_maximal(std::move(simplices), std::move(name));
  });
}

json to_json(const MorseTile& t) {
  json j;
  j["closure"] = to_json(t.closure());
  j["removed_witnesses"] = t.witnesses();
  j["removed_face"] = t.removed_face() ? to_json(*t.removed_face()) : json(nullptr);
  return j;
}

MorseTile tile_from_json(const json& j) {
  return guarded("tile", [&] {
    if (!j.is_object() || !j.contains("closure")) throw IoError("a tile needs a \"closure\"");
    Simplex closure = simplex_from_json(j.at("closure"));
    std::vector<Vertex> witnesses;
    if (j.contains("removed_witnesses")) witnesses = vertices_from_json(j.at("removed_witnesses"));
    std::optional<Simplex> removed;
    if (j.contains("removed_face") && !j.at("removed_face").is_null()) {
      std::vector<Vertex> vs = vertices_from_json(j.at("removed_face"));
      if (!vs.empty()) removed = simplex_from_json(j.at("removed_face"));
    }
    try {
      return MorseTile(std::move(closure), std::move(witnesses), std::move(removed));
    } catch (const IoError&) {
      throw;
    } catch (const Error& e) {
      throw IoError(std::string("invalid tile: ") + e.what());
    }
  });
}

json to_json(const MorseTiling& t) {
  json j;
  j["complex"] = to_json(t.ambient);
  if (t.carrier == FaceSet::all(t.ambient)) j["carrier"] = "all";
  else j["carrier"] = faces_to_json(t.carrier.faces());
  j["ordered"] = t.ordered;
  json tiles = json::array();
  for (const MorseTile& tile : t.tiles) tiles.push_back(to_json(tile));
  j["tiles"] = std::move(tiles);
  return j;
}

MorseTiling tiling_from_json(const json& j) {
  return guarded("tiling", [&] {
    if (!j.is_object()) throw IoError("a tiling must be an object");
    for (const char* key : {"complex", "tiles"})
      if (!j.contains(key)) throw IoError(std::string("a tiling needs \"") + key + "\"");
    MorseTiling t;
    t.ambient = complex_from_json(j.at("complex"));
    const json carrier = j.value("carrier", json("all"));
    if (carrier.is_string()) {
      if (carrier.get<std::string>() != "all") throw IoError("carrier must be \"all\" or a list of faces");
      t.carrier = FaceSet::all(t.ambient);
    } else {
      if (!carrier.is_array()) throw IoError("carrier must be \"all\" or a list of faces");
      std::vector<Simplex> faces;
      for (const json& f : carrier) faces.push_back(simplex_from_json(f));
      t.carrier = FaceSet(std::move(faces));
    }
    t.ordered = j.value("ordered", false);
    if (!j.at("tiles").is_array()) throw IoError("\"tiles\" must be a list");
    for (const json& tile : j.at("tiles")) t.tiles.push_back(tile_from_json(tile));
    return t;
  });
}

json to_json(const DiscreteVectorField& f) {
  json a = json::array();
  for (const auto& [lo, hi] : f.pairs()) a.push_back(json::array({to_json(lo), to_json(hi)}));
  return a;
}

DiscreteVectorField field_from_json(const json& j, FaceSet domain) {
  return guarded("field", [&] {
    if (!j.is_array()) throw IoError("a field must be a list of [face, coface] pairs");
    std::vector<std::pair<Simplex, Simplex>> pairs;
    for (const json& p : j) {
      if (!p.is_array() || p.size() != 2) throw IoError("field entries must be [face, coface]: " + p.dump());
      pairs.emplace_back(simplex_from_json(p[0]), simplex_from_json(p[1]));
    }
    return DiscreteVectorField(std::move(domain), std::move(pairs));
  });
}

json to_json(const DiscreteMorseFunction& f) {
  json a = json::array();
  for (const auto& [s, v] : f.values) a.push_back(json::array({to_json(s), v.num, v.den}));
  return a;
}

DiscreteMorseFunction morse_function_from_json(const json& j) {
  return guarded("Morse function", [&] {
    if (!j.is_array()) throw IoError("a Morse function must be a list of [face, num, den]");
    DiscreteMorseFunction f;
    for (const json& e : j) {
      if (!e.is_array() || e.size() != 3) throw IoError("entries must be [face, num, den]: " + e.dump());
      const auto den = e[2].get<std::int64_t>();
      if (den == 0) throw IoError("zero denominator: " + e.dump());
      f.values[simplex_from_json(e[0])] = Rational(e[1].get<std::int64_t>(), den);
    }
    return f;
  });
}

json to_json(const std::vector<Rewrite>& trace) {
  json a = json::array();
  for (const Rewrite& r : trace) {
    json step;
    step["op"] = r.op;
    step["position"] = r.position;
    step["result"] = r.result.str();
    a.push_back(std::move(step));
  }
  return a;
}

json to_json(const ValidationReport& r) {
  json j;
  j["valid"] = r.valid();
  json v = json::array();
  for (const Violation& x : r.violations) {
    json e;
    e["kind"] = to_string(x.kind);
    e["face"] = to_json(x.face);
    e["level"] = x.level;
    e["message"] = x.message;
    v.push_back(std::move(e));
  }
  j["violations"] = std::move(v);
  return j;
}

json to_json(const FieldReport& r) {
  json j;
  j["valid"] = r.valid();
  json v = json::array();
  for (const FieldViolation& x : r.violations)
    v.push_back({{"condition", x.condition}, {"face", to_json(x.face)}, {"message", x.message}});
  j["violations"] = std::move(v);
  return j;
}

json to_json(const MorseReport& r) {
  json j;
  j["valid"] = r.valid();
  json v = json::array();
  for (const MorseViolation& x : r.violations)
    v.push_back({{"condition", x.condition}, {"face", to_json(x.face)}, {"message", x.message}});
  j["violations"] = std::move(v);
  return j;
}

json to_json(const InequalityReport& r) {
  json j;
  j["certified"] = r.certified;
  if (!r.note.empty()) j["note"] = r.note;
  j["betti"] = r.betti;
  j["critical"] = r.critical;
  if (r.certified) {
    std::vector<bool> weak = r.weak;
    j["weak"] = weak;
    j["strong_lhs"] = r.strong_lhs;
    j["strong_rhs"] = r.strong_rhs;
    j["euler_equal"] = r.euler_equal;
  }
  j["holds"] = r.holds();
  return j;
}

json to_json(const HTable& h) {
  json j;
  json basic = json::array();
  for (const auto& [key, count] : h.basic)
    basic.push_back({{"dim", key.first}, {"order", key.second}, {"count", count}});
  json regular = json::array();
  for (const auto& [key, count] : h.regular)
    regular.push_back({{"dim", std::get<0>(key)}, {"order", std::get<1>(key)},
                       {"removed_dim", std::get<2>(key)}, {"count", count}});
  json critical = json::array();
  for (const auto& [key, count] : h.critical)
    critical.push_back({{"dim", key.first}, {"index", key.second}, {"count", count}});
  j["basic"] = std::move(basic);
  j["regular"] = std::move(regular);
  j["critical"] = std::move(critical);
  j["total"] = h.total;
  j["f0_lhs"] = h.f0_lhs;
  j["f0_rhs"] = h.f0_rhs;
  j["f0_identity"] = h.f0_identity_holds();
  return j;
}

}  // namespace morsetile
