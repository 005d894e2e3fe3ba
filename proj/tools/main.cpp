// morsetile: command-line front end for the morsetile library.
//
// Exit codes: 0 success or valid, 1 invalid input object or violation found,
// 2 usage or I/O error.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morsetile/complex.hpp"
#include "morsetile/field.hpp"
#include "morsetile/handles.hpp"
#include "morsetile/io.hpp"
#include "morsetile/surface.hpp"
#include "morsetile/tile.hpp"
#include "morsetile/tiling.hpp"
#include "morsetile/words.hpp"

namespace mt = morsetile;
using mt::json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

constexpr double kMaxSubdivisionTiles = 1e7;

// Bad flag values that CLI11 cannot catch on its own.
class UsageError : public mt::Error {
 public:
  using mt::Error::Error;
};

struct Options {
  std::string complex_path;
  std::string tiling_path;
  std::string field_path;
  std::string out_path;
  std::string start;
  std::string variant = "one-handle";
  std::string format = "json";
  std::string word;
  int iterations = 1;
  std::optional<int> n, k, l;
  std::uint64_t budget = 10'000'000;
};

// Flattens a report into indented "key: value" lines.
void render_text(const json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_list = [](const json& a) {
    for (const json& x : a)
      if (x.is_structured() && !(x.is_array() && std::all_of(x.begin(), x.end(),
                                                           [](const json& y) { return y.is_primitive(); })))
        return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive() || (value.is_array() && scalar_list(value) && value.dump().size() < 100)) {
        os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      } else {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const json& x : j) {
      if (x.is_object()) {
        os << pad << "-\n";
        render_text(x, os, indent + 2);
      } else {
        os << pad << "- " << x.dump() << '\n';
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const Options& o, const json& report) {
  if (o.format == "text") render_text(report, std::cout, 0);
  else std::cout << report.dump(2) << '\n';
}

// Writes `artifact` to --out when given, otherwise embeds it in the report.
void deliver(const Options& o, json& report, const char* key, json artifact) {
  if (o.out_path.empty()) {
    report[key] = std::move(artifact);
  } else {
    mt::write_json_file(o.out_path, artifact);
    report["out"] = o.out_path;
  }
}

mt::SimplicialComplex load_complex(const Options& o) {
  if (o.complex_path.empty()) throw UsageError("--complex is required");
  return mt::complex_from_json(mt::read_json_file(o.complex_path));
}

mt::MorseTiling load_tiling(const Options& o) {
  if (o.tiling_path.empty()) throw UsageError("--tiling is required");
  return mt::tiling_from_json(mt::read_json_file(o.tiling_path));
}

// The tiling, checked against --complex when both are given.
mt::MorseTiling load_tiling_over_complex(const Options& o) {
  mt::MorseTiling t = load_tiling(o);
  if (!o.complex_path.empty()) {
    const mt::SimplicialComplex k = load_complex(o);
    if (k.maximal_simplices() != t.ambient.maximal_simplices())
      throw mt::IoError("the tiling is over a different complex than " + o.complex_path);
  }
  return t;
}

// Domain of a field file: the tiling's carrier, else all faces of the complex.
mt::FaceSet field_domain(const Options& o) {
  if (!o.tiling_path.empty()) return load_tiling(o).carrier;
  if (!o.complex_path.empty()) return mt::FaceSet::all(load_complex(o));
  throw UsageError("--tiling or --complex is required to give the field a domain");
}

mt::DiscreteVectorField load_field(const Options& o) {
  if (o.field_path.empty()) throw UsageError("--field is required");
  return mt::field_from_json(mt::read_json_file(o.field_path), field_domain(o));
}

mt::Simplex parse_start(const std::string& text) {
  std::vector<mt::Vertex> vs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    mt::Vertex v = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    while (first < last && *first == ' ') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw UsageError("--start expects comma-separated vertex ids");
    vs.push_back(v);
  }
  if (vs.empty()) throw UsageError("--start expects comma-separated vertex ids");
  try {
    return mt::Simplex(std::move(vs));
  } catch (const mt::Error& e) {
    throw UsageError(std::string("--start: ") + e.what());
  }
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

json critical_json(const mt::CriticalVector& c) { return json(c); }

json faces_json(const std::vector<mt::Simplex>& faces) {
  json a = json::array();
  for (const mt::Simplex& f : faces) a.push_back(mt::to_json(f));
  return a;
}

json tile_census(const mt::MorseTiling& t) {
  json a = json::array();
  for (const mt::MorseTile& tile : t.tiles) a.push_back(tile.kind().to_string());
  return a;
}

// --- subcommands -----------------------------------------------------------

int cmd_verify_tiling(const Options& o) {
  const mt::MorseTiling t = load_tiling_over_complex(o);
  const mt::ValidationReport r = mt::validate_tiling(t);
  json report = mt::to_json(r);
  report["tiles"] = t.tiles.size();
  report["critical"] = critical_json(mt::critical_vector(t));
  emit(o, report);
  return r.valid() ? kOk : kInvalid;
}

int cmd_verify_shelling(const Options& o) {
  mt::MorseTiling t = load_tiling_over_complex(o);
  t.ordered = true;
  const mt::ValidationReport r = mt::validate_shelling(t);
  json report = mt::to_json(r);
  report["tiles"] = t.tiles.size();
  report["critical"] = critical_json(mt::critical_vector(t));
  emit(o, report);
  return r.valid() ? kOk : kInvalid;
}

int cmd_shell_surface(const Options& o) {
  const mt::SimplicialComplex k = load_complex(o);
  std::optional<mt::Simplex> start;
  if (!o.start.empty()) start = parse_start(o.start);
  const mt::MorseTiling t = mt::shell_surface(k, start);
  json report;
  report["tiles"] = t.tiles.size();
  report["critical"] = critical_json(mt::critical_vector(t));
  report["kinds"] = tile_census(t);
  deliver(o, report, "tiling", mt::to_json(t));
  emit(o, report);
  return kOk;
}

int cmd_search_shelling(const Options& o) {
  const mt::SimplicialComplex k = load_complex(o);
  const mt::SearchResult r = mt::search_shelling(k, o.budget);
  json report;
  report["status"] = mt::to_string(r.status);
  report["nodes"] = r.nodes;
  if (r.shelling) {
    report["kinds"] = tile_census(*r.shelling);
    deliver(o, report, "tiling", mt::to_json(*r.shelling));
  }
  emit(o, report);
  return r.status == mt::SearchResult::Status::Found ? kOk : kInvalid;
}

int cmd_subdivide(const Options& o) {
  if (o.iterations < 0) throw UsageError("--iterations must be non-negative");
  const mt::MorseTiling t = load_tiling(o);
  const double predicted = mt::predicted_subdivision_size(t, o.iterations);
  if (predicted > kMaxSubdivisionTiles) {
    std::ostringstream msg;
    msg << "subdivision would produce " << static_cast<std::uint64_t>(predicted)
        << " tiles, more than the limit of " << static_cast<std::uint64_t>(kMaxSubdivisionTiles);
    throw UsageError(msg.str());
  }
  const mt::MorseTiling s = mt::subdivide_tiling(t, o.iterations);
  json report;
  report["iterations"] = o.iterations;
  report["tiles"] = s.tiles.size();
  report["critical_before"] = critical_json(mt::critical_vector(t));
  report["critical_after"] = critical_json(mt::critical_vector(s));
  deliver(o, report, "tiling", mt::to_json(s));
  emit(o, report);
  return kOk;
}

int cmd_skeleton(const Options& o) {
  const int level = require(o.n, "--n");
  if (level < 0) throw UsageError("--n must be non-negative");
  const mt::MorseTiling t = load_tiling(o);
  const mt::MorseTiling s = mt::skeleton_tiling(t, level);
  json report;
  report["level"] = level;
  report["tiles"] = s.tiles.size();
  report["critical"] = critical_json(mt::critical_vector(s));
  deliver(o, report, "tiling", mt::to_json(s));
  emit(o, report);
  return kOk;
}

int cmd_field(const Options& o) {
  const mt::MorseTiling t = load_tiling(o);
  const mt::DiscreteVectorField w = mt::compatible_field(t);
  const mt::FieldReport r = mt::validate_field(w);
  json report = mt::to_json(r);
  report["pairs"] = w.size();
  report["critical_cells"] = faces_json(mt::critical_cells(w));
  report["acyclic"] = !mt::find_closed_vpath(w).has_value();
  deliver(o, report, "field", mt::to_json(w));
  emit(o, report);
  return r.valid() ? kOk : kInvalid;
}

int cmd_vpath_check(const Options& o) {
  const mt::DiscreteVectorField w = load_field(o);
  const mt::FieldReport r = mt::validate_field(w);
  json report = mt::to_json(r);
  if (!r.valid()) {
    emit(o, report);
    return kInvalid;
  }
  const std::optional<mt::VPath> cycle = mt::find_closed_vpath(w);
  report["acyclic"] = !cycle.has_value();
  if (cycle) report["cycle"] = faces_json(*cycle);
  emit(o, report);
  return cycle ? kInvalid : kOk;
}

int cmd_morse_function(const Options& o) {
  mt::DiscreteVectorField w;
  if (!o.field_path.empty()) {
    w = load_field(o);
  } else if (!o.tiling_path.empty()) {
    w = mt::compatible_field(load_tiling(o));
  } else {
    throw UsageError("--field or --tiling is required");
  }
  const mt::FieldReport fr = mt::validate_field(w);
  if (!fr.valid()) {
    json report = mt::to_json(fr);
    emit(o, report);
    return kInvalid;
  }
  json report;
  try {
    const mt::DiscreteMorseFunction f = mt::morse_function(w);
    const mt::MorseReport r = mt::validate_morse_function(f, &w);
    report = mt::to_json(r);
    json crit = json::array();
    for (const mt::Simplex& c : mt::critical_cells(w))
      crit.push_back({{"face", mt::to_json(c)}, {"value", f.at(c).to_string()}});
    report["critical_values"] = std::move(crit);
    deliver(o, report, "function", mt::to_json(f));
    emit(o, report);
    return r.valid() ? kOk : kInvalid;
  } catch (const mt::CyclicFieldError& e) {
    report["valid"] = false;
    report["error"] = e.what();
    report["cycle"] = faces_json(e.cycle());
    emit(o, report);
    return kInvalid;
  }
}

int cmd_betti(const Options& o) {
  const mt::SimplicialComplex k = load_complex(o);
  json report;
  report["betti"] = mt::betti_numbers_mod2(k);
  report["euler_characteristic"] = mt::euler_characteristic(k);
  report["f_vector"] = k.f_vector();
  emit(o, report);
  return kOk;
}

int cmd_inequalities(const Options& o) {
  const mt::MorseTiling t = load_tiling_over_complex(o);
  const mt::InequalityReport r = mt::morse_inequalities_report(t.ambient, t);
  emit(o, mt::to_json(r));
  return r.certified && !r.holds() ? kInvalid : kOk;
}

int cmd_hcounts(const Options& o) {
  const mt::MorseTiling t = load_tiling(o);
  const mt::HTable h = mt::h_table(t);
  json report = mt::to_json(h);
  emit(o, report);
  return h.f0_identity_holds() ? kOk : kInvalid;
}

int cmd_pack(const Options& o) {
  const mt::MorseTiling t = load_tiling(o);
  const std::vector<mt::Simplex> packed = mt::pack_simplices(t);
  std::map<int, std::size_t> per_dim;
  for (const mt::Simplex& s : packed) ++per_dim[s.dim()];
  json counts = json::array();
  for (const auto& [d, c] : per_dim) counts.push_back({{"dim", d}, {"count", c}});
  json report;
  report["count"] = packed.size();
  report["per_dimension"] = std::move(counts);
  report["simplices"] = faces_json(packed);
  emit(o, report);
  return kOk;
}

int cmd_handle(const Options& o) {
  const int n = require(o.n, "--n");
  mt::HandleVariant variant{};
  try {
    variant = mt::parse_handle_variant(o.variant);
  } catch (const mt::Error& e) {
    throw UsageError(e.what());
  }
  if (n < 2) throw UsageError("--n must be at least 2");
  const mt::MorseTiling t = mt::handle_tiling(n, variant);
  json report;
  report["variant"] = mt::to_string(variant);
  report["kinds"] = tile_census(t);
  report["critical"] = critical_json(mt::critical_vector(t));
  deliver(o, report, "tiling", mt::to_json(t));
  emit(o, report);
  return kOk;
}

int cmd_prism(const Options& o) {
  const int n = require(o.n, "--n");
  if (n < 2) throw UsageError("--n must be at least 2");
  const mt::Prism p = mt::prism_triangulation(n);
  json report;
  report["n"] = n;
  report["bottom"] = mt::to_json(p.bottom);
  report["top"] = mt::to_json(p.top);
  report["staircase"] = faces_json(p.staircase);
  deliver(o, report, "complex", mt::to_json(p.complex));
  emit(o, report);
  return kOk;
}

int cmd_word_reduce(const Options& o) {
  mt::CyclicWord w;
  try {
    w = mt::CyclicWord(o.word);
  } catch (const mt::Error& e) {
    throw UsageError(e.what());
  }
  if (!w.is_annulus_word()) throw UsageError("each letter must occur at least three times in " + o.word);
  const std::vector<mt::Rewrite> trace = mt::reduce_word(w);
  json report;
  report["word"] = w.str();
  report["target"] = mt::target_word().str();
  report["steps"] = trace.size();
  report["trace"] = mt::to_json(trace);
  emit(o, report);
  return kOk;
}

int cmd_tile_info(const Options& o) {
  const int n = require(o.n, "--n");
  const int k = require(o.k, "--k");
  mt::MorseTile t;
  try {
    t = o.l ? mt::standard_morse_tile(n, k, *o.l) : mt::standard_tile(n, k);
  } catch (const mt::Error& e) {
    throw UsageError(e.what());
  }
  const mt::TileKind kind = t.kind();
  json report;
  report["tile"] = mt::to_json(t);
  report["kind"] = kind.to_string();
  switch (kind.cls) {
    case mt::TileKind::Class::Basic: report["class"] = "Basic"; break;
    case mt::TileKind::Class::Regular: report["class"] = "Regular"; break;
    case mt::TileKind::Class::Critical: report["class"] = "Critical"; break;
    case mt::TileKind::Class::Empty: report["class"] = "Empty"; break;
  }
  if (t.is_critical()) report["index"] = t.index();
  report["chi"] = mt::tile_chi(t);
  report["faces"] = t.face_count();
  emit(o, report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morse tiles, tilings and shellings of simplicial complexes"};
  app.require_subcommand(1);
  Options o;

  auto add_complex = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--complex", o.complex_path, "complex JSON file");
    if (required) opt->required();
  };
  auto add_tiling = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--tiling", o.tiling_path, "tiling JSON file");
    if (required) opt->required();
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out_path, "write the result here"); };

  std::vector<std::pair<CLI::App*, std::function<int(const Options&)>>> commands;
  auto sub = [&](const char* name, const char* help, std::function<int(const Options&)> fn) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    commands.emplace_back(c, std::move(fn));
    return c;
  };

  auto* c = sub("verify-tiling", "check partition and dimension filtration", cmd_verify_tiling);
  add_tiling(c, true);
  add_complex(c, false);

  c = sub("verify-shelling", "check that the tile order is a shelling", cmd_verify_shelling);
  add_tiling(c, true);
  add_complex(c, false);

  c = sub("shell-surface", "greedy Morse shelling of a closed surface", cmd_shell_surface);
  add_complex(c, true);
  c->add_option("--start", o.start, "first triangle, e.g. \"0,1,2\"");
  add_out(c);

  c = sub("search-shelling", "exhaustive search over maximal-simplex orders", cmd_search_shelling);
  add_complex(c, true);
  c->add_option("--budget", o.budget, "node limit");
  add_out(c);

  c = sub("subdivide", "barycentric subdivision of every tile", cmd_subdivide);
  add_tiling(c, true);
  c->add_option("--iterations", o.iterations, "number of subdivisions");
  add_out(c);

  c = sub("skeleton", "restrict a tiling to a skeleton", cmd_skeleton);
  add_tiling(c, true);
  c->add_option("--n", o.n, "skeleton dimension");
  add_out(c);

  c = sub("field", "compatible discrete vector field of a tiling", cmd_field);
  add_tiling(c, true);
  add_out(c);

  c = sub("vpath-check", "validate a field and look for a closed V-path", cmd_vpath_check);
  c->add_option("--field", o.field_path, "field JSON file")->required();
  add_tiling(c, false);
  add_complex(c, false);

  c = sub("morse-function", "self-indexing Morse function of an acyclic field", cmd_morse_function);
  c->add_option("--field", o.field_path, "field JSON file");
  add_tiling(c, false);
  add_complex(c, false);
  add_out(c);

  c = sub("betti", "mod-2 Betti numbers", cmd_betti);
  add_complex(c, true);

  c = sub("inequalities", "Morse inequalities for a tiling of a complex", cmd_inequalities);
  add_tiling(c, true);
  add_complex(c, false);

  c = sub("hcounts", "tile counts by dimension and order", cmd_hcounts);
  add_tiling(c, true);

  c = sub("pack", "disjoint simplices of the subdivision", cmd_pack);
  add_tiling(c, true);

  c = sub("handle", "tiling of a handle on the prism", cmd_handle);
  c->add_option("--n", o.n, "dimension");
  c->add_option("--variant", o.variant, "one-handle, co-handle or lateral");
  add_out(c);

  c = sub("prism", "staircase triangulation of the prism", cmd_prism);
  c->add_option("--n", o.n, "dimension");
  add_out(c);

  c = sub("word-reduce", "reduce a cyclic annulus word", cmd_word_reduce);
  c->add_option("word", o.word, "word over d and u")->required();

  c = sub("tile-info", "kind, Euler characteristic and size of a standard tile", cmd_tile_info);
  c->add_option("--n", o.n, "dimension");
  c->add_option("--k", o.k, "order");
  c->add_option("--l", o.l, "removed face dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  for (const auto& [cmd, fn] : commands) {
    if (!cmd->parsed()) continue;
    try {
      return fn(o);
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const mt::IoError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const mt::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kInvalid;
    }
  }
  return kUsage;
}
