#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "morsetile/complex.hpp"
#include "morsetile/field.hpp"
#include "morsetile/tile.hpp"
#include "morsetile/tiling.hpp"
#include "morsetile/words.hpp"

namespace morsetile {

using json = nlohmann::ordered_json;

/// Unreadable files and malformed documents.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Parses a file; parse errors name the byte offset.
json read_json_file(const std::filesystem::path& path);
json parse_json(const std::string& text, const std::string& source = "input");
void write_json_file(const std::filesystem::path& path, const json& doc);

json to_json(const Simplex& s);
Simplex simplex_from_json(const json& j);

/// {"name": ..., "maximal_simplices": [[...], ...]}
json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

/// {"closure": [...], "removed_witnesses": [...], "removed_face": [...] | null}
json to_json(const MorseTile& t);
MorseTile tile_from_json(const json& j);

/// {"complex": ..., "carrier": "all" | [[...]], "ordered": bool, "tiles": [...]}
json to_json(const MorseTiling& t);
MorseTiling tiling_from_json(const json& j);

/// [[[face], [coface]], ...]
json to_json(const DiscreteVectorField& f);
DiscreteVectorField field_from_json(const json& j, FaceSet domain);

/// [[[face], numerator, denominator], ...]
json to_json(const DiscreteMorseFunction& f);
DiscreteMorseFunction morse_function_from_json(const json& j);

/// [{"op": ..., "position": ..., "result": ...}, ...]
json to_json(const std::vector<Rewrite>& trace);

json to_json(const ValidationReport& r);
json to_json(const FieldReport& r);
json to_json(const MorseReport& r);
json to_json(const InequalityReport& r);
json to_json(const HTable& h);

}  // namespace morsetile
