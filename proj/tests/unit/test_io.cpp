#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "morsetile/catalog.hpp"
#include "morsetile/io.hpp"
#include "morsetile/surface.hpp"

using namespace morsetile;

namespace {

void check_same(const MorseTiling& a, const MorseTiling& b) {
  CHECK(a.ambient == b.ambient);
  CHECK(a.carrier == b.carrier);
  CHECK(a.tiles == b.tiles);
  CHECK(a.ordered == b.ordered);
}

}  // namespace

TEST_CASE("complexes round trip") {
  for (const SimplicialComplex& k : catalog::surface_corpus()) {
    const json j = to_json(k);
    CHECK(j.contains("maximal_simplices"));
    const SimplicialComplex back = complex_from_json(parse_json(j.dump()));
    CHECK(back == k);
  }
  CHECK_THROWS_AS(complex_from_json(parse_json(R"({"maximal_simplices": []})")), IoError);
  CHECK_THROWS_AS(complex_from_json(parse_json(R"({"maximal_simplices": [[0, -1]]})")), IoError);
  CHECK_THROWS_AS(complex_from_json(parse_json(R"({"maximal_simplices": [[0, 0.5]]})")), IoError);
  CHECK_THROWS_AS(complex_from_json(parse_json(R"({"faces": [[0]]})")), IoError);
}

TEST_CASE("tiles round trip") {
  for (const MorseTile& t : {standard_tile(3, 0), standard_tile(3, 4), critical_tile(3, 2), standard_morse_tile(4, 1, 2)}) {
    const json j = to_json(t);
    CHECK(tile_from_json(j) == t);
  }
  CHECK(to_json(standard_tile(2, 3))["removed_face"].is_null());
  const MorseTile t = tile_from_json(parse_json(R"({"closure": [0, 1, 2], "removed_witnesses": [0], "removed_face": []})"));
  CHECK(t == MorseTile(Simplex{0, 1, 2}, {0}));
  CHECK_THROWS_AS(tile_from_json(parse_json(R"({"closure": [0, 1], "removed_witnesses": [5]})")), IoError);
  CHECK_THROWS_AS(tile_from_json(parse_json(R"({"removed_witnesses": [0]})")), IoError);
}

TEST_CASE("tilings round trip") {
  const MorseTiling torus = shell_surface(catalog::torus7());
  const json j = to_json(torus);
  CHECK(j["carrier"] == "all");
  check_same(tiling_from_json(parse_json(j.dump(2))), torus);

  MorseTiling partial = torus;
  partial.tiles.resize(3);
  partial = tiling_from_tiles(partial.ambient, partial.tiles, true);
  const json pj = to_json(partial);
  CHECK(pj["carrier"].is_array());
  check_same(tiling_from_json(pj), partial);

  CHECK_THROWS_AS(tiling_from_json(parse_json(R"({"tiles": []})")), IoError);
  CHECK_THROWS_AS(tiling_from_json(parse_json(R"({"complex": {"maximal_simplices": [[0]]}, "tiles": [],
                                                   "carrier": "some"})")),
                  IoError);
}

TEST_CASE("fields and Morse functions round trip") {
  const MorseTiling s = shell_surface(catalog::octahedron());
  const DiscreteVectorField w = compatible_field(s);
  CHECK(field_from_json(to_json(w), FaceSet::all(s.ambient)) == w);
  const DiscreteMorseFunction f = morse_function(w);
  const DiscreteMorseFunction back = morse_function_from_json(parse_json(to_json(f).dump()));
  CHECK(back.values == f.values);
  CHECK_THROWS_AS(morse_function_from_json(parse_json(R"([[[0], 1, 0]])")), IoError);
  CHECK_THROWS_AS(field_from_json(parse_json(R"([[[0]]])"), FaceSet({Simplex{0}})), IoError);
}

TEST_CASE("rewrite traces") {
  const json j = to_json(reduce_word(CyclicWord("uuuddd")));
  REQUIRE(j.is_array());
  CHECK(j.front()["op"] == "subdivide");
  CHECK(j.front()["position"] == -1);
  CHECK(j.back()["result"] == target_word().str());
}

TEST_CASE("malformed JSON names the byte offset") {
  CHECK_THROWS_WITH_AS(parse_json("{\"a\": [1, 2,]}", "doc.json"), doctest::Contains("doc.json: invalid JSON at byte 13"),
                       IoError);
  CHECK_THROWS_WITH_AS(parse_json("[1, 2", "x"), doctest::Contains("at byte 6"), IoError);
}

TEST_CASE("files") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "morsetile_io_test";
  std::filesystem::create_directories(dir);
  const std::filesystem::path p = dir / "k.json";
  write_json_file(p, to_json(catalog::sphere(2)));
  CHECK(complex_from_json(read_json_file(p)) == catalog::sphere(2));
  {
    std::ofstream out(dir / "bad.json");
    out << "{\n  \"maximal_simplices\": [[0, 1]\n";
  }
  CHECK_THROWS_WITH_AS(read_json_file(dir / "bad.json"), doctest::Contains("invalid JSON at byte"), IoError);
  CHECK_THROWS_WITH_AS(read_json_file(dir / "missing.json"), doctest::Contains("cannot open"), IoError);
  std::filesystem::remove_all(dir);
}
