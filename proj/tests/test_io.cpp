#include <doctest.h>

#include <filesystem>

#include "support.hpp"
#include "trispec/catalog.hpp"
#include "trispec/error.hpp"
#include "trispec/io.hpp"
#include "trispec/tensor.hpp"

using namespace trispec;

TEST_SUITE("io") {

TEST_CASE("detect_kind") {
  CHECK(detect_kind(parse_document(R"({"points": ["a"]})")) == DocumentKind::space);
  CHECK(detect_kind(parse_document(R"({"elements": ["0"], "objects": ["0"]})")) == DocumentKind::lattice);
  CHECK(detect_kind(parse_document(R"({"points": ["a"], "tags": {"a": "regular"}})")) == DocumentKind::model);
  CHECK(detect_kind(parse_document(R"({"kind": "catalog", "models": []})")) == DocumentKind::catalog);
  CHECK_THROWS_AS(detect_kind(parse_document(R"({"kind": "sheaf"})")), InputError);
  CHECK_THROWS_AS(detect_kind(parse_document(R"({"nothing": 1})")), InputError);
  CHECK_THROWS_AS(parse_document(R"({"schema": "trispec/0", "points": ["a"]})"), InputError);
  CHECK_THROWS_AS(parse_document("[1, 2]"), InputError);
  CHECK_THROWS_AS(read_document("/nonexistent/file.json"), InputError);
}

TEST_CASE("space round trip is byte-identical") {
  for (const auto& space : catalog::spaces()) {
    std::string once = dump(to_json(space));
    CHECK(dump(to_json(parse_space(once))) == once);
    CHECK(parse_space(once) == space);
  }
}

TEST_CASE("space files accept full order pairs") {
  auto s = parse_space(R"({"points": ["x", "y", "z"], "order": [["x", "y"], ["x", "z"], ["y", "z"], ["x", "x"]]})");
  CHECK(s.covers().size() == 2);
}

TEST_CASE("lattice round trip is byte-identical") {
  std::vector<ThickLattice> lats = catalog::explicit_lattices();
  for (const auto& c : catalog::augmented_family()) lats.push_back(c.lattice);
  for (const auto& s : catalog::spaces())
    if (s.size() <= 8) lats.push_back(from_support_data(s));
  auto v = from_support_data(catalog::v_model());
  lats.push_back(quotient(v, "{a}").first);
  lats.push_back(transport(v, {{"∅", "0"}, {"{a}", "a"}, {"{b}", "b"}, {"{a,b}", "ab"}, {"{a,b,η}", "1"}}).first);
  for (const auto& lat : lats) {
    std::string once = dump(to_json(lat));
    ThickLattice back = lattice_from_json(parse_document(once));
    CHECK(back == lat);
    CHECK(back.provenance().origin == lat.provenance().origin);
    CHECK(back.is_classified() == lat.is_classified());
    CHECK(dump(to_json(back)) == once);
  }
}

TEST_CASE("a classified lattice must match its space") {
  auto doc = to_json(from_support_data(catalog::v_model()));
  doc["space"]["covers"] = json::array();
  CHECK_THROWS_AS(lattice_from_json(doc), InputError);
  auto bare = to_json(from_support_data(catalog::v_model()));
  bare.erase("space");
  CHECK_THROWS_AS(lattice_from_json(bare), InputError);
}

TEST_CASE("model round trip and errors") {
  auto models = models_from_catalog(read_document(test::data_path("models.json")));
  for (const auto& m : models) {
    std::string once = dump(to_json(m));
    auto back = model_from_json(parse_document(once));
    CHECK(back.tags == m.tags);
    CHECK(back.space == m.space);
    CHECK(dump(to_json(back)) == once);
  }
  std::string catalog_text = dump(to_json(models));
  CHECK(dump(to_json(models_from_catalog(parse_document(catalog_text)))) == catalog_text);

  // The flattened form: space fields next to the tags.
  auto flat = model_from_json(parse_document(R"({"points": ["a"], "tags": {"a": "ci:2"}, "separated": false})"));
  CHECK(flat.tags[0].codim == 2);
  CHECK_FALSE(flat.separated);
  CHECK_THROWS_AS(model_from_json(parse_document(R"({"points": ["a", "b"], "tags": {"a": "regular"}})")),
                  InputError);
  CHECK_THROWS_AS(model_from_json(parse_document(R"({"points": ["a"], "tags": {"c": "regular"}})")), InputError);
  CHECK_THROWS_AS(model_from_json(parse_document(R"({"points": ["a"], "tags": {"a": 3}})")), InputError);
}

TEST_CASE("shipped catalog files parse") {
  for (const auto& entry : std::filesystem::directory_iterator(std::string(TRISPEC_DATA_DIR) + "/catalog")) {
    CAPTURE(entry.path().string());
    json doc = read_document(entry.path().string());
    switch (detect_kind(doc)) {
      case DocumentKind::space: CHECK_NOTHROW(space_from_json(doc)); break;
      case DocumentKind::lattice: CHECK_NOTHROW(lattice_from_json(doc)); break;
      case DocumentKind::model: CHECK_NOTHROW(model_from_json(doc)); break;
      case DocumentKind::catalog: CHECK_NOTHROW(models_from_catalog(doc)); break;
      case DocumentKind::spectrum: FAIL("spectrum in catalog"); break;
    }
  }
  auto v = lattice_from_json(read_document(test::data_path("v-lattice.json")));
  CHECK(v.is_classified());
  CHECK(v == from_support_data(catalog::v_model()));
  auto n5 = lattice_from_json(read_document(test::data_path("n5.json")));
  CHECK(n5 == catalog::pentagon());
}

TEST_CASE("spectrum report") {
  auto v = from_support_data(catalog::v_model());
  auto doc = to_json(spectrum(v), {verify_cls(v)});
  CHECK(doc["kind"] == "spectrum");
  CHECK(doc["points"] == json::array({"{a}", "{b}", "{a,b}"}));
  CHECK(doc["witness"]["{a}"] == "{a,b}");
  CHECK(doc["witness"]["{a,b}"] == "{a,b,η}");
  CHECK(doc["specialization"].size() == 2);
  CHECK(doc["closed_sets"].size() == 5);
  CHECK(doc["checks"][0]["status"] == "PASS");
  CHECK(detect_kind(doc) == DocumentKind::spectrum);
}

TEST_CASE("DOT output") {
  auto v = catalog::v_model();
  std::string sd = to_dot(v);
  CHECK(sd.find("rankdir=BT") != std::string::npos);
  CHECK(sd.find("\"a\" -> \"η\"") != std::string::npos);
  CHECK(sd == to_dot(v));

  auto lat = catalog::pentagon();
  std::string ld = to_dot(lat);
  CHECK(ld.find("\"a\" -> \"c\"") != std::string::npos);
  CHECK(ld.find("fillcolor=lightblue") != std::string::npos);

  auto spec = spectrum(from_support_data(v));
  std::string pd = to_dot(spec, true);
  CHECK(pd.find("\"{a}\" -> \"{a,b}\"") != std::string::npos);
  CHECK(pd.find("xlabel=\"w={a,b,η}\"") != std::string::npos);
  CHECK(to_dot(spec, false).find("xlabel") == std::string::npos);

  // Transitive edges are not drawn.
  auto chain = spectrum(from_support_data(chain_space(4)));
  std::string cd = to_dot(chain);
  std::size_t edges = 0;
  for (std::size_t pos = cd.find("->"); pos != std::string::npos; pos = cd.find("->", pos + 1)) ++edges;
  CHECK(edges == 3);
}

TEST_CASE("fixtures") {
  CHECK_THROWS_AS(space_from_json(read_document(test::fixture_path("empty.json"))), InputError);
  auto big = space_from_json(read_document(test::fixture_path("big-25.json")));
  CHECK(big.size() == 25);
  CHECK_THROWS_AS(enumerate_spcl(big), CapExceeded);
}

}  // TEST_SUITE
