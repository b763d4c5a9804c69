#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include <gtest/gtest.h>

#include "charfield/json_io.hpp"
#include "charfield/specs.hpp"

using namespace charfield;

namespace {

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(CycJson, RoundTrip) {
  const CycElt x = CycElt::root_of_unity(12, 1) * Rational(3, 7) - CycElt::root_of_unity(12, 4);
  const Json j = to_json(x);
  EXPECT_EQ(j["n"], 12);
  EXPECT_EQ(cyc_from_json(j), x);
  EXPECT_EQ(cyc_from_json(Json::parse(R"({"n": 1, "terms": [[0, "-2"]]})")), CycElt(-2));
}

TEST(CycJson, UnsortedTermsAreAccepted) {
  const Json j = Json::parse(R"({"n": 5, "terms": [[2, "1"], [1, "1/2"]]})");
  EXPECT_EQ(cyc_from_json(j), CycElt::root_of_unity(5, 2) + CycElt::root_of_unity(5, 1) * Rational(1, 2));
}

TEST(CycJson, Rejections) {
  EXPECT_THROW(cyc_from_json(Json::parse(R"({"terms": []})")), std::invalid_argument);
  EXPECT_THROW(cyc_from_json(Json::parse(R"({"n": 0, "terms": []})")), std::invalid_argument);
  EXPECT_THROW(cyc_from_json(Json::parse(R"({"n": 4, "terms": [[1, 2]]})")), std::invalid_argument);
  EXPECT_THROW(cyc_from_json(Json::parse(R"({"n": 4, "terms": [[1, "x"]]})")), std::invalid_argument);
  // zeta_4^2 is not a basis element of Q_4.
  EXPECT_THROW(cyc_from_json(Json::parse(R"({"n": 4, "terms": [[2, "1"]]})")), std::invalid_argument);
}

TEST(TableJson, RoundTripOnSamples) {
  for (const char* spec : {"sym:4", "alt:5", "semidihedral:16", "meta:12:11", "quaternion:24", "cyclic:7"}) {
    const CharacterTable t = table_for_spec(spec);
    const CharacterTable back = table_from_json(Json::parse(to_json(t).dump()));
    EXPECT_EQ(back.name, t.name);
    EXPECT_EQ(back.order, t.order);
    EXPECT_EQ(back.rows, t.rows);
    EXPECT_EQ(back.classes.sizes, t.classes.sizes);
    EXPECT_EQ(back.classes.orders, t.classes.orders);
    EXPECT_EQ(back.classes.power_map, t.classes.power_map);
    EXPECT_EQ(to_json(back).dump(), to_json(t).dump());
    for (std::int64_t p : {2, 3}) EXPECT_EQ(block_partition(back, p).block_of, block_partition(t, p).block_of);
  }
}

TEST(TableJson, IngestedTableSupportsChecks) {
  const CharacterTable t = table_for_spec("semidihedral:16");
  const std::string path = temp_file("charfield_sd16.json", to_json(t).dump(2));
  const CharacterTable back = read_table_file(path);
  EXPECT_EQ(verify_theorem_A(back, 2).violations, 0u);
  EXPECT_EQ(height_zero_rows(back, 2).size(), 4u);
  std::remove(path.c_str());
}

TEST(TableJson, PartialPowerMapIsAccepted) {
  Json j = to_json(table_for_spec("sym:3"));
  j["classes"][1]["powermap"] = Json::object();
  const CharacterTable t = table_from_json(j);
  EXPECT_EQ(t.classes.power_map[1][2], -1);
}

TEST(TableJson, Rejections) {
  const Json good = to_json(table_for_spec("sym:3"));
  const auto rejects = [](const Json& j) { EXPECT_THROW(table_from_json(j), std::invalid_argument) << j.dump(); };

  Json j = good;
  j.erase("irr");
  rejects(j);

  j = good;
  j["order"] = 7;
  rejects(j);

  j = good;
  j["classes"][1]["size"] = 2;
  rejects(j);

  j = good;
  j["irr"][1][0] = to_json(CycElt(2));
  rejects(j);

  j = good;
  j["irr"].erase(j["irr"].begin() + 2);
  rejects(j);

  j = good;
  j["classes"][0]["powermap"]["1"] = 9;
  rejects(j);

  j = good;
  j["classes"][0]["powermap"]["x"] = 0;
  rejects(j);

  j = good;
  j["classes"][2]["element_order"] = 4;
  rejects(j);

  j = good;
  j["irr"][2][1] = to_json(CycElt(Rational(1, 2)));
  rejects(j);

  j = good;
  std::swap(j["irr"][0], j["irr"][1]);
  rejects(j);

  EXPECT_THROW(table_from_json(Json::parse("[1, 2]")), std::invalid_argument);
  EXPECT_THROW(read_table_file("/nonexistent/table.json"), std::runtime_error);
  const std::string bad = temp_file("charfield_bad.json", "{not json");
  EXPECT_THROW(read_table_file(bad), std::invalid_argument);
  std::remove(bad.c_str());
}

TEST(BlockJson, Shape) {
  const CharacterTable t = table_for_spec("alt:5");
  const Json j = to_json(block_partition(t, 2), t);
  EXPECT_EQ(j["p"], 2);
  ASSERT_EQ(j["blocks"].size(), 2u);
  EXPECT_EQ(j["blocks"][0]["defect"], 2);
  EXPECT_EQ(j["blocks"][0]["rows"].size(), 4u);
  EXPECT_EQ(j["blocks"][1]["defect"], 0);
  EXPECT_EQ(j["blocks"][1]["rows"][0]["degree"], 4);
}

TEST(FieldJson, Shape) {
  const Json j = to_json(quadratic_field(3));
  EXPECT_EQ(j["conductor"], 12);
  EXPECT_EQ(j["fixer"], Json::parse("[1, 11]"));
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(to_json(cyclotomic_field(1))["fixer"], Json::parse("[1]"));
}

TEST(CorollaryCsv, Format) {
  const std::string csv = corollary_c_csv(corollary_c_sweep(3));
  EXPECT_EQ(csv,
            "d,in_F2,expected\n-3,true,true\n-2,false,false\n-1,true,true\n2,false,false\n3,true,true\n");
}

TEST(Specs, GroupAndFieldParsing) {
  EXPECT_EQ(parse_group("meta:20:3").order(), 80u);
  EXPECT_EQ(parse_field("quad:-5"), quadratic_field(-5));
  EXPECT_EQ(parse_field("cyclo:6"), cyclotomic_field(3));
  EXPECT_EQ(parse_field("fix:12:11"), quadratic_field(3));
  EXPECT_THROW(parse_field("quad:4"), std::invalid_argument);
  EXPECT_THROW(parse_field("cubic:7"), std::invalid_argument);
  EXPECT_THROW(parse_method("fast"), std::invalid_argument);
  EXPECT_THROW(table_for_spec("sym:4", TableMethod::direct), std::invalid_argument);
}

TEST(Specs, DirectAndDixonAgree) {
  for (const char* spec : {"cyclic:10", "meta:21:2", "meta:16:3"}) {
    EXPECT_TRUE(same_row_set(table_for_spec(spec, TableMethod::direct), table_for_spec(spec, TableMethod::dixon)))
        << spec;
  }
}

TEST(Corpus, ShippedFileMatchesGenerator) {
  EXPECT_EQ(load_corpus(default_corpus_path()), default_corpus());
}

TEST(Corpus, Contents) {
  const auto specs = default_corpus();
  const auto has = [&](const std::string& s) { return std::find(specs.begin(), specs.end(), s) != specs.end(); };
  for (const char* s : {"cyclic:1", "cyclic:48", "dihedral:64", "semidihedral:64", "quaternion:8", "quaternion:24",
                        "sym:5", "alt:4", "alt:5", "sl2:3", "sl2:5", "meta:12:11"}) {
    EXPECT_TRUE(has(s)) << s;
  }
  EXPECT_FALSE(has("cyclic:49"));
  std::set<std::string> unique(specs.begin(), specs.end());
  EXPECT_EQ(unique.size(), specs.size());
  for (const auto& s : specs) {
    if (s.rfind("meta:", 0) != 0) continue;
    const int n = std::stoi(s.substr(5));
    EXPECT_LE(n, 40);
  }
}

TEST(Corpus, LoadSkipsCommentsAndBlanks) {
  const std::string path = temp_file("charfield_corpus.txt", "# header\n\nsym:3\n  \ncyclic:4\n");
  EXPECT_EQ(load_corpus(path), (std::vector<std::string>{"sym:3", "cyclic:4"}));
  std::remove(path.c_str());
  EXPECT_THROW(load_corpus("/nonexistent/corpus.txt"), std::runtime_error);
}
