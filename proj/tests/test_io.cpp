#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "zcacs/errors.hpp"
#include "zcacs/generator.hpp"
#include "zcacs/io.hpp"

using namespace zcacs;
using namespace zcacs::testing;

namespace {

const char* kExample1Json = R"({
  "row_blocks": [[2, 2, 1]],
  "col_blocks": [[3, 2, 1]],
  "row_primed": [3],
  "col_primed": [2],
  "row_perms": [[2, 1]],
  "col_perms": [[1, 2]],
  "row_linear": [[1, 2]],
  "col_linear": [[2, 1]]
})";

std::string field_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<none>";
}

std::string serialize(const CodeSet& cs, Encoding enc) {
  std::ostringstream out(std::ios::binary);
  write_codeset(out, cs, enc);
  return out.str();
}

CodeSet deserialize(const std::string& bytes) {
  std::istringstream in(bytes, std::ios::binary);
  return read_codeset(in);
}

}  // namespace

TEST_CASE("parse_config: Example 1 document") {
  CHECK(parse_config(kExample1Json) == example1());
}

TEST_CASE("parse_config: defaults") {
  const auto cfg = parse_config(R"({"row_blocks": [[2,1,1]], "col_blocks": [[3,1,1]]})");
  CHECK(cfg == lemma3_small());
  CHECK(cfg.row_perms == std::vector<std::vector<int>>{{1}});
  CHECK(cfg.col_linear == std::vector<std::vector<std::int64_t>>{{0}});
}

TEST_CASE("parse_config: field paths") {
  CHECK(field_of(R"({"row_blocks": [[2,1,1]]})") == "col_blocks");
  CHECK(field_of(R"({"row_blocks": [[2,1,1]], "col_blocks": [[4,1,1]]})").find("col_blocks[0]") == 0);
  CHECK(field_of(R"({"row_blocks": [[2,1,1]], "col_blocks": [[3,1,1]], "colour": 1})") == "colour");
  CHECK(field_of(R"({"row_blocks": [[2,2,1]], "col_blocks": [[3,1,1]], "row_perms": [[1,1]]})").find("row_perms[0]") == 0);
  CHECK(field_of(R"({"row_blocks": [[2,1,1]], "col_blocks": [[3,1,1]], "col_linear": [["x"]]})").find("col_linear") == 0);
  CHECK(field_of(R"({"row_blocks": [[2,1]], "col_blocks": [[3,1,1]]})").find("row_blocks[0]") == 0);
  CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
  CHECK_THROWS_AS(parse_config("[1, 2]"), ConfigError);
}

TEST_CASE("config_to_json round trip") {
  auto cfg = example1();
  cfg.theta_offsets = {0, 1, 2, 3, 4, 5};
  CHECK(parse_config(config_to_json(cfg)) == cfg);
  CHECK(parse_config(config_to_json(cfg, true)) == cfg);
}

TEST_CASE("entry_width") {
  CHECK(entry_width(2) == 1);
  CHECK(entry_width(256) == 1);
  CHECK(entry_width(257) == 2);
  CHECK(entry_width(65536) == 2);
  CHECK(entry_width(65537) == 4);
}

TEST_CASE("code set files: text and binary round trips") {
  for (const auto& cfg : {example1(), lemma3_small(), one_dim(2, {3})}) {
    const auto cs = generate(cfg);
    const auto text = serialize(cs, Encoding::Text);
    const auto binary = serialize(cs, Encoding::Binary);
    CHECK(deserialize(text) == cs);
    CHECK(deserialize(binary) == cs);
    CHECK(binary.size() < text.size());
    CHECK(text.rfind("zcacs-codeset 1\n", 0) == 0);
  }
}

TEST_CASE("code set files: corruption is reported") {
  const auto cs = build_ccc(lemma3_small());
  const auto text = serialize(cs, Encoding::Text);
  const auto binary = serialize(cs, Encoding::Binary);

  CHECK_THROWS_AS(deserialize(text.substr(0, text.size() / 2)), FormatError);
  CHECK_THROWS_AS(deserialize(binary.substr(0, binary.size() - 1)), FormatError);
  CHECK_THROWS_AS(deserialize(binary + "x"), FormatError);
  CHECK_THROWS_AS(deserialize(""), FormatError);
  CHECK_THROWS_AS(deserialize("zcacs-codeset 2\n"), FormatError);

  auto bad_sets = text;
  bad_sets.replace(bad_sets.find("sets 6"), 6, "sets 7");
  CHECK_THROWS_AS(deserialize(bad_sets), FormatError);

  // An entry outside Z_delta.
  auto bad_entry = text;
  const auto pos = bad_entry.find("array 0\n") + 8;
  bad_entry.replace(pos, 1, "9");
  CHECK_THROWS_AS(deserialize(bad_entry), FormatError);
}

TEST_CASE("save/load through the filesystem") {
  const auto dir = std::filesystem::temp_directory_path() / "zcacs_io_test";
  std::filesystem::create_directories(dir);
  const auto cs = generate(one_dim(1, {3}));
  save_codeset(dir / "s.txt", cs);
  save_codeset(dir / "s.bin", cs, Encoding::Binary);
  CHECK(load_codeset(dir / "s.txt") == cs);
  CHECK(load_codeset(dir / "s.bin") == cs);
  CHECK_THROWS_AS(load_codeset(dir / "missing.txt"), IoError);
  CHECK_THROWS_AS(save_codeset(dir / "no" / "such" / "dir.txt", cs), IoError);
  CHECK_THROWS_AS(load_config(dir / "missing.json"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("format_params") {
  const auto s = format_params(derive_params(example1()));
  CHECK(s.find("kind ZCACS-2D\n") != std::string::npos);
  CHECK(s.find("sets 36\n") != std::string::npos);
  CHECK(s.find("optimal true\n") != std::string::npos);
}
