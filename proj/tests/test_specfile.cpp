#include <filesystem>
#include <string>

#include "brl/constructions.hpp"
#include "brl/specfile.hpp"
#include "doctest.h"

using namespace brl;

namespace {

const char* const kL3Covers =
    "# three-element chain\n"
    "algebra L3\n"
    "elements 0 1 2\n"
    "top 2\n"
    "bot 0\n"
    "covers\n"
    "  0 < 1\n"
    "  1 < 2\n"
    "mult\n"
    "  0 0 0\n"
    "  0 0 1\n"
    "  0 1 2\n"
    "end\n";

const char* const kL3Leq =
    "algebra L3\n"
    "elements 0 1 2\n"
    "top 2\n"
    "bot 0\n"
    "leq\n"
    "  1 1 1\n"
    "  0 1 1\n"
    "  0 0 1\n"
    "mult\n"
    "  0 0 0\n"
    "  0 0 1\n"
    "  0 1 2\n"
    "end\n";

// Non-commutative product with a hand-picked arrow: parses, fails axioms.
const char* const kBroken =
    "algebra broken\n"
    "elements F T\n"
    "top T\n"
    "bot F\n"
    "covers\n"
    "  F < T\n"
    "mult\n"
    "  F F\n"
    "  T T\n"
    "arrow\n"
    "  T T\n"
    "  F T\n"
    "end\n";

int error_line(const std::string& text) {
  try {
    parse_algebra_text(text, false);
  } catch (const SpecFileError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("parse covers form") {
  Algebra a = parse_algebra_text(kL3Covers);
  CHECK(a == make_lukasiewicz(2));
}

TEST_CASE("parse leq form") {
  CHECK(parse_algebra_text(kL3Leq) == make_lukasiewicz(2));
}

TEST_CASE("format and reparse") {
  for (const Algebra& a : {make_lukasiewicz(2), make_w9(), make_nogap5()}) {
    CAPTURE(a.name());
    CHECK(parse_algebra_text(format_algebra(a)) == a);
  }
  std::string text = format_algebra(make_w9());
  CHECK(text.find("algebra W9\n") == 0);
  CHECK(text.find("7 < 6\n") != std::string::npos);
  CHECK(text.find("arrow\n") != std::string::npos);
}

TEST_CASE("comments and spacing are ignored") {
  std::string text = kL3Covers;
  text.insert(0, "\n   # header comment\n\n");
  text += "\n# trailing comment\n";
  CHECK(parse_algebra_text(text) == make_lukasiewicz(2));
}

TEST_CASE("strict load rejects broken axioms") {
  CHECK_THROWS_AS(parse_algebra_text(kBroken), AxiomFailure);
  try {
    parse_algebra_text(kBroken);
  } catch (const AxiomFailure& e) {
    CHECK_FALSE(e.report.all_hold());
    const AxiomLaw* law = e.report.find("mult-commutative");
    REQUIRE(law != nullptr);
    CHECK_FALSE(law->holds);
    CHECK(std::string(e.what()).find("not a bounded residuated lattice") != std::string::npos);
  }

  Algebra a = parse_algebra_text(kBroken, false);
  CHECK(a.size() == 2);
  CHECK_FALSE(verify_axioms(a).all_hold());
}

TEST_CASE("error positions") {
  CHECK(error_line("elements a\n") == 1);                    // name line missing
  CHECK(error_line("algebra X\nelements a b\n") == 3);       // no end
  CHECK(error_line("algebra X\nalgebra Y\nend\n") == 2);     // duplicate header
  CHECK(error_line("algebra X\nmult\nmult\nend\n") == 3);    // duplicate section
  CHECK(error_line("algebra X\nstray here\nend\n") == 2);    // outside any section
  CHECK(error_line("algebra X\ntop\nend\n") == 2);           // top needs a name
  CHECK(error_line("algebra X\nend now\n") == 2);            // end takes no arguments

  std::string after_end = std::string(kL3Covers) + "leftover\n";
  CHECK(error_line(after_end) == 14);

  std::string bad_cover = kL3Covers;
  bad_cover.replace(bad_cover.find("0 < 1"), 5, "0 1 2");
  CHECK(error_line(bad_cover) == 7);

  std::string unknown = kL3Covers;
  unknown.replace(unknown.find("0 1 2\nend"), 5, "0 z 2");
  CHECK(error_line(unknown) == 12);

  std::string keyword_name = kL3Covers;
  keyword_name.replace(keyword_name.find("elements 0 1 2"), 14, "elements 0 top 2");
  CHECK(error_line(keyword_name) == 3);

  std::string cycle =
      "algebra X\nelements a b\ntop b\nbot a\ncovers\n  a < b\n  b < a\n"
      "mult\n  a a\n  a b\nend\n";
  CHECK(error_line(cycle) == 6);

  std::string short_row = kL3Covers;
  short_row.replace(short_row.find("0 0 1"), 5, "0 0");
  CHECK(error_line(short_row) == 11);

  std::string missing_row = kL3Covers;
  missing_row.erase(missing_row.find("  0 0 1\n"), 8);
  CHECK(error_line(missing_row) == 11);
}

TEST_CASE("order section is required exactly once") {
  std::string both = kL3Leq;
  both.insert(both.find("mult"), "covers\n  0 < 1\n  1 < 2\n");
  CHECK(error_line(both) > 0);

  std::string neither =
      "algebra X\nelements a b\ntop b\nbot a\nmult\n  a a\n  a b\nend\n";
  CHECK(error_line(neither) == 9);
}

TEST_CASE("save and load") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "brl_roundtrip_test.brl";
  Algebra w9 = make_w9();
  save_algebra(path.string(), w9);
  CHECK(load_algebra(path.string()) == w9);
  fs::remove(path);
  CHECK_THROWS_AS(load_algebra(path.string()), BrlError);
}
