#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "brl/cli.hpp"
#include "brl/constructions.hpp"
#include "brl/specfile.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace brl;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Fixture tree under the system temp directory, created once per process:
// good/ holds valid spec files, mixed/ adds one with broken axioms,
// badparse/ one that does not scan, empty/ nothing.
const fs::path& fixtures() {
  static const fs::path root = [] {
    fs::path r = fs::temp_directory_path() / "brlkit_cli_fixtures";
    fs::remove_all(r);
    fs::create_directories(r / "good");
    fs::create_directories(r / "mixed");
    fs::create_directories(r / "badparse");
    fs::create_directories(r / "empty");
    save_algebra((r / "good" / "w9.brl").string(), make_w9());
    save_algebra((r / "good" / "l3.brl").string(), make_lukasiewicz(2));
    save_algebra((r / "good" / "nogap5.brl").string(), make_nogap5());
    const char* broken =
        "algebra broken\nelements F T\ntop T\nbot F\ncovers\n  F < T\n"
        "mult\n  F F\n  T T\narrow\n  T T\n  F T\nend\n";
    std::ofstream(r / "mixed" / "broken.brl") << broken;
    save_algebra((r / "mixed" / "l3.brl").string(), make_lukasiewicz(2));
    std::ofstream(r / "badparse" / "garbage.brl") << "this is not an algebra\n";
    return r;
  }();
  return root;
}

std::string good(const char* file) { return (fixtures() / "good" / file).string(); }

}  // namespace

TEST_CASE("gen writes spec files") {
  CliResult r = run({"gen", "w9"});
  CHECK(r.code == 0);
  CHECK(parse_algebra_text(r.out) == make_w9());

  fs::path out_path = fixtures() / "gen_l3.brl";
  r = run({"gen", "lukasiewicz", "3", "-o", out_path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(load_algebra(out_path.string()) == make_lukasiewicz(2));

  CHECK(run({"gen", "lukasiewicz", "1"}).code == 2);
  CHECK(run({"gen", "w9", "5"}).code == 2);
  CHECK(run({"gen", "pentagon"}).code == 2);
}

TEST_CASE("verify") {
  CliResult r = run({"verify", good("w9.brl")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "W9 is a bounded residuated lattice"));
  CHECK(contains(r.out, "ok   mult-commutative"));

  r = run({"verify", (fixtures() / "mixed" / "broken.brl").string()});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL mult-commutative"));
  CHECK(contains(r.out, "broken is not a bounded residuated lattice"));

  r = run({"verify", (fixtures() / "badparse" / "garbage.brl").string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error:"));

  CHECK(run({"verify", (fixtures() / "nope.brl").string()}).code == 2);
}

TEST_CASE("analyze json") {
  CliResult r = run({"analyze", good("w9.brl"), "--json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["algebra"] == "W9");
  CHECK(j["size"] == 9);
  CHECK(j["flags"]["directly_indecomposable"] == true);
  CHECK(j["flags"]["local"] == true);
  CHECK(j["flags"]["simple"] == false);
  CHECK(j["flags"]["gap"] == true);
  CHECK(j["flags"]["blp"] == true);
  CHECK(j["indices"]["contractivity"] == 3);
  CHECK(j["indices"]["wl"] == 3);
  CHECK(j["indices"]["em"].is_null());
  CHECK(j["boolean_skeleton"] == nlohmann::json({"T", "F"}));
  CHECK(j["radical"] == nlohmann::json({"T", "1", "2", "3"}));
  CHECK(j["gap_certificate"]["k"] == 3);
  CHECK(j["gap_certificate"]["r"] == 3);
  REQUIRE(j["filters"].size() == 3);
  CHECK(j["filters"][0]["elements"] == nlohmann::json({"T"}));
  CHECK(j["filters"][0]["stone_ultrafilter"] == true);
  CHECK(j["filters"][1]["elements"] == nlohmann::json({"T", "1", "2", "3"}));
  CHECK(j["filters"][1]["maximal"] == true);
  CHECK(j["filters"][1]["stone"] == false);
  CHECK(j["filters"][2]["proper"] == false);
  nlohmann::json boolean = j["term_search"]["boolean"];
  CHECK(std::find(boolean.begin(), boolean.end(), nlohmann::json({3, 3})) != boolean.end());

  // the report is a stable artifact: a second run is byte identical
  CHECK(run({"analyze", good("w9.brl"), "--json"}).out == r.out);
}

TEST_CASE("analyze text") {
  CliResult r = run({"analyze", good("w9.brl")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "algebra W9: 9 elements"));
  CHECK(contains(r.out, "radical: {T, 1, 2, 3}"));
  CHECK(contains(r.out, "gap certificate: 3.x^3"));
  CHECK(contains(r.out, "stone ultrafilter"));

  r = run({"analyze", good("nogap5.brl")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "gap certificate: none"));
  CHECK(contains(r.out, "filters: 5"));
}

TEST_CASE("check-id") {
  CliResult r = run({"check-id", good("w9.brl"), "1.x \\/ 1.~x = T"});
  CHECK(r.code == 1);
  CHECK(r.out == "counterexample: x := 1\n");

  r = run({"check-id", good("nogap5.brl"), "1.x \\/ 1.~x = T"});
  CHECK(r.code == 1);
  CHECK(r.out == "counterexample: x := a\n");

  r = run({"check-id", good("w9.brl"), "x*y <= x"});
  CHECK(r.code == 0);
  CHECK(r.out == "holds\n");

  r = run({"check-id", good("w9.brl"), "x + = y"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error:"));

  CHECK(run({"check-id", (fixtures() / "mixed" / "broken.brl").string(), "x = x"}).code == 2);
}

TEST_CASE("gap") {
  CliResult r = run({"gap", good("w9.brl")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "gap: yes"));
  CHECK(contains(r.out, "certificate: 3.x^3 (k = 3, r = 3)"));

  r = run({"gap", good("nogap5.brl")});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "gap: no"));
  CHECK(contains(r.out, "certificate: none (k <= 5, r <= 5)"));

  r = run({"gap", good("w9.brl"), "--max-k", "2", "--max-r", "2"});
  CHECK(contains(r.out, "certificate: none (k <= 2, r <= 2)"));
}

TEST_CASE("product, sub, quotient") {
  CliResult r = run({"product", good("l3.brl"), good("l3.brl")});
  CHECK(r.code == 0);
  CHECK(parse_algebra_text(r.out) == direct_product(make_lukasiewicz(2), make_lukasiewicz(2)));

  r = run({"sub", good("w9.brl"), "--gens", "4"});
  CHECK(r.code == 0);
  Algebra sub = parse_algebra_text(r.out);
  CHECK(sub.name() == "W9_sub");
  CHECK(sub.size() == 8);
  CHECK(run({"sub", good("w9.brl"), "--gens", "nosuch"}).code == 2);

  fs::path qpath = fixtures() / "quot.brl";
  r = run({"quotient", good("w9.brl"), "--generator", "1", "-o", qpath.string()});
  CHECK(r.code == 0);
  CHECK(is_isomorphic(load_algebra(qpath.string()), make_lukasiewicz(2)));
  CHECK(run({"quotient", good("w9.brl"), "--generator", "zz"}).code == 2);
}

TEST_CASE("iso") {
  fs::path qpath = fixtures() / "quot_iso.brl";
  REQUIRE(run({"quotient", good("w9.brl"), "--generator", "1", "-o", qpath.string()}).code == 0);

  CliResult r = run({"iso", qpath.string(), good("l3.brl")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "isomorphic\n"));
  CHECK(contains(r.out, " -> "));

  r = run({"iso", good("w9.brl"), good("l3.brl")});
  CHECK(r.code == 1);
  CHECK(r.out == "not isomorphic\n");
}

TEST_CASE("lexmv") {
  CHECK(run({"lexmv", "2", "2.(1,1)^2"}).out == "(0,4)\n");
  CHECK(run({"lexmv", "3", "2.(2,1)^3"}).out == "(0,6)\n");
  CHECK(run({"lexmv", "3", "T -> (0,5)"}).out == "(0,5)\n");
  CHECK(run({"lexmv", "3", "~(0,0)"}).out == "(3,0)\n");
  CHECK(run({"lexmv", "3", "(2,-3) \\/ (1,7)"}).out == "(2,-3)\n");
  CHECK(run({"lexmv", "3", "2.(2,1)^3"}).code == 0);

  CHECK(run({"lexmv", "3", "(4,0)"}).code == 2);
  CHECK(run({"lexmv", "3", "(1,"}).code == 2);
  CHECK(run({"lexmv", "3", "x + y"}).code == 2);
  CHECK(run({"lexmv", "0", "T"}).code == 2);
}

TEST_CASE("laws") {
  CliResult r = run({"laws", (fixtures() / "good").string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "== 3 files"));
  CHECK(contains(r.out, " 0 failures"));
  CHECK(contains(r.out, "== W9 ("));

  r = run({"laws", (fixtures() / "mixed").string()});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL axioms-hold"));

  r = run({"laws", (fixtures() / "badparse").string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error:"));

  CHECK(run({"laws", (fixtures() / "empty").string()}).code == 2);
  CHECK(run({"laws", (fixtures() / "missing_dir").string()}).code == 2);
}

TEST_CASE("argument handling") {
  CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "brlkit"));

  CHECK(run({}).code == 2);
  CHECK(run({"wat"}).code == 2);
  CHECK(run({"verify"}).code == 2);
}
