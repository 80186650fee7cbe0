#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lagmatch/cli.hpp"
#include "lagmatch/document.hpp"
#include "lagmatch/errors.hpp"
#include "lagmatch/rational.hpp"

using namespace lagmatch;
using nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(CommandRequest req) {
  std::ostringstream out, err;
  const int code = run_command(req, out, err);
  return {code, out.str(), err.str()};
}

CommandRequest on_fixture(const std::string& command, const std::string& fixture, bool json = true) {
  CommandRequest r;
  r.command = command;
  r.fixture = fixture;
  r.json = json;
  return r;
}

/// Writes `text` to a fresh file in the temp directory.
std::string temp_document(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("lagmatch_test_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

std::string shell(const std::string& command) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
  pclose(pipe);
  return output;
}

}  // namespace

TEST_CASE("every fixture parses") {
  const auto names = fixture_names();
  CHECK(names.size() >= 10);
  CHECK(std::is_sorted(names.begin(), names.end()));
  for (const auto& name : names) CHECK_NOTHROW(parse_document_text(fixture_text(name)));
  CHECK_THROWS_AS(fixture_text("missing"), std::out_of_range);
}

TEST_CASE("dim reports") {
  const Run torus = run(on_fixture("dim", "torus"));
  REQUIRE(torus.code == kExitOk);
  const auto j = ordered_json::parse(torus.out);
  CHECK(j["spinc"][0]["formal_dimension"] == 1);
  CHECK(j["spinc"][0]["admissibility"]["regime"] == "MonotoneRegime");

  const auto s = ordered_json::parse(run(on_fixture("dim", "s2xs2")).out);
  std::vector<long long> dims;
  for (const auto& e : s["spinc"]) dims.push_back(e["formal_dimension"].get<long long>());
  CHECK(dims == std::vector<long long>{0, 6, 10, -2});

  const auto k = ordered_json::parse(run(on_fixture("dim", "klein")).out);
  CHECK(k["spinc"][0]["formal_dimension"] == 4);
}

TEST_CASE("tqft-eval reports") {
  const auto a = ordered_json::parse(run(on_fixture("tqft-eval", "anosov")).out);
  CHECK(parse_rational(a["supertrace"].get<std::string>()) == -1);
  CHECK(a["fibered_oracle"]["agreement"] == true);
  const auto a2 = ordered_json::parse(run(on_fixture("tqft-eval", "anosov_n2")).out);
  CHECK(parse_rational(a2["value"].get<std::string>()) == 2);
  const auto sep = ordered_json::parse(run(on_fixture("tqft-eval", "separating")).out);
  CHECK(parse_rational(sep["value"].get<std::string>()) == 0);
  CHECK(sep.contains("separating"));
  const auto sphere = ordered_json::parse(run(on_fixture("tqft-eval", "sphere")).out);
  CHECK(parse_rational(sphere["value"].get<std::string>()) == 3);
}

TEST_CASE("example, cz and gradings reports") {
  CommandRequest ex;
  ex.command = "example";
  ex.example_name = "s2xs2";
  ex.m = 2;
  ex.n = 1;
  ex.json = true;
  const auto e = ordered_json::parse(run(ex).out);
  CHECK(e["invariant"] == "U^5");
  CHECK(parse_rational(e["value"].get<std::string>()) == 1);

  const auto cz = ordered_json::parse(run(on_fixture("cz", "cz_pair")).out);
  CHECK(cz["total"] == 4);
  const auto gr = ordered_json::parse(run(on_fixture("gradings", "gradings")).out);
  CHECK(gr["grading_modulus"] == 2);
  CHECK(gr["divisibility"] == true);
}

TEST_CASE("text rendering is line oriented") {
  const Run r = run(on_fixture("dim", "torus", false));
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("command: dim") == 0);
  CHECK(r.out.find("formal_dimension: 1") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run(on_fixture("dim", "nope")).code == kExitSchema);
  CommandRequest bad_example;
  bad_example.command = "example";
  bad_example.example_name = "nope";
  CHECK(run(bad_example).code == kExitSchema);

  CommandRequest malformed;
  malformed.command = "dim";
  malformed.input_file = temp_document("malformed", "{ not json");
  CHECK(run(malformed).code == kExitSchema);

  CommandRequest unknown_key;
  unknown_key.command = "dim";
  unknown_key.input_file = temp_document("unknown_key", R"({"fibration": {}, "extra": 1})");
  CHECK(run(unknown_key).code == kExitSchema);

  CHECK(run(on_fixture("cz", "cz_identity")).code == kExitInconsistent);

  CommandRequest not_symplectic;
  not_symplectic.command = "tqft-eval";
  not_symplectic.input_file = temp_document(
      "not_symplectic", R"({"morse_cycle": {"genus": 1, "points": 1, "moves": [{"kind": "twist", "matrix": [[2, 0], [0, 1]]}]}})");
  CHECK(run(not_symplectic).code == kExitInconsistent);

  CommandRequest open_cycle;
  open_cycle.command = "tqft-eval";
  open_cycle.input_file = temp_document(
      "open_cycle", R"({"morse_cycle": {"genus": 1, "points": 1, "moves": [{"kind": "down", "circle": [1, 0]}]}})");
  CHECK(run(open_cycle).code == kExitInconsistent);

  CommandRequest coarse;
  coarse.command = "cz";
  coarse.input_file = temp_document("coarse", R"({"query": {"cz": {"paths": [[
      [[1, 0], [0, 1]],
      [[-1, 0], [0, -1]],
      [[0.5403023058681398, -0.8414709848078965], [0.8414709848078965, 0.5403023058681398]]]]}}})");
  CHECK(run(coarse).code == kExitResolution);
}

TEST_CASE("rationals survive the JSON round trip") {
  for (const Rational& q : {Rational(0), Rational(-7, 3), Rational(1, 2), Rational(Integer("123456789012345678901234567890"))}) {
    const ordered_json j = to_string(q);
    CHECK(parse_rational(ordered_json::parse(j.dump()).get<std::string>()) == q);
  }
}

TEST_CASE("the executable is deterministic across thread counts") {
  const std::string bin = LAGMATCH_BINARY;
  for (const auto& fixture : fixture_names()) {
    for (const std::string command : {"dim", "tqft-eval"}) {
      const std::string args = " " + command + " --fixture " + fixture + " --json 2>/dev/null";
      const std::string one = shell("LAGMATCH_THREADS=1 " + bin + args);
      CHECK(shell("LAGMATCH_THREADS=1 " + bin + args) == one);
      CHECK(shell("LAGMATCH_THREADS=4 " + bin + args) == one);
    }
  }
  CHECK(shell("LAGMATCH_THREADS=x " + bin + " dim --fixture torus 2>&1").find("LAGMATCH_THREADS") != std::string::npos);
}
